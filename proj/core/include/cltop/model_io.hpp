#ifndef CLTOP_MODEL_IO_HPP
#define CLTOP_MODEL_IO_HPP

#include <optional>
#include <string>

#include "cltop/bitopology.hpp"
#include "cltop/frames.hpp"

namespace cltop {

// On-disk JSON container shared by every subcommand.
//
//   {"kind": "frame"|"space"|"model", "size": n,
//    "R": [[x,y],...], "S": [[x,y],...],          for frame and model
//    "opens0": [[p,...],...], "opens1": [...],    for space
//    "valuation": {"p0": [p,...], ...}}           required for model,
//                                                 optional otherwise
//
// Loading validates the module invariants (frames reject broken relations,
// spaces reject non-topologies). Serialization is canonical: fixed key
// order, pairs and opens sorted, two-space indent, trailing newline.
struct ModelFile {
    enum class Kind { Frame, Space, Model };

    Kind kind;
    std::optional<VisserFrame> frame;   // Frame and Model
    std::optional<BitopSpace> space;    // Space
    std::optional<Valuation> valuation;

    int size() const;

    static ModelFile of_frame(VisserFrame f, std::optional<Valuation> v = std::nullopt);
    static ModelFile of_model(VisserFrame f, Valuation v);
    static ModelFile of_space(BitopSpace sp, std::optional<Valuation> v = std::nullopt);
};

ModelFile parse_model_json(const std::string& text);
std::string serialize_model(const ModelFile& m);

ModelFile load_model_file(const std::string& path);
void save_model_file(const ModelFile& m, const std::string& path);

}  // namespace cltop

#endif
