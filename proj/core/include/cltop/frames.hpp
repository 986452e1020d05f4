#ifndef CLTOP_FRAMES_HPP
#define CLTOP_FRAMES_HPP

#include <optional>
#include <set>
#include <string>

#include "cltop/formula.hpp"
#include "cltop/relation.hpp"
#include "cltop/valuation.hpp"

namespace cltop {

// (W, R, S) with R transitive, irreflexive and acyclic (converse
// well-foundedness on a finite carrier) and S a preorder. The constructor
// rejects violations instead of repairing them.
class VisserFrame {
public:
    VisserFrame(Relation r, Relation s);

    int size() const { return r_.size(); }
    const Relation& r() const { return r_; }
    const Relation& s() const { return s_; }

    bool operator==(const VisserFrame& o) const = default;

private:
    Relation r_;
    Relation s_;
};

struct VisserModel {
    VisserFrame frame;
    Valuation valuation;
};

// Truth set of the formula in the model; |> reads
//   x forces a |> b  iff  every R-successor y forcing a has a witness z
//                         with x R z, y S z and z forcing b.
Subset truth_set(const VisserModel& m, const Formula& f);

bool forces(const VisserModel& m, int point, const Formula& f);

// Truth set against a flat (variable, subset-mask) list; lets exhaustive
// search loops reuse one buffer instead of rebuilding valuations.
std::uint32_t truth_set_bits(const VisserFrame& f,
                             const std::vector<std::pair<int, std::uint32_t>>& assign,
                             const Formula& phi);

// Validity over every valuation of the formula's variables; same
// enumeration bound and order as bitopology's is_valid.
bool is_valid_on_frame(const VisserFrame& f, const Formula& phi);
std::optional<Valuation> find_falsifying_on_frame(const VisserFrame& f, const Formula& phi);

// Direct quantifier evaluation of the frame conditions attached to the
// axioms M, J5, P and W, alongside the defining frame invariants.
struct FramePropertyReport {
    bool r_transitive;
    bool r_irreflexive;
    bool r_acyclic;
    bool s_reflexive;
    bool s_transitive;
    bool clm_cond;    // x S y R z  implies  x R z
    bool r_subset_s;  // R <= S
    bool ilp_cond;    // x R y S z  implies  x R z
    bool ilw_cond;    // R o S acyclic
};

FramePropertyReport properties(const VisserFrame& f);

enum class LogicClass { CL, CLM, IL, ILP, ILW, ILMCond };

std::string to_string(LogicClass c);
LogicClass logic_class_from_string(std::string_view name);

// Whether the report meets the (sufficient) frame condition of the class.
bool satisfies(const FramePropertyReport& rep, LogicClass c);

// The classes among CL, CLM, IL, ILP, ILW whose condition the frame meets.
// These conditions are sufficient for validity of the class axioms, so the
// result reads "condition holds", not "logic is exactly this".
std::set<LogicClass> classify(const VisserFrame& f);

}  // namespace cltop

#endif
