#ifndef CLTOP_SEARCH_HPP
#define CLTOP_SEARCH_HPP

#include <cstdint>
#include <optional>
#include <vector>

#include "cltop/frames.hpp"

namespace cltop {

inline constexpr int kMaxSearchCarrier = 5;

enum class SearchVerdict { ValidUpToN, Countermodel, Satisfiable, UnsatisfiableUpToN };

std::string to_string(SearchVerdict v);

struct SearchWitness {
    VisserModel model;
    int point;
};

struct SearchResult {
    SearchVerdict verdict;
    std::optional<SearchWitness> witness;  // present iff Countermodel/Satisfiable
    std::uint64_t frames_explored = 0;
};

struct SearchOptions {
    // Isomorphism deduplication via minimum-under-permutation canonical
    // forms. Unset means automatic: off up to 3 points, on for 4 and 5.
    std::optional<bool> dedup;
};

// All strict partial orders (transitive and irreflexive) on the carrier,
// ordered by edge count then by row-major bitmask.
const std::vector<Relation>& enumerate_strict_orders(int size);

// All preorders (reflexive and transitive), same order.
const std::vector<Relation>& enumerate_preorders(int size);

// Streams every Visser frame on {0..size-1} whose property report satisfies
// the class condition, R-major in the documented order. With dedup only the
// canonical representative of each isomorphism class is emitted.
class FrameEnumerator {
public:
    FrameEnumerator(int size, LogicClass cls, SearchOptions opts = {});
    std::optional<VisserFrame> next();

private:
    int size_;
    LogicClass cls_;
    bool dedup_;
    const std::vector<Relation>* rs_;
    const std::vector<Relation>* ss_;
    std::size_t ri_ = 0;
    std::size_t si_ = 0;
    bool r_admitted_ = false;
    std::vector<std::vector<int>> min_perms_;  // permutations fixing the canonical R
};

std::vector<VisserFrame> enumerate_frames(int size, LogicClass cls, SearchOptions opts = {});

// First frame/valuation/point refuting the formula over frames of the class
// with 1..max_n points, in deterministic enumeration order. The witness is
// re-checked through forces before being returned.
SearchResult find_countermodel(const Formula& f, LogicClass cls, int max_n,
                               SearchOptions opts = {});

// First frame/valuation/point satisfying every formula of the list.
SearchResult find_model(const std::vector<Formula>& gamma, LogicClass cls, int max_n,
                        SearchOptions opts = {});

}  // namespace cltop

#endif
