#ifndef CLTOP_TOPOLOGY_HPP
#define CLTOP_TOPOLOGY_HPP

#include <cstdint>
#include <vector>

#include "cltop/relation.hpp"
#include "cltop/subset.hpp"

namespace cltop {

// A topology on a finite carrier, with the open family fully materialized.
// Finite spaces are automatically Alexandroff, so every point has a minimal
// open neighborhood; those are precomputed and drive the derived-set and
// interior computations.
class FiniteSpace {
public:
    // The family must already be a topology (contain the empty set and the
    // carrier, and be closed under pairwise intersection and union).
    static FiniteSpace from_open_family(int size, const std::vector<Subset>& opens);

    int size() const { return size_; }

    // Sorted ascending by mask value; bit i of a mask is point i.
    const std::vector<std::uint32_t>& open_masks() const { return opens_; }

    // min_open_masks()[x] is minimal_open(x) as a raw mask.
    const std::vector<std::uint32_t>& min_open_masks() const { return min_open_; }
    std::vector<Subset> opens() const;
    bool is_open(const Subset& y) const;

    // Points whose every neighborhood meets Y in a point other than
    // themselves. Computed through minimal opens.
    Subset derived_set(const Subset& y) const;

    // Complement of the derived set of the complement.
    Subset co_derived_set(const Subset& y) const;

    // Intersection of all opens containing the point; open itself.
    Subset minimal_open(int point) const;

    // x -> y iff x != y and y lies in every open containing x.
    Relation specialization_relation() const;

    // Every nonempty subset has a point isolated in it. Decided by cycle
    // detection on the specialization relation; the 2^n subset check lives
    // in the tests as an independent oracle.
    bool is_scattered() const;

    // An open neighborhood of the point whose puncture is still open.
    // Requires a scattered space; returns the minimal open.
    Subset punctured_neighborhood(int point) const;

    // Union of all opens contained in Y.
    Subset interior(const Subset& y) const;

    bool operator==(const FiniteSpace& o) const {
        return size_ == o.size_ && opens_ == o.opens_;
    }

private:
    FiniteSpace(int size, std::vector<std::uint32_t> opens);

    void check_width(const Subset& y) const;

    int size_;
    std::vector<std::uint32_t> opens_;     // sorted, deduplicated
    std::vector<std::uint32_t> min_open_;  // per point

    friend FiniteSpace make_topology(int size, const std::vector<Subset>& generators);
    friend FiniteSpace upset_topology(const Relation& r);
};

// Smallest topology containing the generators.
FiniteSpace make_topology(int size, const std::vector<Subset>& generators);

// The R-upward-closed subsets.
FiniteSpace upset_topology(const Relation& r);

FiniteSpace discrete_topology(int size);
FiniteSpace indiscrete_topology(int size);

// Every topology on a carrier of the given size, enumerated by filtering
// all subset families. Exhaustive and oracle-grade, so limited to size <= 3.
std::vector<FiniteSpace> all_topologies(int size);

}  // namespace cltop

#endif
