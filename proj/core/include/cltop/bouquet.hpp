#ifndef CLTOP_BOUQUET_HPP
#define CLTOP_BOUQUET_HPP

#include <utility>
#include <vector>

#include "cltop/bitopology.hpp"

namespace cltop {

// Ingredients of a bouquet: pointed component spaces glued at a fresh star
// point. The index family is finite, so the ultrafilter is principal and is
// given by the single index it concentrates on.
//
// Invariants checked by build():
//   - every component's tau0 is scattered;
//   - punctured[n] is a tau0-open around basepoints[n] whose puncture is
//     open too (left empty, it is filled with minimal opens);
//   - ultrafilter_index < components.size();
//   - the glued carrier has at most 16 points.
struct BouquetSpec {
    std::vector<BitopSpace> components;
    std::vector<int> basepoints;
    std::vector<Subset> punctured;  // may be empty: auto-filled on build
    int ultrafilter_index = 0;
};

// The glued space. Component points other than the basepoints are laid out
// in component order with their relative order kept; the star is the last
// carrier point.
class BouquetSpace {
public:
    const BouquetSpec& spec() const { return spec_; }
    const BitopSpace& space() const { return space_; }
    int star() const { return space_.size() - 1; }

    // bouquet point -> (component, original point); the star is not mapped.
    const std::vector<std::pair<int, int>>& component_map() const { return component_map_; }

    // Basepoints map to the star.
    int to_bouquet(int component, int point) const;

    // Image of punctured[n] minus the basepoint, in bouquet coordinates.
    Subset punctured_image(int component) const;

    // Union of all punctured images plus the star: the region where the
    // component truth lemma applies. Its complement is dead ends.
    Subset glued_region() const;

private:
    BouquetSpace(BouquetSpec spec, BitopSpace space, std::vector<std::pair<int, int>> map)
        : spec_(std::move(spec)), space_(std::move(space)), component_map_(std::move(map)) {}

    BouquetSpec spec_;
    BitopSpace space_;
    std::vector<std::pair<int, int>> component_map_;

    friend BouquetSpace build(const BouquetSpec& spec);
};

BouquetSpace build(const BouquetSpec& spec);

// One valuation per component, all binding the same variables. Off the
// basepoints the lift inherits the component values; at the star a variable
// holds iff it holds at the basepoint of the ultrafilter component.
Valuation lift_valuation(const BouquetSpace& b, const std::vector<Valuation>& vals);

// Truth transfers between a component and the bouquet on the punctured
// neighborhoods: for every n and x in punctured[n] minus the basepoint,
// x satisfies the formula in component n iff its image does in the bouquet.
bool verify_truth_lemma_components(const BouquetSpace& b, const std::vector<Valuation>& vals,
                                   const Formula& f);

// Truth at the star matches truth at the basepoint of the ultrafilter
// component.
bool verify_truth_lemma_star(const BouquetSpace& b, const std::vector<Valuation>& vals,
                             const Formula& f);

// Points outside the glued region are dead ends: their singletons are open
// and they satisfy []F.
bool dead_end_check(const BouquetSpace& b, const std::vector<Valuation>& vals);

// Spec-level conveniences; each builds the bouquet first.
Valuation lift_valuation(const BouquetSpec& spec, const std::vector<Valuation>& vals);
bool verify_truth_lemma_components(const BouquetSpec& spec, const std::vector<Valuation>& vals,
                                   const Formula& f);
bool verify_truth_lemma_star(const BouquetSpec& spec, const std::vector<Valuation>& vals,
                             const Formula& f);
bool dead_end_check(const BouquetSpec& spec, const std::vector<Valuation>& vals);

}  // namespace cltop

#endif
