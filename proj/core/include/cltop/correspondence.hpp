#ifndef CLTOP_CORRESPONDENCE_HPP
#define CLTOP_CORRESPONDENCE_HPP

#include <vector>

#include "cltop/bitopology.hpp"
#include "cltop/frames.hpp"

namespace cltop {

// tau0 = up-sets of R, tau1 = up-sets of S.
BitopSpace frame_to_space(const VisserFrame& f);

// R = specialization relation of tau0, S = reflexive specialization
// preorder of tau1. Requires tau0 scattered; the result always satisfies
// the Visser frame invariants.
VisserFrame space_to_frame(const BitopSpace& sp);

// frame_to_space(space_to_frame(sp)) == sp, on the nose. Requires tau0
// scattered. Equality is structural; no isomorphism quotient here.
bool check_roundtrip(const BitopSpace& sp);

// For each formula, frame validity and bitopological validity agree on the
// up-set translation; returns the conjunction over the list.
bool logic_agreement_sample(const VisserFrame& f, const std::vector<Formula>& formulas);

}  // namespace cltop

#endif
