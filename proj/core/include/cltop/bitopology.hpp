#ifndef CLTOP_BITOPOLOGY_HPP
#define CLTOP_BITOPOLOGY_HPP

#include <optional>

#include "cltop/formula.hpp"
#include "cltop/topology.hpp"
#include "cltop/valuation.hpp"

namespace cltop {

// Two topologies over one carrier. tau0 interprets Box/Dia through derived
// sets; tau1 supplies the opens quantified over by the |> operator.
class BitopSpace {
public:
    BitopSpace(FiniteSpace tau0, FiniteSpace tau1);

    int size() const { return tau0_.size(); }
    const FiniteSpace& tau0() const { return tau0_; }
    const FiniteSpace& tau1() const { return tau1_; }

    bool operator==(const BitopSpace& o) const {
        return tau0_ == o.tau0_ && tau1_ == o.tau1_;
    }

private:
    FiniteSpace tau0_;
    FiniteSpace tau1_;
};

// { x | for every tau1-open U, x in d0(Y n U) implies x in d0(Z n U) }.
// Computed pointwise through minimal opens and the tau1 interior; the
// direct quantification over the materialized tau1 family is kept in the
// tests as an oracle.
Subset e_set(const BitopSpace& sp, const Subset& y, const Subset& z);

// Compositional truth set of the formula under the valuation.
Subset eval(const BitopSpace& sp, const Valuation& v, const Formula& f);

// True iff the truth set is the full carrier under every valuation of the
// variables occurring in the formula. Throws TooLargeError when
// #variables * size exceeds kValidityBitBound.
bool is_valid(const BitopSpace& sp, const Formula& f);

// First falsifying valuation in enumeration order, if any.
std::optional<Valuation> find_falsifying(const BitopSpace& sp, const Formula& f);

// Scatteredness of tau0 characterizes the CL-spaces.
bool is_cl_space(const BitopSpace& sp);

// The four equivalent IL-space characterizations, for a CL-space:
//   c1: the J5 instance <>p0 |> p0 is valid;
//   c2: d0(d0(Y) n U) <= d0(Y n U) for all Y and all tau1-opens U;
//   c3: d0(d0(~U) n U) is empty for all tau1-opens U;
//   c4: every tau1-open U has a tau0-open V <= U with d0(U \ V) empty.
struct ILCharClauses {
    bool c1, c2, c3, c4;
};

// Requires a CL-space, and size <= 8 for the subset quantification in c2.
ILCharClauses il_char_clauses(const BitopSpace& sp);

// Clause c3 alone, the cheapest of the four. Requires a CL-space.
bool is_il_space(const BitopSpace& sp);

// { V in tau0 | some U in tau1 has V <= U and d0(U \ V) empty }. Always a
// topology on the carrier.
FiniteSpace tau2(const BitopSpace& sp);

}  // namespace cltop

#endif
