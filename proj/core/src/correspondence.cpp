#include "cltop/correspondence.hpp"

namespace cltop {

BitopSpace frame_to_space(const VisserFrame& f) {
    return BitopSpace(upset_topology(f.r()), upset_topology(f.s()));
}

VisserFrame space_to_frame(const BitopSpace& sp) {
    if (!sp.tau0().is_scattered())
        throw NotScatteredError("space_to_frame requires a scattered tau0");
    Relation r = sp.tau0().specialization_relation();
    // x S y iff y lies in every tau1-open around x; reflexive by definition.
    const int n = sp.size();
    Relation s(n);
    for (int x = 0; x < n; ++x)
        for (int y = 0; y < n; ++y)
            if (sp.tau1().minimal_open(x).test(y)) s.add(x, y);
    return VisserFrame(std::move(r), std::move(s));
}

bool check_roundtrip(const BitopSpace& sp) {
    return frame_to_space(space_to_frame(sp)) == sp;
}

bool logic_agreement_sample(const VisserFrame& f, const std::vector<Formula>& formulas) {
    const BitopSpace sp = frame_to_space(f);
    for (const Formula& phi : formulas)
        if (is_valid_on_frame(f, phi) != is_valid(sp, phi)) return false;
    return true;
}

}  // namespace cltop
