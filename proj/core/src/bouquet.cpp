#include "cltop/bouquet.hpp"

#include <string>

namespace cltop {

namespace {

struct Layout {
    std::vector<int> offset;  // first bouquet index of each component's points
    int carrier;

    explicit Layout(const BouquetSpec& spec) {
        int at = 0;
        offset.reserve(spec.components.size());
        for (const BitopSpace& c : spec.components) {
            offset.push_back(at);
            at += c.size() - 1;
        }
        carrier = at + 1;  // star
    }

    int to_bouquet(const BouquetSpec& spec, int n, int p) const {
        const int base = spec.basepoints[n];
        if (p == base) return carrier - 1;
        return offset[n] + (p < base ? p : p - 1);
    }
};

BouquetSpec validate_and_fill(BouquetSpec spec) {
    const std::size_t count = spec.components.size();
    if (count == 0) throw InvalidInputError("bouquet needs at least one component");
    if (spec.basepoints.size() != count)
        throw InvalidInputError("one basepoint per component required");
    if (!spec.punctured.empty() && spec.punctured.size() != count)
        throw InvalidInputError("punctured neighborhoods must be omitted or given per component");
    if (spec.ultrafilter_index < 0 || spec.ultrafilter_index >= static_cast<int>(count))
        throw InvalidInputError("ultrafilter index must name a component");

    const bool fill = spec.punctured.empty();
    if (fill) spec.punctured.reserve(count);
    for (std::size_t n = 0; n < count; ++n) {
        const BitopSpace& c = spec.components[n];
        const int base = spec.basepoints[n];
        if (base < 0 || base >= c.size())
            throw InvalidInputError("basepoint outside component " + std::to_string(n));
        if (!c.tau0().is_scattered())
            throw NotScatteredError("component " + std::to_string(n) + " has a non-scattered tau0");
        if (fill) {
            spec.punctured.push_back(c.tau0().punctured_neighborhood(base));
        } else {
            const Subset& y = spec.punctured[n];
            if (y.width() != c.size())
                throw InvalidInputError("punctured neighborhood width mismatch in component " +
                                        std::to_string(n));
            if (!y.test(base))
                throw InvalidInputError("punctured neighborhood must contain the basepoint");
            if (!c.tau0().is_open(y) || !c.tau0().is_open(y.without(base)))
                throw InvalidInputError("punctured neighborhood of component " + std::to_string(n) +
                                        " must be open with an open puncture");
        }
    }
    return spec;
}

}  // namespace

int BouquetSpace::to_bouquet(int component, int point) const {
    if (component < 0 || component >= static_cast<int>(spec_.components.size()))
        throw InvalidInputError("component index out of range");
    const BitopSpace& c = spec_.components[component];
    if (point < 0 || point >= c.size())
        throw InvalidInputError("point outside component carrier");
    return Layout(spec_).to_bouquet(spec_, component, point);
}

Subset BouquetSpace::punctured_image(int component) const {
    const Subset& y = spec_.punctured[component];
    const int base = spec_.basepoints[component];
    Subset out = Subset::empty_set(space_.size());
    for (int p : y.points())
        if (p != base) out = out.with(to_bouquet(component, p));
    return out;
}

Subset BouquetSpace::glued_region() const {
    Subset out = Subset::single(space_.size(), star());
    for (std::size_t n = 0; n < spec_.components.size(); ++n)
        out = out | punctured_image(static_cast<int>(n));
    return out;
}

BouquetSpace build(const BouquetSpec& raw) {
    BouquetSpec spec = validate_and_fill(raw);
    const Layout layout(spec);
    const int carrier = layout.carrier;
    if (carrier > kMaxCarrier)
        throw TooLargeError("bouquet carrier would have " + std::to_string(carrier) +
                            " points; the cap is " + std::to_string(kMaxCarrier));

    const int count = static_cast<int>(spec.components.size());
    const int star = carrier - 1;

    // Restriction of a bouquet subset to component n, identifying the star
    // with the basepoint.
    auto restrict_to = [&](std::uint32_t u, int n) {
        const BitopSpace& c = spec.components[n];
        const int base = spec.basepoints[n];
        std::uint32_t out = 0;
        for (int p = 0; p < c.size(); ++p) {
            if (p == base) continue;
            if ((u >> layout.to_bouquet(spec, n, p)) & 1u) out |= std::uint32_t{1} << p;
        }
        if ((u >> star) & 1u) out |= std::uint32_t{1} << base;
        return out;
    };

    const int k = spec.ultrafilter_index;
    auto in_tau0 = [&](std::uint32_t u) {
        for (int n = 0; n < count; ++n) {
            const BitopSpace& c = spec.components[n];
            const std::uint32_t y = spec.punctured[n].bits();
            const std::uint32_t base_bit = std::uint32_t{1} << spec.basepoints[n];
            // (i) the trace on the punctured neighborhood is open there
            const std::uint32_t trace = restrict_to(u, n) & y & ~base_bit;
            if (!c.tau0().is_open(Subset(c.size(), trace))) return false;
        }
        if ((u >> star) & 1u) {
            // (ii) with a principal ultrafilter the star clause reduces to
            // the single index it concentrates on
            const BitopSpace& c = spec.components[k];
            const std::uint32_t restricted = restrict_to(u, k) & spec.punctured[k].bits();
            if (!c.tau0().is_open(Subset(c.size(), restricted))) return false;
        }
        return true;
    };

    auto in_tau1 = [&](std::uint32_t u) {
        for (int n = 0; n < count; ++n) {
            const BitopSpace& c = spec.components[n];
            if (!c.tau1().is_open(Subset(c.size(), restrict_to(u, n)))) return false;
        }
        return true;
    };

    std::vector<Subset> fam0, fam1;
    const std::uint32_t full = full_mask(carrier);
    for (std::uint32_t u = 0;; ++u) {
        if (in_tau0(u)) fam0.emplace_back(carrier, u);
        if (in_tau1(u)) fam1.emplace_back(carrier, u);
        if (u == full) break;
    }

    // Closure holds for every valid ingredient list; a failure here is a bug.
    FiniteSpace t0 = [&] {
        try {
            return FiniteSpace::from_open_family(carrier, fam0);
        } catch (const InvalidInputError& e) {
            throw Error(std::string("internal: bouquet tau0 is not a topology: ") + e.what());
        }
    }();
    FiniteSpace t1 = [&] {
        try {
            return FiniteSpace::from_open_family(carrier, fam1);
        } catch (const InvalidInputError& e) {
            throw Error(std::string("internal: bouquet tau1 is not a topology: ") + e.what());
        }
    }();

    std::vector<std::pair<int, int>> map(static_cast<std::size_t>(carrier) - 1);
    for (int n = 0; n < count; ++n)
        for (int p = 0; p < spec.components[n].size(); ++p)
            if (p != spec.basepoints[n])
                map[layout.to_bouquet(spec, n, p)] = {n, p};

    return BouquetSpace(std::move(spec), BitopSpace(std::move(t0), std::move(t1)), std::move(map));
}

namespace {

void check_valuations(const BouquetSpace& b, const std::vector<Valuation>& vals) {
    const auto& comps = b.spec().components;
    if (vals.size() != comps.size())
        throw InvalidInputError("one valuation per component required");
    for (std::size_t n = 0; n < vals.size(); ++n) {
        if (vals[n].width() != comps[n].size())
            throw InvalidInputError("valuation width mismatch in component " + std::to_string(n));
        if (vals[n].variables() != vals[0].variables())
            throw InvalidInputError("component valuations must bind the same variables");
    }
}

}  // namespace

Valuation lift_valuation(const BouquetSpace& b, const std::vector<Valuation>& vals) {
    check_valuations(b, vals);
    const int carrier = b.space().size();
    const int k = b.spec().ultrafilter_index;
    Valuation out(carrier);
    for (int var : vals[0].variables()) {
        Subset value = Subset::empty_set(carrier);
        for (std::size_t n = 0; n < vals.size(); ++n) {
            const int base = b.spec().basepoints[n];
            for (int p : vals[n].get(var).points())
                if (p != base) value = value.with(b.to_bouquet(static_cast<int>(n), p));
        }
        if (vals[k].get(var).test(b.spec().basepoints[k])) value = value.with(b.star());
        out.set(var, value);
    }
    return out;
}

bool verify_truth_lemma_components(const BouquetSpace& b, const std::vector<Valuation>& vals,
                                   const Formula& f) {
    const Subset lifted = eval(b.space(), lift_valuation(b, vals), f);
    for (std::size_t n = 0; n < vals.size(); ++n) {
        const Subset component = eval(b.spec().components[n], vals[n], f);
        const int base = b.spec().basepoints[n];
        for (int p : b.spec().punctured[n].points()) {
            if (p == base) continue;
            if (component.test(p) != lifted.test(b.to_bouquet(static_cast<int>(n), p)))
                return false;
        }
    }
    return true;
}

bool verify_truth_lemma_star(const BouquetSpace& b, const std::vector<Valuation>& vals,
                             const Formula& f) {
    const int k = b.spec().ultrafilter_index;
    const Subset lifted = eval(b.space(), lift_valuation(b, vals), f);
    const Subset component = eval(b.spec().components[k], vals[k], f);
    return lifted.test(b.star()) == component.test(b.spec().basepoints[k]);
}

bool dead_end_check(const BouquetSpace& b, const std::vector<Valuation>& vals) {
    const Subset region = b.glued_region();
    const Formula box_bot = Formula::box(Formula::bot());
    const Subset necessarily_false = eval(b.space(), lift_valuation(b, vals), box_bot);
    for (int x = 0; x < b.space().size(); ++x) {
        if (region.test(x)) continue;
        if (!b.space().tau0().is_open(Subset::single(b.space().size(), x))) return false;
        if (!necessarily_false.test(x)) return false;
    }
    return true;
}

Valuation lift_valuation(const BouquetSpec& spec, const std::vector<Valuation>& vals) {
    return lift_valuation(build(spec), vals);
}

bool verify_truth_lemma_components(const BouquetSpec& spec, const std::vector<Valuation>& vals,
                                   const Formula& f) {
    return verify_truth_lemma_components(build(spec), vals, f);
}

bool verify_truth_lemma_star(const BouquetSpec& spec, const std::vector<Valuation>& vals,
                             const Formula& f) {
    return verify_truth_lemma_star(build(spec), vals, f);
}

bool dead_end_check(const BouquetSpec& spec, const std::vector<Valuation>& vals) {
    return dead_end_check(build(spec), vals);
}

}  // namespace cltop
