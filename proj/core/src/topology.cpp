#include "cltop/topology.hpp"

#include <algorithm>
#include <cassert>
#include <string>

namespace cltop {

namespace {

int check_size(int size) {
    if (size < 1 || size > kMaxCarrier)
        throw InvalidInputError("carrier size must be between 1 and " +
                                std::to_string(kMaxCarrier) + ", got " + std::to_string(size));
    return size;
}

std::vector<std::uint32_t> compute_minimal_opens(int size, const std::vector<std::uint32_t>& opens) {
    std::vector<std::uint32_t> mins(size, full_mask(size));
    for (std::uint32_t u : opens)
        for (int x = 0; x < size; ++x)
            if ((u >> x) & 1u) mins[x] &= u;
    return mins;
}

}  // namespace

FiniteSpace::FiniteSpace(int size, std::vector<std::uint32_t> opens)
    : size_(check_size(size)), opens_(std::move(opens)) {
    std::sort(opens_.begin(), opens_.end());
    opens_.erase(std::unique(opens_.begin(), opens_.end()), opens_.end());
    min_open_ = compute_minimal_opens(size_, opens_);
}

FiniteSpace FiniteSpace::from_open_family(int size, const std::vector<Subset>& opens) {
    check_size(size);
    std::vector<std::uint32_t> masks;
    masks.reserve(opens.size());
    for (const Subset& s : opens) {
        if (s.width() != size)
            throw InvalidInputError("open of width " + std::to_string(s.width()) +
                                    " in a space of size " + std::to_string(size));
        masks.push_back(s.bits());
    }
    std::sort(masks.begin(), masks.end());
    masks.erase(std::unique(masks.begin(), masks.end()), masks.end());

    const std::uint32_t full = full_mask(size);
    std::vector<bool> member(std::size_t{1} << size, false);
    for (std::uint32_t m : masks) member[m] = true;
    if (!member[0]) throw InvalidInputError("open family lacks the empty set");
    if (!member[full]) throw InvalidInputError("open family lacks the full carrier");
    for (std::uint32_t a : masks)
        for (std::uint32_t b : masks) {
            if (!member[a & b])
                throw InvalidInputError("open family not closed under intersection");
            if (!member[a | b])
                throw InvalidInputError("open family not closed under union");
        }
    return FiniteSpace(size, std::move(masks));
}

std::vector<Subset> FiniteSpace::opens() const {
    std::vector<Subset> out;
    out.reserve(opens_.size());
    for (std::uint32_t m : opens_) out.emplace_back(size_, m);
    return out;
}

void FiniteSpace::check_width(const Subset& y) const {
    if (y.width() != size_)
        throw InvalidInputError("subset width " + std::to_string(y.width()) +
                                " does not match carrier size " + std::to_string(size_));
}

bool FiniteSpace::is_open(const Subset& y) const {
    check_width(y);
    return std::binary_search(opens_.begin(), opens_.end(), y.bits());
}

Subset FiniteSpace::derived_set(const Subset& y) const {
    check_width(y);
    std::uint32_t d = 0;
    for (int x = 0; x < size_; ++x) {
        const std::uint32_t bit = std::uint32_t{1} << x;
        if ((min_open_[x] & y.bits()) & ~bit) d |= bit;
    }
    return Subset(size_, d);
}

Subset FiniteSpace::co_derived_set(const Subset& y) const {
    return ~derived_set(~y);
}

Subset FiniteSpace::minimal_open(int point) const {
    if (point < 0 || point >= size_)
        throw InvalidInputError("point " + std::to_string(point) +
                                " outside carrier of size " + std::to_string(size_));
    return Subset(size_, min_open_[point]);
}

Relation FiniteSpace::specialization_relation() const {
    Relation r(size_);
    for (int x = 0; x < size_; ++x)
        for (int y = 0; y < size_; ++y)
            if (x != y && ((min_open_[x] >> y) & 1u)) r.add(x, y);
    return r;
}

bool FiniteSpace::is_scattered() const {
    return specialization_relation().acyclic();
}

Subset FiniteSpace::punctured_neighborhood(int point) const {
    if (!is_scattered())
        throw NotScatteredError("punctured_neighborhood requires a scattered space");
    Subset u = minimal_open(point);
    Subset punctured = u.without(point);
    // Open in any finite scattered space: the puncture of a minimal open is
    // upward closed under the (acyclic) specialization relation.
    assert(is_open(punctured));
    if (!is_open(punctured))
        throw Error("internal: puncture of a minimal open is not open");
    return u;
}

Subset FiniteSpace::interior(const Subset& y) const {
    check_width(y);
    std::uint32_t in = 0;
    for (int x = 0; x < size_; ++x)
        if ((min_open_[x] & ~y.bits()) == 0) in |= std::uint32_t{1} << x;
    return Subset(size_, in);
}

FiniteSpace make_topology(int size, const std::vector<Subset>& generators) {
    check_size(size);
    std::vector<bool> member(std::size_t{1} << size, false);
    std::vector<std::uint32_t> family;
    auto push = [&](std::uint32_t m) {
        if (!member[m]) {
            member[m] = true;
            family.push_back(m);
        }
    };
    push(0);
    push(full_mask(size));
    for (const Subset& g : generators) {
        if (g.width() != size)
            throw InvalidInputError("generator width " + std::to_string(g.width()) +
                                    " does not match carrier size " + std::to_string(size));
        push(g.bits());
    }

    // Close under pairwise intersection and union; for a finite family that
    // yields the full generated topology. Each element is combined with every
    // element present when it is dequeued, so every pair is seen once.
    for (std::size_t i = 0; i < family.size(); ++i)
        for (std::size_t j = 0; j < i; ++j) {
            push(family[i] & family[j]);
            push(family[i] | family[j]);
        }
    return FiniteSpace(size, std::move(family));
}

FiniteSpace upset_topology(const Relation& r) {
    const int n = r.size();
    std::vector<std::uint32_t> family;
    const std::uint32_t full = full_mask(n);
    for (std::uint32_t y = 0; y <= full; ++y) {
        bool closed = true;
        for (int x = 0; x < n && closed; ++x)
            if ((y >> x) & 1u) closed = (r.successors(x) & ~y) == 0;
        if (closed) family.push_back(y);
        if (y == full) break;  // guards against wrap at width 32
    }
    return FiniteSpace(n, std::move(family));
}

FiniteSpace discrete_topology(int size) {
    check_size(size);
    return upset_topology(Relation(size));
}

FiniteSpace indiscrete_topology(int size) {
    check_size(size);
    return FiniteSpace::from_open_family(
        size, {Subset::empty_set(size), Subset::full_set(size)});
}

std::vector<FiniteSpace> all_topologies(int size) {
    check_size(size);
    if (size > 3)
        throw TooLargeError("all_topologies enumerates subset families; size must be <= 3");
    const std::uint32_t full = full_mask(size);
    // Candidate families are arbitrary sets of proper nonempty subsets, each
    // extended with {} and the carrier, filtered for closure.
    std::vector<std::uint32_t> proper;
    for (std::uint32_t y = 1; y < full; ++y) proper.push_back(y);

    std::vector<FiniteSpace> out;
    const std::uint32_t combos = std::uint32_t{1} << proper.size();
    for (std::uint32_t pick = 0; pick < combos; ++pick) {
        std::vector<Subset> family{Subset::empty_set(size), Subset::full_set(size)};
        for (std::size_t i = 0; i < proper.size(); ++i)
            if ((pick >> i) & 1u) family.emplace_back(size, proper[i]);
        try {
            out.push_back(FiniteSpace::from_open_family(size, family));
        } catch (const InvalidInputError&) {
            // not closed; skip
        }
    }
    return out;
}

}  // namespace cltop
