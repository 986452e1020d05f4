#include "cltop/search.hpp"

#include <algorithm>
#include <array>
#include <bit>
#include <mutex>
#include <numeric>

namespace cltop {

namespace {

void check_search_size(int size) {
    if (size < 1 || size > kMaxSearchCarrier)
        throw TooLargeError("frame enumeration bound exceeded: size must be between 1 and " +
                            std::to_string(kMaxSearchCarrier));
}

std::uint32_t relation_key(const Relation& r) {
    const int n = r.size();
    std::uint32_t key = 0;
    for (int x = 0; x < n; ++x)
        for (int y = 0; y < n; ++y)
            if (r.contains(x, y)) key |= std::uint32_t{1} << (x * n + y);
    return key;
}

std::uint32_t permuted_key(const Relation& r, const std::vector<int>& pi) {
    const int n = r.size();
    std::uint32_t key = 0;
    for (int x = 0; x < n; ++x)
        for (int y = 0; y < n; ++y)
            if (r.contains(x, y)) key |= std::uint32_t{1} << (pi[x] * n + pi[y]);
    return key;
}

const std::vector<std::vector<int>>& all_permutations(int n) {
    static std::array<std::vector<std::vector<int>>, kMaxSearchCarrier + 1> cache;
    static std::array<std::once_flag, kMaxSearchCarrier + 1> flags;
    std::call_once(flags[n], [n] {
        std::vector<int> pi(n);
        std::iota(pi.begin(), pi.end(), 0);
        do {
            cache[n].push_back(pi);
        } while (std::next_permutation(pi.begin(), pi.end()));
    });
    return cache[n];
}

// Enumeration order for both relation families: edge count ascending, then
// the row-major bitmask ascending. Pinned so frames_explored counts are
// reproducible.
std::vector<Relation> build_relations(int n, bool diagonal, bool want_irreflexive) {
    std::vector<std::pair<int, int>> slots;
    for (int x = 0; x < n; ++x)
        for (int y = 0; y < n; ++y)
            if (x != y) slots.emplace_back(x, y);

    std::vector<Relation> out;
    const std::uint32_t combos = std::uint32_t{1} << slots.size();
    for (std::uint32_t c = 0; c < combos; ++c) {
        Relation r = diagonal ? Relation::identity(n) : Relation(n);
        for (std::size_t i = 0; i < slots.size(); ++i)
            if ((c >> i) & 1u) r.add(slots[i].first, slots[i].second);
        if (!r.transitive()) continue;
        if (want_irreflexive && !r.irreflexive()) continue;
        out.push_back(std::move(r));
    }
    std::stable_sort(out.begin(), out.end(), [](const Relation& a, const Relation& b) {
        const std::uint32_t ka = relation_key(a), kb = relation_key(b);
        const int pa = std::popcount(ka), pb = std::popcount(kb);
        return pa != pb ? pa < pb : ka < kb;
    });
    return out;
}

}  // namespace

const std::vector<Relation>& enumerate_strict_orders(int size) {
    check_search_size(size);
    static std::array<std::vector<Relation>, kMaxSearchCarrier + 1> cache;
    static std::array<std::once_flag, kMaxSearchCarrier + 1> flags;
    std::call_once(flags[size], [size] { cache[size] = build_relations(size, false, true); });
    return cache[size];
}

const std::vector<Relation>& enumerate_preorders(int size) {
    check_search_size(size);
    static std::array<std::vector<Relation>, kMaxSearchCarrier + 1> cache;
    static std::array<std::once_flag, kMaxSearchCarrier + 1> flags;
    std::call_once(flags[size], [size] { cache[size] = build_relations(size, true, false); });
    return cache[size];
}

FrameEnumerator::FrameEnumerator(int size, LogicClass cls, SearchOptions opts)
    : size_(size),
      cls_(cls),
      dedup_(opts.dedup.value_or(size >= 4)),
      rs_(&enumerate_strict_orders(size)),
      ss_(&enumerate_preorders(size)) {}

std::optional<VisserFrame> FrameEnumerator::next() {
    while (ri_ < rs_->size()) {
        const Relation& r = (*rs_)[ri_];
        if (!r_admitted_) {
            si_ = 0;
            min_perms_.clear();
            if (dedup_) {
                const std::uint32_t rkey = relation_key(r);
                std::uint32_t best = rkey;
                for (const auto& pi : all_permutations(size_))
                    best = std::min(best, permuted_key(r, pi));
                if (best != rkey) {
                    ++ri_;
                    continue;  // an isomorphic copy with a smaller key exists
                }
                for (const auto& pi : all_permutations(size_))
                    if (permuted_key(r, pi) == rkey) min_perms_.push_back(pi);
            }
            r_admitted_ = true;
        }
        while (si_ < ss_->size()) {
            const Relation& s = (*ss_)[si_];
            ++si_;
            if (dedup_) {
                const std::uint32_t skey = relation_key(s);
                bool canonical = true;
                for (const auto& pi : min_perms_)
                    if (permuted_key(s, pi) < skey) {
                        canonical = false;
                        break;
                    }
                if (!canonical) continue;
            }
            VisserFrame frame(r, s);
            if (satisfies(properties(frame), cls_)) return frame;
        }
        ++ri_;
        r_admitted_ = false;
    }
    return std::nullopt;
}

std::vector<VisserFrame> enumerate_frames(int size, LogicClass cls, SearchOptions opts) {
    FrameEnumerator en(size, cls, opts);
    std::vector<VisserFrame> out;
    while (auto f = en.next()) out.push_back(std::move(*f));
    return out;
}

std::string to_string(SearchVerdict v) {
    switch (v) {
        case SearchVerdict::ValidUpToN: return "Valid-up-to-n";
        case SearchVerdict::Countermodel: return "Countermodel";
        case SearchVerdict::Satisfiable: return "Satisfiable";
        case SearchVerdict::UnsatisfiableUpToN: return "Unsatisfiable-up-to-n";
    }
    return "?";
}

namespace {

// Valuations enumerate in the shared order: sorted variable i holds the
// combo bits [i*size, (i+1)*size), so the first variable advances fastest.
struct CombinationSpace {
    std::vector<int> vars;
    int size;
    std::uint32_t combos;

    CombinationSpace(std::vector<int> variables, int carrier) : vars(std::move(variables)), size(carrier) {
        const int bits = static_cast<int>(vars.size()) * carrier;
        if (bits > kValidityBitBound)
            throw TooLargeError("search would enumerate 2^" + std::to_string(bits) +
                                " valuations; the bound is 2^" + std::to_string(kValidityBitBound));
        combos = std::uint32_t{1} << bits;
    }

    void fill(std::uint32_t combo, std::vector<std::pair<int, std::uint32_t>>& assign) const {
        for (std::size_t i = 0; i < vars.size(); ++i)
            assign[i].second = (combo >> (i * size)) & full_mask(size);
    }

    Valuation valuation(std::uint32_t combo) const {
        Valuation v(size);
        for (std::size_t i = 0; i < vars.size(); ++i)
            v.set(vars[i], Subset(size, (combo >> (i * size)) & full_mask(size)));
        return v;
    }
};

std::vector<std::pair<int, std::uint32_t>> assignment_buffer(const std::vector<int>& vars) {
    std::vector<std::pair<int, std::uint32_t>> assign;
    assign.reserve(vars.size());
    for (int v : vars) assign.emplace_back(v, 0);
    return assign;
}

}  // namespace

SearchResult find_countermodel(const Formula& f, LogicClass cls, int max_n, SearchOptions opts) {
    check_search_size(max_n);
    const std::vector<int> vars = f.variables();
    (void)CombinationSpace(vars, max_n);  // validate the bound before any work
    SearchResult res{SearchVerdict::ValidUpToN, std::nullopt, 0};
    for (int n = 1; n <= max_n; ++n) {
        const CombinationSpace cs(vars, n);
        auto assign = assignment_buffer(vars);
        const std::uint32_t full = full_mask(n);
        FrameEnumerator en(n, cls, opts);
        while (auto frame = en.next()) {
            ++res.frames_explored;
            for (std::uint32_t combo = 0; combo < cs.combos; ++combo) {
                cs.fill(combo, assign);
                const std::uint32_t truth = truth_set_bits(*frame, assign, f);
                if (truth == full) continue;
                const int x = std::countr_one(truth);
                VisserModel model{*frame, cs.valuation(combo)};
                if (forces(model, x, f))
                    throw Error("internal: countermodel witness failed its re-check");
                res.verdict = SearchVerdict::Countermodel;
                res.witness = SearchWitness{std::move(model), x};
                return res;
            }
        }
    }
    return res;
}

SearchResult find_model(const std::vector<Formula>& gamma, LogicClass cls, int max_n,
                        SearchOptions opts) {
    check_search_size(max_n);
    std::vector<int> vars;
    for (const Formula& g : gamma)
        for (int v : g.variables()) vars.push_back(v);
    std::sort(vars.begin(), vars.end());
    vars.erase(std::unique(vars.begin(), vars.end()), vars.end());
    (void)CombinationSpace(vars, max_n);  // validate the bound before any work

    SearchResult res{SearchVerdict::UnsatisfiableUpToN, std::nullopt, 0};
    for (int n = 1; n <= max_n; ++n) {
        const CombinationSpace cs(vars, n);
        auto assign = assignment_buffer(vars);
        FrameEnumerator en(n, cls, opts);
        while (auto frame = en.next()) {
            ++res.frames_explored;
            for (std::uint32_t combo = 0; combo < cs.combos; ++combo) {
                cs.fill(combo, assign);
                std::uint32_t sat = full_mask(n);
                for (const Formula& g : gamma) {
                    sat &= truth_set_bits(*frame, assign, g);
                    if (sat == 0) break;
                }
                if (sat == 0) continue;
                const int x = std::countr_zero(sat);
                VisserModel model{*frame, cs.valuation(combo)};
                for (const Formula& g : gamma)
                    if (!forces(model, x, g))
                        throw Error("internal: satisfiability witness failed its re-check");
                res.verdict = SearchVerdict::Satisfiable;
                res.witness = SearchWitness{std::move(model), x};
                return res;
            }
        }
    }
    return res;
}

}  // namespace cltop
