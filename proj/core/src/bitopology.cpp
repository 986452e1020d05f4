#include "cltop/bitopology.hpp"

#include <algorithm>
#include <string>
#include <vector>

namespace cltop {

namespace {

std::uint32_t derived_raw(const std::vector<std::uint32_t>& mins, int n, std::uint32_t y) {
    std::uint32_t d = 0;
    for (int x = 0; x < n; ++x) {
        const std::uint32_t bit = std::uint32_t{1} << x;
        if ((mins[x] & y) & ~bit) d |= bit;
    }
    return d;
}

// x is in e(Y,Z) unless some tau1-open meets (min0(x) n Y)\{x} while missing
// (min0(x) n Z)\{x}; the union of all tau1-opens avoiding the latter is the
// tau1-interior of its complement, so one interior computation decides the
// whole quantifier.
std::uint32_t e_raw(const BitopSpace& sp, std::uint32_t y, std::uint32_t z) {
    const int n = sp.size();
    const auto& mins0 = sp.tau0().min_open_masks();
    const auto& mins1 = sp.tau1().min_open_masks();
    std::uint32_t result = 0;
    for (int x = 0; x < n; ++x) {
        const std::uint32_t bit = std::uint32_t{1} << x;
        const std::uint32_t a = (mins0[x] & y) & ~bit;
        const std::uint32_t b = (mins0[x] & z) & ~bit;
        std::uint32_t widest = 0;  // largest tau1-open disjoint from b
        for (int w = 0; w < n; ++w)
            if ((mins1[w] & b) == 0) widest |= std::uint32_t{1} << w;
        if ((widest & a) == 0) result |= bit;
    }
    return result;
}

std::uint32_t cd_raw(const std::vector<std::uint32_t>& mins, int n, std::uint32_t y) {
    return ~derived_raw(mins, n, ~y & full_mask(n)) & full_mask(n);
}

template <class Lookup>
std::uint32_t eval_raw(const BitopSpace& sp, const Lookup& lookup, const Formula& f) {
    const int n = sp.size();
    const auto& mins0 = sp.tau0().min_open_masks();
    switch (f.kind()) {
        case Conn::Var: return lookup(f.var_index());
        case Conn::Top: return full_mask(n);
        case Conn::Bot: return 0;
        case Conn::Neg: return ~eval_raw(sp, lookup, f.left()) & full_mask(n);
        case Conn::And: return eval_raw(sp, lookup, f.left()) & eval_raw(sp, lookup, f.right());
        case Conn::Or: return eval_raw(sp, lookup, f.left()) | eval_raw(sp, lookup, f.right());
        case Conn::Imp:
            return (~eval_raw(sp, lookup, f.left()) & full_mask(n)) |
                   eval_raw(sp, lookup, f.right());
        case Conn::Box: return cd_raw(mins0, n, eval_raw(sp, lookup, f.left()));
        case Conn::Dia: return derived_raw(mins0, n, eval_raw(sp, lookup, f.left()));
        case Conn::Rhd:
            return e_raw(sp, eval_raw(sp, lookup, f.left()), eval_raw(sp, lookup, f.right()));
    }
    throw InvalidInputError("corrupt formula node");
}

// d and e depend only on their argument masks, and validity enumeration
// revisits the same masks constantly, so memoize them per space. The e table
// needs 4 bytes per mask pair and is switched off on carriers too wide for
// that to stay small.
constexpr std::uint32_t kUnset = 0xFFFFFFFFu;

class EvalCache {
public:
    explicit EvalCache(const BitopSpace& sp)
        : sp_(sp),
          n_(sp.size()),
          full_(full_mask(n_)),
          d_table_(std::size_t{1} << n_, kUnset),
          e_enabled_(n_ <= 10),
          e_table_(e_enabled_ ? std::size_t{1} << (2 * n_) : 0, kUnset) {}

    std::uint32_t d(std::uint32_t y) {
        std::uint32_t& slot = d_table_[y];
        if (slot == kUnset) slot = derived_raw(sp_.tau0().min_open_masks(), n_, y);
        return slot;
    }

    std::uint32_t cd(std::uint32_t y) { return ~d(~y & full_) & full_; }

    std::uint32_t e(std::uint32_t y, std::uint32_t z) {
        if (!e_enabled_) return e_raw(sp_, y, z);
        std::uint32_t& slot = e_table_[(std::size_t{y} << n_) | z];
        if (slot == kUnset) slot = e_raw(sp_, y, z);
        return slot;
    }

    const BitopSpace& space() const { return sp_; }
    std::uint32_t full() const { return full_; }

private:
    const BitopSpace& sp_;
    int n_;
    std::uint32_t full_;
    std::vector<std::uint32_t> d_table_;
    bool e_enabled_;
    std::vector<std::uint32_t> e_table_;
};

// Postorder instruction list: validity enumeration evaluates one formula
// millions of times, so walk it once and replay a flat program instead.
struct CompiledOp {
    Conn kind;
    int var_slot;  // index into the sorted variable list, for Conn::Var
};

void compile_into(const Formula& f, const std::vector<int>& vars, std::vector<CompiledOp>& out) {
    switch (f.kind()) {
        case Conn::Var: {
            const auto it = std::find(vars.begin(), vars.end(), f.var_index());
            if (it == vars.end())
                throw UnboundVariableError("variable p" + std::to_string(f.var_index()) +
                                           " is unbound");
            out.push_back({Conn::Var, static_cast<int>(it - vars.begin())});
            return;
        }
        case Conn::Top:
        case Conn::Bot:
            out.push_back({f.kind(), -1});
            return;
        case Conn::Neg:
        case Conn::Box:
        case Conn::Dia:
            compile_into(f.left(), vars, out);
            out.push_back({f.kind(), -1});
            return;
        default:
            compile_into(f.left(), vars, out);
            compile_into(f.right(), vars, out);
            out.push_back({f.kind(), -1});
            return;
    }
}

std::uint32_t eval_compiled(EvalCache& cache, const std::vector<CompiledOp>& ops,
                            const std::uint32_t* var_masks, std::uint32_t* stack) {
    const std::uint32_t full = cache.full();
    int top = 0;
    for (const CompiledOp& op : ops) {
        switch (op.kind) {
            case Conn::Var: stack[top++] = var_masks[op.var_slot]; break;
            case Conn::Top: stack[top++] = full; break;
            case Conn::Bot: stack[top++] = 0; break;
            case Conn::Neg: stack[top - 1] = ~stack[top - 1] & full; break;
            case Conn::And: --top; stack[top - 1] &= stack[top]; break;
            case Conn::Or: --top; stack[top - 1] |= stack[top]; break;
            case Conn::Imp:
                --top;
                stack[top - 1] = (~stack[top - 1] & full) | stack[top];
                break;
            case Conn::Box: stack[top - 1] = cache.cd(stack[top - 1]); break;
            case Conn::Dia: stack[top - 1] = cache.d(stack[top - 1]); break;
            case Conn::Rhd:
                --top;
                stack[top - 1] = cache.e(stack[top - 1], stack[top]);
                break;
        }
    }
    return stack[0];
}

}  // namespace

BitopSpace::BitopSpace(FiniteSpace tau0, FiniteSpace tau1)
    : tau0_(std::move(tau0)), tau1_(std::move(tau1)) {
    if (tau0_.size() != tau1_.size())
        throw InvalidInputError("bitopological space needs both topologies on one carrier");
}

Subset e_set(const BitopSpace& sp, const Subset& y, const Subset& z) {
    if (y.width() != sp.size() || z.width() != sp.size())
        throw InvalidInputError("subset width does not match bitopological carrier");
    return Subset(sp.size(), e_raw(sp, y.bits(), z.bits()));
}

Subset eval(const BitopSpace& sp, const Valuation& v, const Formula& f) {
    if (v.width() != sp.size())
        throw InvalidInputError("valuation width does not match bitopological carrier");
    auto lookup = [&](int var) { return v.get(var).bits(); };
    return Subset(sp.size(), eval_raw(sp, lookup, f));
}

namespace {

// Shared valuation enumeration: variable i (in sorted order) occupies bits
// [i*size, (i+1)*size) of the combination index, so the first variable's
// subset advances fastest.
struct ValuationSpace {
    std::vector<int> vars;
    int size;
    std::uint32_t combos;

    ValuationSpace(const std::vector<int>& variables, int carrier, const char* what) {
        vars = variables;
        size = carrier;
        const int bits = static_cast<int>(vars.size()) * carrier;
        if (bits > kValidityBitBound)
            throw TooLargeError(std::string(what) + " would enumerate 2^" + std::to_string(bits) +
                                " valuations; the bound is 2^" + std::to_string(kValidityBitBound));
        combos = std::uint32_t{1} << bits;
    }

    std::uint32_t mask_of(std::uint32_t combo, int slot) const {
        return (combo >> (slot * size)) & full_mask(size);
    }

    std::uint32_t lookup(std::uint32_t combo, int var) const {
        for (std::size_t i = 0; i < vars.size(); ++i)
            if (vars[i] == var) return mask_of(combo, static_cast<int>(i));
        throw UnboundVariableError("variable p" + std::to_string(var) + " is unbound");
    }

    Valuation valuation(std::uint32_t combo) const {
        Valuation v(size);
        for (std::size_t i = 0; i < vars.size(); ++i)
            v.set(vars[i], Subset(size, mask_of(combo, static_cast<int>(i))));
        return v;
    }
};

}  // namespace

std::optional<Valuation> find_falsifying(const BitopSpace& sp, const Formula& f) {
    const ValuationSpace vs(f.variables(), sp.size(), "is_valid");
    const std::uint32_t full = full_mask(sp.size());
    const int size = sp.size();
    EvalCache cache(sp);

    std::vector<CompiledOp> ops;
    compile_into(f, vs.vars, ops);
    std::vector<std::uint32_t> stack(ops.size() + 1);
    std::vector<std::uint32_t> masks(vs.vars.size());

    for (std::uint32_t combo = 0; combo < vs.combos; ++combo) {
        for (std::size_t i = 0; i < masks.size(); ++i)
            masks[i] = (combo >> (i * size)) & full;
        if (eval_compiled(cache, ops, masks.data(), stack.data()) != full)
            return vs.valuation(combo);
    }
    return std::nullopt;
}

bool is_valid(const BitopSpace& sp, const Formula& f) {
    return !find_falsifying(sp, f).has_value();
}

bool is_cl_space(const BitopSpace& sp) { return sp.tau0().is_scattered(); }

ILCharClauses il_char_clauses(const BitopSpace& sp) {
    if (!is_cl_space(sp))
        throw NotCLSpaceError("il_char_clauses requires a CL-space (scattered tau0)");
    if (sp.size() > 8)
        throw TooLargeError("il_char_clauses quantifies over all subsets; size must be <= 8");

    ILCharClauses out{true, true, true, true};
    out.c1 = is_valid(sp, standard_instance(schema("J5")));

    const int n = sp.size();
    const auto& mins0 = sp.tau0().min_open_masks();
    const std::uint32_t full = full_mask(n);
    for (std::uint32_t u : sp.tau1().open_masks()) {
        for (std::uint32_t y = 0; y <= full && out.c2; ++y) {
            const std::uint32_t dy = derived_raw(mins0, n, y);
            if (derived_raw(mins0, n, dy & u) & ~derived_raw(mins0, n, y & u)) out.c2 = false;
        }
        const std::uint32_t dcu = derived_raw(mins0, n, ~u & full);
        if (derived_raw(mins0, n, dcu & u) != 0) out.c3 = false;

        bool found = false;
        for (std::uint32_t v : sp.tau0().open_masks()) {
            if ((v & ~u) == 0 && derived_raw(mins0, n, u & ~v) == 0) {
                found = true;
                break;
            }
        }
        if (!found) out.c4 = false;
    }
    return out;
}

bool is_il_space(const BitopSpace& sp) {
    if (!is_cl_space(sp))
        throw NotCLSpaceError("is_il_space requires a CL-space (scattered tau0)");
    const int n = sp.size();
    const auto& mins0 = sp.tau0().min_open_masks();
    const std::uint32_t full = full_mask(n);
    for (std::uint32_t u : sp.tau1().open_masks()) {
        const std::uint32_t dcu = derived_raw(mins0, n, ~u & full);
        if (derived_raw(mins0, n, dcu & u) != 0) return false;
    }
    return true;
}

FiniteSpace tau2(const BitopSpace& sp) {
    const int n = sp.size();
    const auto& mins0 = sp.tau0().min_open_masks();
    std::vector<Subset> family;
    for (std::uint32_t v : sp.tau0().open_masks())
        for (std::uint32_t u : sp.tau1().open_masks())
            if ((v & ~u) == 0 && derived_raw(mins0, n, u & ~v) == 0) {
                family.emplace_back(n, v);
                break;
            }
    try {
        return FiniteSpace::from_open_family(n, family);
    } catch (const InvalidInputError& e) {
        throw Error(std::string("internal: tau2 family is not a topology: ") + e.what());
    }
}

}  // namespace cltop
