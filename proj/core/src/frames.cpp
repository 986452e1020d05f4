#include "cltop/frames.hpp"

#include <vector>

namespace cltop {

VisserFrame::VisserFrame(Relation r, Relation s) : r_(std::move(r)), s_(std::move(s)) {
    if (r_.size() != s_.size())
        throw InvalidInputError("R and S must share one carrier");
    if (!r_.transitive()) throw InvalidInputError("R must be transitive");
    if (!r_.irreflexive()) throw InvalidInputError("R must be irreflexive");
    if (!r_.acyclic()) throw InvalidInputError("R must be acyclic");
    if (!s_.reflexive()) throw InvalidInputError("S must be reflexive");
    if (!s_.transitive()) throw InvalidInputError("S must be transitive");
}

namespace {

template <class Lookup>
std::uint32_t truth_raw(const VisserFrame& fr, const Lookup& lookup, const Formula& f) {
    const int n = fr.size();
    const std::uint32_t full = full_mask(n);
    switch (f.kind()) {
        case Conn::Var: return lookup(f.var_index());
        case Conn::Top: return full;
        case Conn::Bot: return 0;
        case Conn::Neg: return ~truth_raw(fr, lookup, f.left()) & full;
        case Conn::And: return truth_raw(fr, lookup, f.left()) & truth_raw(fr, lookup, f.right());
        case Conn::Or: return truth_raw(fr, lookup, f.left()) | truth_raw(fr, lookup, f.right());
        case Conn::Imp:
            return (~truth_raw(fr, lookup, f.left()) & full) | truth_raw(fr, lookup, f.right());
        case Conn::Box: {
            const std::uint32_t a = truth_raw(fr, lookup, f.left());
            std::uint32_t out = 0;
            for (int x = 0; x < n; ++x)
                if ((fr.r().successors(x) & ~a) == 0) out |= std::uint32_t{1} << x;
            return out;
        }
        case Conn::Dia: {
            const std::uint32_t a = truth_raw(fr, lookup, f.left());
            std::uint32_t out = 0;
            for (int x = 0; x < n; ++x)
                if (fr.r().successors(x) & a) out |= std::uint32_t{1} << x;
            return out;
        }
        case Conn::Rhd: {
            const std::uint32_t a = truth_raw(fr, lookup, f.left());
            const std::uint32_t b = truth_raw(fr, lookup, f.right());
            std::uint32_t out = 0;
            for (int x = 0; x < n; ++x) {
                const std::uint32_t rx = fr.r().successors(x);
                bool ok = true;
                for (int y = 0; y < n && ok; ++y)
                    if ((rx >> y) & 1u && (a >> y) & 1u)
                        ok = (rx & fr.s().successors(y) & b) != 0;
                if (ok) out |= std::uint32_t{1} << x;
            }
            return out;
        }
    }
    throw InvalidInputError("corrupt formula node");
}

}  // namespace

Subset truth_set(const VisserModel& m, const Formula& f) {
    if (m.valuation.width() != m.frame.size())
        throw InvalidInputError("valuation width does not match frame carrier");
    auto lookup = [&](int var) { return m.valuation.get(var).bits(); };
    return Subset(m.frame.size(), truth_raw(m.frame, lookup, f));
}

bool forces(const VisserModel& m, int point, const Formula& f) {
    if (point < 0 || point >= m.frame.size())
        throw InvalidInputError("point outside frame carrier");
    return truth_set(m, f).test(point);
}

std::uint32_t truth_set_bits(const VisserFrame& f,
                             const std::vector<std::pair<int, std::uint32_t>>& assign,
                             const Formula& phi) {
    auto lookup = [&](int var) -> std::uint32_t {
        for (const auto& [v, mask] : assign)
            if (v == var) return mask;
        throw UnboundVariableError("variable p" + std::to_string(var) + " is unbound");
    };
    return truth_raw(f, lookup, phi);
}

namespace {

struct FrameValuationSpace {
    std::vector<int> vars;
    int size;
    std::uint32_t combos;

    FrameValuationSpace(const std::vector<int>& variables, int carrier) {
        vars = variables;
        size = carrier;
        const int bits = static_cast<int>(vars.size()) * carrier;
        if (bits > kValidityBitBound)
            throw TooLargeError("is_valid_on_frame would enumerate 2^" + std::to_string(bits) +
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
};

}  // namespace

std::optional<Valuation> find_falsifying_on_frame(const VisserFrame& f, const Formula& phi) {
    const FrameValuationSpace vs(phi.variables(), f.size());
    const std::uint32_t full = full_mask(f.size());
    for (std::uint32_t combo = 0; combo < vs.combos; ++combo) {
        auto lookup = [&](int var) { return vs.lookup(combo, var); };
        if (truth_raw(f, lookup, phi) != full) {
            Valuation v(f.size());
            for (std::size_t i = 0; i < vs.vars.size(); ++i)
                v.set(vs.vars[i], Subset(f.size(), vs.mask_of(combo, static_cast<int>(i))));
            return v;
        }
    }
    return std::nullopt;
}

bool is_valid_on_frame(const VisserFrame& f, const Formula& phi) {
    return !find_falsifying_on_frame(f, phi).has_value();
}

FramePropertyReport properties(const VisserFrame& f) {
    const int n = f.size();
    FramePropertyReport rep{};
    rep.r_transitive = f.r().transitive();
    rep.r_irreflexive = f.r().irreflexive();
    rep.r_acyclic = f.r().acyclic();
    rep.s_reflexive = f.s().reflexive();
    rep.s_transitive = f.s().transitive();

    rep.clm_cond = true;
    for (int x = 0; x < n && rep.clm_cond; ++x)
        for (int y = 0; y < n && rep.clm_cond; ++y)
            if (f.s().contains(x, y) && (f.r().successors(y) & ~f.r().successors(x)))
                rep.clm_cond = false;

    rep.r_subset_s = f.r().subset_of(f.s());

    rep.ilp_cond = true;
    for (int x = 0; x < n && rep.ilp_cond; ++x)
        for (int y = 0; y < n && rep.ilp_cond; ++y)
            if (f.r().contains(x, y) && (f.s().successors(y) & ~f.r().successors(x)))
                rep.ilp_cond = false;

    rep.ilw_cond = f.r().compose(f.s()).acyclic();
    return rep;
}

std::string to_string(LogicClass c) {
    switch (c) {
        case LogicClass::CL: return "CL";
        case LogicClass::CLM: return "CLM";
        case LogicClass::IL: return "IL";
        case LogicClass::ILP: return "ILP";
        case LogicClass::ILW: return "ILW";
        case LogicClass::ILMCond: return "ILM-cond";
    }
    return "?";
}

LogicClass logic_class_from_string(std::string_view name) {
    if (name == "CL") return LogicClass::CL;
    if (name == "CLM") return LogicClass::CLM;
    if (name == "IL") return LogicClass::IL;
    if (name == "ILP") return LogicClass::ILP;
    if (name == "ILW") return LogicClass::ILW;
    if (name == "ILM-cond" || name == "ILM") return LogicClass::ILMCond;
    throw InvalidInputError("unknown frame class: " + std::string(name));
}

bool satisfies(const FramePropertyReport& rep, LogicClass c) {
    switch (c) {
        case LogicClass::CL: return true;
        case LogicClass::CLM: return rep.clm_cond;
        case LogicClass::IL: return rep.r_subset_s;
        case LogicClass::ILP: return rep.r_subset_s && rep.ilp_cond;
        case LogicClass::ILW: return rep.r_subset_s && rep.ilw_cond;
        case LogicClass::ILMCond: return rep.r_subset_s && rep.clm_cond;
    }
    return false;
}

std::set<LogicClass> classify(const VisserFrame& f) {
    const FramePropertyReport rep = properties(f);
    std::set<LogicClass> out;
    for (LogicClass c : {LogicClass::CL, LogicClass::CLM, LogicClass::IL, LogicClass::ILP,
                         LogicClass::ILW})
        if (satisfies(rep, c)) out.insert(c);
    return out;
}

}  // namespace cltop
