#ifndef CLTOP_VALUATION_HPP
#define CLTOP_VALUATION_HPP

#include <map>
#include <vector>

#include "cltop/errors.hpp"
#include "cltop/subset.hpp"

namespace cltop {

// Hard cap on #variables * carrier size for exhaustive validity checks;
// beyond it the checkers raise TooLargeError rather than sample.
inline constexpr int kValidityBitBound = 24;

// A finite assignment of carrier subsets to propositional variables.
class Valuation {
public:
    explicit Valuation(int width) : width_(width) {}

    int width() const { return width_; }

    Valuation& set(int var, const Subset& value) {
        if (value.width() != width_)
            throw InvalidInputError("valuation value width mismatch");
        assign_[var] = value.bits();
        return *this;
    }

    bool has(int var) const { return assign_.count(var) != 0; }

    Subset get(int var) const {
        auto it = assign_.find(var);
        if (it == assign_.end())
            throw UnboundVariableError("variable p" + std::to_string(var) + " is unbound");
        return Subset(width_, it->second);
    }

    std::vector<int> variables() const {
        std::vector<int> out;
        out.reserve(assign_.size());
        for (const auto& [v, _] : assign_) out.push_back(v);
        return out;
    }

    bool operator==(const Valuation& o) const = default;

private:
    int width_;
    std::map<int, std::uint32_t> assign_;
};

}  // namespace cltop

#endif
