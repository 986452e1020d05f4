#ifndef CLTOP_SUBSET_HPP
#define CLTOP_SUBSET_HPP

#include <bit>
#include <cstdint>
#include <initializer_list>
#include <string>
#include <vector>

#include "cltop/errors.hpp"

namespace cltop {

// Carriers are {0,...,size-1}; everything in this library is desk-scale,
// so 16 points is a hard cap and a subset fits in one machine word.
inline constexpr int kMaxCarrier = 16;

inline std::uint32_t full_mask(int width) {
    return width == 0 ? 0u : (std::uint32_t{1} << width) - 1u;
}

// A subset of a fixed finite carrier. The width travels with the bits so
// that mixing subsets of different carriers is caught at the API boundary.
class Subset {
public:
    Subset() : width_(0), bits_(0) {}

    Subset(int width, std::uint32_t bits) : width_(width), bits_(bits) {
        if (width < 0 || width > kMaxCarrier)
            throw InvalidInputError("subset width out of range: " + std::to_string(width));
        if (bits & ~full_mask(width))
            throw InvalidInputError("subset has bits beyond its width");
    }

    static Subset empty_set(int width) { return Subset(width, 0); }
    static Subset full_set(int width) { return Subset(width, full_mask(width)); }

    static Subset single(int width, int point) {
        check_point(width, point);
        return Subset(width, std::uint32_t{1} << point);
    }

    static Subset of(int width, std::initializer_list<int> points) {
        std::uint32_t b = 0;
        for (int p : points) {
            check_point(width, p);
            b |= std::uint32_t{1} << p;
        }
        return Subset(width, b);
    }

    static Subset of(int width, const std::vector<int>& points) {
        std::uint32_t b = 0;
        for (int p : points) {
            check_point(width, p);
            b |= std::uint32_t{1} << p;
        }
        return Subset(width, b);
    }

    int width() const { return width_; }
    std::uint32_t bits() const { return bits_; }
    bool test(int point) const { return point >= 0 && point < width_ && (bits_ >> point) & 1u; }
    bool empty() const { return bits_ == 0; }
    bool is_full() const { return bits_ == full_mask(width_); }
    int count() const { return std::popcount(bits_); }

    std::vector<int> points() const {
        std::vector<int> out;
        for (int p = 0; p < width_; ++p)
            if ((bits_ >> p) & 1u) out.push_back(p);
        return out;
    }

    Subset operator|(const Subset& o) const { return Subset(matched(o), bits_ | o.bits_); }
    Subset operator&(const Subset& o) const { return Subset(matched(o), bits_ & o.bits_); }
    Subset operator-(const Subset& o) const { return Subset(matched(o), bits_ & ~o.bits_); }
    Subset operator~() const { return Subset(width_, ~bits_ & full_mask(width_)); }

    Subset with(int point) const {
        check_point(width_, point);
        return Subset(width_, bits_ | (std::uint32_t{1} << point));
    }
    Subset without(int point) const {
        check_point(width_, point);
        return Subset(width_, bits_ & ~(std::uint32_t{1} << point));
    }

    bool subset_of(const Subset& o) const {
        matched(o);
        return (bits_ & ~o.bits_) == 0;
    }

    bool operator==(const Subset& o) const = default;

    std::string to_string() const {
        std::string s = "{";
        bool first = true;
        for (int p : points()) {
            if (!first) s += ",";
            s += std::to_string(p);
            first = false;
        }
        return s + "}";
    }

private:
    static void check_point(int width, int point) {
        if (point < 0 || point >= width)
            throw InvalidInputError("point " + std::to_string(point) +
                                    " outside carrier of size " + std::to_string(width));
    }

    int matched(const Subset& o) const {
        if (width_ != o.width_)
            throw InvalidInputError("subset width mismatch: " + std::to_string(width_) +
                                    " vs " + std::to_string(o.width_));
        return width_;
    }

    int width_;
    std::uint32_t bits_;
};

}  // namespace cltop

#endif
