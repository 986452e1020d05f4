#ifndef CLTOP_RELATION_HPP
#define CLTOP_RELATION_HPP

#include <cstdint>
#include <utility>
#include <vector>

#include "cltop/errors.hpp"
#include "cltop/subset.hpp"

namespace cltop {

// A binary relation on {0,...,size-1}, stored as one successor mask per point.
class Relation {
public:
    explicit Relation(int size) : size_(check_size(size)), succ_(size, 0) {}

    static Relation identity(int size) {
        Relation r(size);
        for (int x = 0; x < size; ++x) r.add(x, x);
        return r;
    }

    static Relation total(int size) {
        Relation r(size);
        for (int x = 0; x < size; ++x) r.succ_[x] = full_mask(size);
        return r;
    }

    static Relation from_pairs(int size, const std::vector<std::pair<int, int>>& pairs) {
        Relation r(size);
        for (auto [x, y] : pairs) r.add(x, y);
        return r;
    }

    int size() const { return size_; }

    void add(int x, int y) {
        check_point(x);
        check_point(y);
        succ_[x] |= std::uint32_t{1} << y;
    }

    bool contains(int x, int y) const {
        check_point(x);
        check_point(y);
        return (succ_[x] >> y) & 1u;
    }

    std::uint32_t successors(int x) const {
        check_point(x);
        return succ_[x];
    }

    Subset image(int x) const { return Subset(size_, successors(x)); }

    std::vector<std::pair<int, int>> pairs() const {
        std::vector<std::pair<int, int>> out;
        for (int x = 0; x < size_; ++x)
            for (int y = 0; y < size_; ++y)
                if ((succ_[x] >> y) & 1u) out.emplace_back(x, y);
        return out;
    }

    bool reflexive() const {
        for (int x = 0; x < size_; ++x)
            if (!((succ_[x] >> x) & 1u)) return false;
        return true;
    }

    bool irreflexive() const {
        for (int x = 0; x < size_; ++x)
            if ((succ_[x] >> x) & 1u) return false;
        return true;
    }

    bool transitive() const {
        for (int x = 0; x < size_; ++x)
            for (int y = 0; y < size_; ++y)
                if ((succ_[x] >> y) & 1u && (succ_[y] & ~succ_[x]) != 0) return false;
        return true;
    }

    // No directed cycle (a self-loop counts as one). On finite carriers this
    // is exactly converse well-foundedness.
    bool acyclic() const {
        std::vector<int> state(size_, 0);            // 0 unseen, 1 on path, 2 done
        std::vector<std::pair<int, int>> stack;      // (node, next successor to try)
        for (int root = 0; root < size_; ++root) {
            if (state[root] != 0) continue;
            state[root] = 1;
            stack.emplace_back(root, 0);
            while (!stack.empty()) {
                const int x = stack.back().first;
                const int y = stack.back().second;
                if (y == size_) {
                    state[x] = 2;
                    stack.pop_back();
                    continue;
                }
                stack.back().second = y + 1;
                if (!((succ_[x] >> y) & 1u)) continue;
                if (state[y] == 1) return false;
                if (state[y] == 0) {
                    state[y] = 1;
                    stack.emplace_back(y, 0);
                }
            }
        }
        return true;
    }

    bool subset_of(const Relation& o) const {
        check_same(o);
        for (int x = 0; x < size_; ++x)
            if (succ_[x] & ~o.succ_[x]) return false;
        return true;
    }

    // x -> z iff exists y with x -> y (this) and y -> z (other).
    Relation compose(const Relation& o) const {
        check_same(o);
        Relation out(size_);
        for (int x = 0; x < size_; ++x)
            for (int y = 0; y < size_; ++y)
                if ((succ_[x] >> y) & 1u) out.succ_[x] |= o.succ_[y];
        return out;
    }

    Relation transitive_closure() const {
        Relation out = *this;
        for (int y = 0; y < size_; ++y)
            for (int x = 0; x < size_; ++x)
                if ((out.succ_[x] >> y) & 1u) out.succ_[x] |= out.succ_[y];
        return out;
    }

    Relation reflexive_closure() const {
        Relation out = *this;
        for (int x = 0; x < size_; ++x) out.succ_[x] |= std::uint32_t{1} << x;
        return out;
    }

    bool operator==(const Relation& o) const = default;

private:
    static int check_size(int size) {
        if (size < 1 || size > kMaxCarrier)
            throw InvalidInputError("relation carrier size out of range: " + std::to_string(size));
        return size;
    }

    void check_point(int x) const {
        if (x < 0 || x >= size_)
            throw InvalidInputError("point " + std::to_string(x) +
                                    " outside carrier of size " + std::to_string(size_));
    }

    void check_same(const Relation& o) const {
        if (size_ != o.size_) throw InvalidInputError("relation carrier size mismatch");
    }

    int size_;
    std::vector<std::uint32_t> succ_;
};

}  // namespace cltop

#endif
