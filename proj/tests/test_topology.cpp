#include "doctest.h"

#include <set>

#include "cltop/search.hpp"
#include "cltop/topology.hpp"
#include "testutil.hpp"

using namespace cltop;

namespace {

std::vector<std::uint32_t> masks_of(const FiniteSpace& sp) { return sp.open_masks(); }

}  // namespace

TEST_CASE("make_topology closes generators into a topology") {
    CHECK(masks_of(make_topology(2, {})) == std::vector<std::uint32_t>{0b00, 0b11});
    CHECK(masks_of(make_topology(2, {Subset::of(2, {0}), Subset::of(2, {1})})) ==
          std::vector<std::uint32_t>{0b00, 0b01, 0b10, 0b11});
    CHECK(masks_of(make_topology(3, {Subset::of(3, {1, 2}), Subset::of(3, {2})})) ==
          std::vector<std::uint32_t>{0b000, 0b100, 0b110, 0b111});

    CHECK_THROWS_AS(make_topology(0, {}), InvalidInputError);
    CHECK_THROWS_AS(make_topology(17, {}), InvalidInputError);
    CHECK_THROWS_AS(make_topology(3, {Subset::of(2, {1})}), InvalidInputError);
}

TEST_CASE("make_topology output is always a valid open family") {
    std::mt19937_64 rng(101);
    for (int i = 0; i < 200; ++i) {
        const int size = 1 + static_cast<int>(rng() % 10);
        const FiniteSpace sp = testutil::random_topology(rng, size, 4);
        CHECK_NOTHROW(FiniteSpace::from_open_family(size, sp.opens()));
    }
}

TEST_CASE("from_open_family validates the topology axioms") {
    // missing empty set
    CHECK_THROWS_AS(FiniteSpace::from_open_family(2, {Subset::full_set(2)}), InvalidInputError);
    // missing carrier
    CHECK_THROWS_AS(FiniteSpace::from_open_family(2, {Subset::empty_set(2)}), InvalidInputError);
    // not closed under union
    CHECK_THROWS_AS(FiniteSpace::from_open_family(
                        3, {Subset::empty_set(3), Subset::of(3, {0}), Subset::of(3, {1}),
                            Subset::full_set(3)}),
                    InvalidInputError);
    // not closed under intersection
    CHECK_THROWS_AS(FiniteSpace::from_open_family(
                        3, {Subset::empty_set(3), Subset::of(3, {0, 1}), Subset::of(3, {1, 2}),
                            Subset::full_set(3)}),
                    InvalidInputError);
}

TEST_CASE("derived_set matches the hand-checked examples") {
    const FiniteSpace chain = upset_topology(Relation::from_pairs(2, {{0, 1}}));
    CHECK(masks_of(chain) == std::vector<std::uint32_t>{0b00, 0b10, 0b11});

    CHECK(chain.derived_set(Subset::empty_set(2)) == Subset::empty_set(2));
    CHECK(chain.derived_set(Subset::of(2, {1})) == Subset::of(2, {0}));

    const FiniteSpace indiscrete = indiscrete_topology(2);
    CHECK(indiscrete.derived_set(Subset::of(2, {0})) == Subset::of(2, {1}));

    CHECK_THROWS_AS(chain.derived_set(Subset::of(3, {1})), InvalidInputError);
}

TEST_CASE("derived_set agrees with the definition-direct oracle") {
    for (const FiniteSpace& sp : all_topologies(3))
        for (std::uint32_t y = 0; y <= full_mask(3); ++y) {
            const Subset s(3, y);
            CHECK(sp.derived_set(s) == testutil::derived_set_oracle(sp, s));
        }

    std::mt19937_64 rng(202);
    for (int i = 0; i < 150; ++i) {
        const int size = 2 + static_cast<int>(rng() % 9);
        const FiniteSpace sp = testutil::random_topology(rng, size, 4);
        for (int j = 0; j < 20; ++j) {
            const Subset y = testutil::random_subset(rng, size);
            CHECK(sp.derived_set(y) == testutil::derived_set_oracle(sp, y));
        }
    }
}

TEST_CASE("co_derived_set is the dual of derived_set") {
    const FiniteSpace chain = upset_topology(Relation::from_pairs(2, {{0, 1}}));
    CHECK(chain.co_derived_set(Subset::full_set(2)) == Subset::full_set(2));
    CHECK(chain.co_derived_set(Subset::of(2, {1})) == Subset::full_set(2));

    const FiniteSpace discrete = discrete_topology(3);
    for (std::uint32_t y = 0; y <= full_mask(3); ++y)
        CHECK(discrete.co_derived_set(Subset(3, y)) == Subset::full_set(3));
}

TEST_CASE("minimal_open intersects all neighborhoods") {
    CHECK(discrete_topology(3).minimal_open(1) == Subset::of(3, {1}));
    CHECK(indiscrete_topology(3).minimal_open(1) == Subset::full_set(3));

    const FiniteSpace sp = make_topology(3, {Subset::of(3, {1, 2}), Subset::of(3, {2})});
    CHECK(sp.minimal_open(1) == Subset::of(3, {1, 2}));
    CHECK(sp.minimal_open(0) == Subset::full_set(3));
    CHECK_THROWS_AS(sp.minimal_open(3), InvalidInputError);
}

TEST_CASE("specialization relation recovers the order") {
    CHECK(discrete_topology(3).specialization_relation() == Relation(3));

    const FiniteSpace chain = upset_topology(Relation::from_pairs(2, {{0, 1}}));
    CHECK(chain.specialization_relation() == Relation::from_pairs(2, {{0, 1}}));

    const FiniteSpace indiscrete = indiscrete_topology(2);
    CHECK(indiscrete.specialization_relation() == Relation::from_pairs(2, {{0, 1}, {1, 0}}));
}

TEST_CASE("is_scattered by cycle detection matches the subset oracle") {
    CHECK(discrete_topology(4).is_scattered());
    CHECK_FALSE(indiscrete_topology(2).is_scattered());
    CHECK(upset_topology(Relation::from_pairs(2, {{0, 1}})).is_scattered());

    for (const FiniteSpace& sp : all_topologies(3))
        CHECK(sp.is_scattered() == testutil::is_scattered_oracle(sp));

    std::mt19937_64 rng(303);
    for (int i = 0; i < 150; ++i) {
        const int size = 2 + static_cast<int>(rng() % 7);
        const FiniteSpace sp = testutil::random_topology(rng, size, 4);
        CHECK(sp.is_scattered() == testutil::is_scattered_oracle(sp));
    }
}

TEST_CASE("punctured neighborhoods exist in scattered spaces") {
    CHECK(discrete_topology(3).punctured_neighborhood(2) == Subset::of(3, {2}));

    const FiniteSpace chain = upset_topology(Relation::from_pairs(2, {{0, 1}}));
    CHECK(chain.punctured_neighborhood(0) == Subset::of(2, {0, 1}));
    CHECK(chain.is_open(chain.punctured_neighborhood(0).without(0)));
    CHECK(chain.punctured_neighborhood(1) == Subset::of(2, {1}));

    CHECK_THROWS_AS(indiscrete_topology(2).punctured_neighborhood(0), NotScatteredError);

    // every point of every scattered random topology has one
    std::mt19937_64 rng(404);
    for (int i = 0; i < 100; ++i) {
        const int size = 2 + static_cast<int>(rng() % 7);
        const FiniteSpace sp = testutil::random_topology(rng, size, 3);
        if (!sp.is_scattered()) continue;
        for (int x = 0; x < size; ++x) {
            const Subset y = sp.punctured_neighborhood(x);
            CHECK(y.test(x));
            CHECK(sp.is_open(y));
            CHECK(sp.is_open(y.without(x)));
        }
    }
}

TEST_CASE("upset_topology lists the upward closed sets") {
    CHECK(upset_topology(Relation(2)) == discrete_topology(2));
    CHECK(masks_of(upset_topology(Relation::from_pairs(2, {{0, 1}}))) ==
          std::vector<std::uint32_t>{0b00, 0b10, 0b11});
    CHECK(upset_topology(Relation::total(2)) == indiscrete_topology(2));
}

TEST_CASE("derived set laws hold") {
    std::mt19937_64 rng(505);
    for (int i = 0; i < 120; ++i) {
        const int size = 1 + static_cast<int>(rng() % 8);
        const FiniteSpace sp = testutil::random_topology(rng, size, 3);
        const Subset y = testutil::random_subset(rng, size);
        const Subset z = testutil::random_subset(rng, size);

        // monotonicity on y n z <= y
        CHECK(sp.derived_set(y & z).subset_of(sp.derived_set(y)));
        // additivity
        CHECK(sp.derived_set(y | z) == (sp.derived_set(y) | sp.derived_set(z)));
        // scattered idempotence
        if (sp.is_scattered()) CHECK(sp.derived_set(sp.derived_set(y)).subset_of(sp.derived_set(y)));
    }
}

TEST_CASE("openness criterion: Y open iff d(~Y) misses Y") {
    std::mt19937_64 rng(606);
    std::vector<FiniteSpace> spaces;
    for (int i = 0; i < 30; ++i)
        spaces.push_back(testutil::random_topology(rng, 1 + static_cast<int>(rng() % 4), 3));
    spaces.push_back(discrete_topology(4));
    spaces.push_back(indiscrete_topology(4));
    for (const FiniteSpace& sp : spaces)
        for (std::uint32_t y = 0; y <= full_mask(sp.size()); ++y) {
            const Subset s(sp.size(), y);
            CHECK(sp.is_open(s) == (sp.derived_set(~s) & s).empty());
        }
}

TEST_CASE("finite spaces distribute d over arbitrary unions") {
    // exhaustive over all 2^(2^n) subset families on carriers up to 4 points
    std::mt19937_64 rng(909);
    std::vector<FiniteSpace> spaces{
        make_topology(3, {Subset::of(3, {1, 2}), Subset::of(3, {2})}),
        indiscrete_topology(3),
        discrete_topology(3),
        indiscrete_topology(4),
        upset_topology(testutil::random_strict_order(rng, 4)),
        testutil::random_topology(rng, 4, 3),
    };
    for (const FiniteSpace& sp : spaces) {
        const int n = sp.size();
        const std::uint32_t members = std::uint32_t{1} << n;
        bool ok = true;
        for (std::uint64_t familybits = 0; familybits < (std::uint64_t{1} << members);
             ++familybits) {
            std::uint32_t whole = 0, parts = 0;
            for (std::uint32_t y = 0; y < members; ++y) {
                if (!((familybits >> y) & 1u)) continue;
                whole |= y;
                parts |= sp.derived_set(Subset(n, y)).bits();
            }
            ok = ok && (sp.derived_set(Subset(n, whole)).bits() & ~parts) == 0;
        }
        CHECK(ok);
    }
}

TEST_CASE("up-set derived sets are R-preimages for strict orders") {
    std::mt19937_64 rng(707);
    for (int i = 0; i < 80; ++i) {
        const int size = 1 + static_cast<int>(rng() % 4);
        const Relation r = testutil::random_strict_order(rng, size);
        const FiniteSpace sp = upset_topology(r);
        for (std::uint32_t y = 0; y <= full_mask(size); ++y) {
            Subset expected = Subset::empty_set(size);
            for (int x = 0; x < size; ++x)
                if (r.successors(x) & y) expected = expected.with(x);
            CHECK(sp.derived_set(Subset(size, y)) == expected);
        }
    }
}

TEST_CASE("interior is the largest open inside") {
    std::mt19937_64 rng(808);
    for (int i = 0; i < 80; ++i) {
        const int size = 1 + static_cast<int>(rng() % 6);
        const FiniteSpace sp = testutil::random_topology(rng, size, 3);
        const Subset y = testutil::random_subset(rng, size);
        const Subset in = sp.interior(y);
        CHECK(sp.is_open(in));
        CHECK(in.subset_of(y));
        for (const Subset& u : sp.opens())
            if (u.subset_of(y)) CHECK(u.subset_of(in));
    }
}

TEST_CASE("all_topologies counts match the labeled enumeration") {
    CHECK(all_topologies(1).size() == 1);
    CHECK(all_topologies(2).size() == 4);
    CHECK(all_topologies(3).size() == 29);
    CHECK_THROWS_AS(all_topologies(4), TooLargeError);

    // finite topologies are exactly the up-set families of preorders
    std::set<std::vector<std::uint32_t>> from_preorders;
    for (const Relation& s : enumerate_preorders(3))
        from_preorders.insert(upset_topology(s).open_masks());
    std::set<std::vector<std::uint32_t>> enumerated;
    for (const FiniteSpace& sp : all_topologies(3)) enumerated.insert(sp.open_masks());
    CHECK(from_preorders == enumerated);
}
