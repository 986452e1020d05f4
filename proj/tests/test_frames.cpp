#include "doctest.h"

#include "cltop/frames.hpp"
#include "cltop/search.hpp"
#include "testutil.hpp"

using namespace cltop;

namespace {

// W = {0,1,2}, R = {(0,1),(0,2)}, S = id + (1,2)
VisserModel running_example() {
    const Relation r = Relation::from_pairs(3, {{0, 1}, {0, 2}});
    Relation s = Relation::identity(3);
    s.add(1, 2);
    Valuation v(3);
    v.set(0, Subset::of(3, {1}));
    v.set(1, Subset::of(3, {2}));
    return VisserModel{VisserFrame(r, s), v};
}

}  // namespace

TEST_CASE("frame constructor rejects broken relations") {
    CHECK_THROWS_AS(VisserFrame(Relation::from_pairs(3, {{0, 1}, {1, 2}}), Relation::identity(3)),
                    InvalidInputError);  // R not transitive
    CHECK_THROWS_AS(VisserFrame(Relation::identity(2), Relation::identity(2)),
                    InvalidInputError);  // R not irreflexive
    CHECK_THROWS_AS(VisserFrame(Relation(2), Relation(2)),
                    InvalidInputError);  // S not reflexive
    CHECK_THROWS_AS(VisserFrame(Relation(2), Relation::identity(3)),
                    InvalidInputError);  // carrier mismatch
}

TEST_CASE("frame constructor rejects non-transitive S") {
    Relation s = Relation::identity(3);
    s.add(0, 1);
    s.add(1, 2);  // missing (0,2)
    CHECK_THROWS_AS(VisserFrame(Relation(3), s), InvalidInputError);
}

TEST_CASE("forces follows the |> clause") {
    const VisserModel m = running_example();
    CHECK(forces(m, 0, parse("T")));
    CHECK(forces(m, 1, parse("T")));
    CHECK(forces(m, 0, parse("p0 |> p1")));       // witness z = 2
    CHECK_FALSE(forces(m, 0, parse("p1 |> p0")));  // y = 2 has no witness
    CHECK(forces(m, 0, parse("<>p0")));
    CHECK_FALSE(forces(m, 1, parse("<>p0")));
    CHECK(forces(m, 2, parse("[]F")));
    CHECK_THROWS_AS(forces(m, 3, parse("T")), InvalidInputError);
    CHECK_THROWS_AS(forces(m, 0, parse("p7")), UnboundVariableError);
}

TEST_CASE("truth_set matches the definition-direct oracle") {
    std::mt19937_64 rng(909);
    for (int i = 0; i < 80; ++i) {
        const int size = 1 + static_cast<int>(rng() % 4);
        const VisserModel m = testutil::random_model(rng, size, 3);
        const Formula f = testutil::random_formula(rng, 4, 3);
        const Subset t = truth_set(m, f);
        for (int x = 0; x < size; ++x) CHECK(t.test(x) == testutil::forces_oracle(m, x, f));
    }
}

TEST_CASE("J1-J4 and GL are valid on every small Visser frame") {
    std::vector<Formula> axioms;
    for (const char* name : {"J1", "J2", "J3", "J4", "GL", "K"})
        axioms.push_back(standard_instance(schema(name)));
    for (int n = 1; n <= 3; ++n)
        for (const VisserFrame& fr : enumerate_frames(n, LogicClass::CL, {false}))
            for (const Formula& ax : axioms) CHECK(is_valid_on_frame(fr, ax));
}

TEST_CASE("J5 holds when R is inside S") {
    const Formula j5 = standard_instance(schema("J5"));
    std::mt19937_64 rng(1010);
    for (int i = 0; i < 50; ++i) {
        const Relation r = testutil::random_strict_order(rng, 4);
        const Relation s = r.reflexive_closure();  // transitive already
        const VisserFrame fr(r, s);
        CHECK(properties(fr).r_subset_s);
        CHECK(is_valid_on_frame(fr, j5));
    }
}

TEST_CASE("frame validity respects the enumeration bound") {
    const VisserFrame fr(Relation(4), Relation::identity(4));
    Formula wide = Formula::var(0);
    for (int i = 1; i < 7; ++i) wide = Formula::conj(wide, Formula::var(i));
    CHECK_THROWS_AS(is_valid_on_frame(fr, wide), TooLargeError);
}

TEST_CASE("properties evaluates the frame conditions") {
    const VisserFrame trivial(Relation(2), Relation::identity(2));
    const FramePropertyReport rep = properties(trivial);
    CHECK(rep.r_transitive);
    CHECK(rep.r_irreflexive);
    CHECK(rep.r_acyclic);
    CHECK(rep.s_reflexive);
    CHECK(rep.s_transitive);
    CHECK(rep.clm_cond);
    CHECK(rep.r_subset_s);
    CHECK(rep.ilp_cond);
    CHECK(rep.ilw_cond);

    // S = id + (1,0) with R = {(0,1)}: 1 S 0 R 1 but not 1 R 1
    Relation s = Relation::identity(2);
    s.add(1, 0);
    const VisserFrame f2(Relation::from_pairs(2, {{0, 1}}), s);
    CHECK_FALSE(properties(f2).clm_cond);

    // transitive 3-chain with S its reflexive closure
    const Relation chain = Relation::from_pairs(3, {{0, 1}, {1, 2}, {0, 2}});
    const VisserFrame f3(chain, chain.reflexive_closure());
    const FramePropertyReport rep3 = properties(f3);
    CHECK(rep3.r_subset_s);
    CHECK(rep3.ilw_cond);
}

TEST_CASE("classify reports the conditions met") {
    const VisserFrame trivial(Relation(2), Relation::identity(2));
    CHECK(classify(trivial) == std::set<LogicClass>{LogicClass::CL, LogicClass::CLM,
                                                    LogicClass::IL, LogicClass::ILP,
                                                    LogicClass::ILW});

    // R not inside S: only CL (plus CLM, vacuously with S = id)
    const VisserFrame f2(Relation::from_pairs(2, {{0, 1}}), Relation::identity(2));
    CHECK(classify(f2) == std::set<LogicClass>{LogicClass::CL, LogicClass::CLM});

    std::mt19937_64 rng(1111);
    for (int i = 0; i < 30; ++i) {
        const Relation r = testutil::random_strict_order(rng, 4);
        const VisserFrame fr(r, r.reflexive_closure());
        CHECK(classify(fr).count(LogicClass::IL) == 1);
    }
}

TEST_CASE("class conditions are sound for their axioms on small frames") {
    const Formula m_ax = standard_instance(schema("M"));
    const Formula j5 = standard_instance(schema("J5"));
    const Formula p_ax = standard_instance(schema("P"));
    const Formula w_ax = standard_instance(schema("W"));

    for (int n = 1; n <= 2; ++n) {
        for (const VisserFrame& fr : enumerate_frames(n, LogicClass::CL, {false})) {
            const FramePropertyReport rep = properties(fr);
            if (rep.clm_cond) CHECK(is_valid_on_frame(fr, m_ax));
            if (rep.r_subset_s) CHECK(is_valid_on_frame(fr, j5));
            if (rep.r_subset_s && rep.ilp_cond) CHECK(is_valid_on_frame(fr, p_ax));
            if (rep.r_subset_s && rep.ilw_cond) CHECK(is_valid_on_frame(fr, w_ax));
        }
    }

    std::mt19937_64 rng(1212);
    for (int i = 0; i < 40; ++i) {
        const VisserFrame fr = testutil::random_frame(rng, 4);
        const FramePropertyReport rep = properties(fr);
        if (rep.clm_cond) CHECK(is_valid_on_frame(fr, m_ax));
        if (rep.r_subset_s) CHECK(is_valid_on_frame(fr, j5));
        if (rep.r_subset_s && rep.ilp_cond) CHECK(is_valid_on_frame(fr, p_ax));
        if (rep.r_subset_s && rep.ilw_cond) CHECK(is_valid_on_frame(fr, w_ax));
    }
}

TEST_CASE("logic class names round-trip") {
    for (LogicClass c : {LogicClass::CL, LogicClass::CLM, LogicClass::IL, LogicClass::ILP,
                         LogicClass::ILW, LogicClass::ILMCond})
        CHECK(logic_class_from_string(to_string(c)) == c);
    CHECK_THROWS_AS(logic_class_from_string("GL"), InvalidInputError);
}
