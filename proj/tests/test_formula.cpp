#include "doctest.h"

#include "cltop/formula.hpp"
#include "cltop/search.hpp"
#include "testutil.hpp"

using namespace cltop;

TEST_CASE("parse handles constants, axioms and precedence") {
    CHECK(parse("T") == Formula::top());
    CHECK(parse("F") == Formula::bot());

    // J1 shape
    CHECK(parse("[](p0 -> p1) -> (p0 |> p1)") ==
          Formula::imp(Formula::box(Formula::imp(Formula::var(0), Formula::var(1))),
                       Formula::rhd(Formula::var(0), Formula::var(1))));
    // J5 shape
    CHECK(parse("<>p0 |> p0") == Formula::rhd(Formula::dia(Formula::var(0)), Formula::var(0)));

    CHECK(parse("p0 -> p1 -> p2") ==
          Formula::imp(Formula::var(0), Formula::imp(Formula::var(1), Formula::var(2))));
    CHECK(parse("p0 & p1 & p2") ==
          Formula::conj(Formula::conj(Formula::var(0), Formula::var(1)), Formula::var(2)));
    CHECK(parse("p0 | p1 & p2") ==
          Formula::disj(Formula::var(0), Formula::conj(Formula::var(1), Formula::var(2))));
    CHECK(parse("p0 |> p1 -> p2") ==
          Formula::imp(Formula::rhd(Formula::var(0), Formula::var(1)), Formula::var(2)));
    CHECK(parse("~[]<>p10") ==
          Formula::neg(Formula::box(Formula::dia(Formula::var(10)))));
    CHECK(parse(" p0\n-> p1 ") == Formula::imp(Formula::var(0), Formula::var(1)));
}

TEST_CASE("parse rejects bad input with positions") {
    CHECK_THROWS_AS(parse(""), ParseError);
    CHECK_THROWS_AS(parse("p"), ParseError);
    CHECK_THROWS_AS(parse("p0 ->"), ParseError);
    CHECK_THROWS_AS(parse("(p0"), ParseError);
    CHECK_THROWS_AS(parse("p0 p1"), ParseError);
    CHECK_THROWS_AS(parse("p0 - p1"), ParseError);
    CHECK_THROWS_AS(parse("x0"), ParseError);

    try {
        parse("p0 &\n& p1");
        FAIL("expected ParseError");
    } catch (const ParseError& e) {
        CHECK(e.line == 2);
        CHECK(e.column == 1);
    }
}

TEST_CASE("chained |> without parentheses is a syntax error") {
    CHECK_THROWS_AS(parse("p0 |> p1 |> p2"), ParseError);
    CHECK(parse("(p0 |> p1) |> p2") ==
          Formula::rhd(Formula::rhd(Formula::var(0), Formula::var(1)), Formula::var(2)));
    CHECK(parse("p0 |> (p1 |> p2)") ==
          Formula::rhd(Formula::var(0), Formula::rhd(Formula::var(1), Formula::var(2))));
}

TEST_CASE("render is canonical and minimal") {
    CHECK(render(Formula::top()) == "T");
    CHECK(render(Formula::rhd(Formula::dia(Formula::var(0)), Formula::var(0))) == "<>p0 |> p0");
    CHECK(render(Formula::imp(Formula::var(0),
                              Formula::imp(Formula::var(1), Formula::var(2)))) ==
          "p0 -> p1 -> p2");
    CHECK(render(Formula::imp(Formula::imp(Formula::var(0), Formula::var(1)), Formula::var(2))) ==
          "(p0 -> p1) -> p2");
    CHECK(render(Formula::box(Formula::imp(Formula::box(Formula::bot()), Formula::bot()))) ==
          "[]([]F -> F)");
    CHECK(render(Formula::rhd(Formula::rhd(Formula::var(0), Formula::var(1)), Formula::var(2))) ==
          "(p0 |> p1) |> p2");
}

TEST_CASE("round-trip: parse after render is the identity on ASTs") {
    std::mt19937_64 rng(20240901);
    for (int i = 0; i < 500; ++i) {
        const Formula f = testutil::random_formula(rng, 6, 4);
        CAPTURE(render(f));
        CHECK(parse(render(f)) == f);
    }
}

TEST_CASE("variables are exactly the occurring indices") {
    CHECK(parse("T").variables().empty());
    CHECK(parse("p3 & p1 | p3").variables() == std::vector<int>{1, 3});
    CHECK(standard_instance(schema("J2")).variables() == std::vector<int>{0, 1, 2});
}

TEST_CASE("schema library holds exactly the named axioms") {
    const std::vector<std::string> expected{"K", "GL", "J1", "J2", "J3", "J4", "J5", "M", "P", "W"};
    const auto& lib = schema_library();
    REQUIRE(lib.size() == expected.size());
    for (std::size_t i = 0; i < lib.size(); ++i) CHECK(lib[i].name == expected[i]);

    CHECK(render(standard_instance(schema("K"))) == "[](p0 -> p1) -> []p0 -> []p1");
    CHECK(render(standard_instance(schema("GL"))) == "[]([]p0 -> p0) -> []p0");
    CHECK(render(standard_instance(schema("J1"))) == "[](p0 -> p1) -> (p0 |> p1)");
    CHECK(render(standard_instance(schema("J5"))) == "<>p0 |> p0");
    CHECK(render(standard_instance(schema("W"))) == "(p0 |> p1) -> (p0 |> p1 & []~p0)");
    CHECK_THROWS_AS(schema("J9"), InvalidInputError);
}

TEST_CASE("instantiate substitutes simultaneously") {
    CHECK(render(instantiate(schema("J5"), {Formula::var(3)})) == "<>p3 |> p3");
    CHECK(render(instantiate(schema("J2"),
                             {Formula::var(0), Formula::var(1), Formula::var(2)})) ==
          "(p0 |> p1) & (p1 |> p2) -> (p0 |> p2)");
    CHECK(render(instantiate(schema("GL"), {Formula::bot()})) == "[]([]F -> F) -> []F");

    // simultaneous, not sequential: swapping p and q must not cascade
    CHECK(render(instantiate(schema("J1"), {Formula::var(1), Formula::var(0)})) ==
          "[](p1 -> p0) -> (p1 |> p0)");

    CHECK_THROWS_AS(instantiate(schema("J2"), {Formula::var(0)}), UnboundVariableError);
}

TEST_CASE("instantiate commutes with render and parse") {
    std::mt19937_64 rng(77);
    for (const Schema& s : schema_library()) {
        std::vector<Formula> args;
        for (int i = 0; i < s.arity; ++i) args.push_back(testutil::random_formula(rng, 2, 3));
        const Formula inst = instantiate(s, args);
        CHECK(parse(render(inst)) == inst);
    }
}

TEST_CASE("box_as_rhd rewrites every modality") {
    CHECK(box_as_rhd(Formula::box(Formula::var(0))) ==
          Formula::rhd(Formula::neg(Formula::var(0)), Formula::bot()));
    CHECK(box_as_rhd(Formula::var(0)) == Formula::var(0));
    CHECK(box_as_rhd(Formula::dia(Formula::var(0))) ==
          Formula::neg(Formula::rhd(Formula::var(0), Formula::bot())));

    // no Box/Dia survives
    std::mt19937_64 rng(5150);
    for (int i = 0; i < 100; ++i) {
        const Formula f = box_as_rhd(testutil::random_formula(rng, 5, 3));
        std::vector<Formula> stack{f};
        while (!stack.empty()) {
            const Formula g = stack.back();
            stack.pop_back();
            CHECK(g.kind() != Conn::Box);
            CHECK(g.kind() != Conn::Dia);
            switch (g.kind()) {
                case Conn::Neg: stack.push_back(g.left()); break;
                case Conn::And:
                case Conn::Or:
                case Conn::Imp:
                case Conn::Rhd:
                    stack.push_back(g.left());
                    stack.push_back(g.right());
                    break;
                default: break;
            }
        }
    }
}

TEST_CASE("box_as_rhd preserves truth on every small Visser model") {
    std::mt19937_64 rng(31337);
    std::vector<Formula> pool;
    pool.push_back(Formula::box(Formula::var(0)));
    pool.push_back(Formula::dia(Formula::var(0)));
    for (int i = 0; i < 8; ++i) pool.push_back(testutil::random_formula(rng, 3, 2));

    for (int n = 1; n <= 3; ++n) {
        for (const VisserFrame& fr : enumerate_frames(n, LogicClass::CL, {false})) {
            for (const Formula& f : pool) {
                // exhaust the valuations of the two variables
                for (std::uint32_t combo = 0; combo < (1u << (2 * n)); ++combo) {
                    Valuation v(n);
                    v.set(0, Subset(n, combo & full_mask(n)));
                    v.set(1, Subset(n, (combo >> n) & full_mask(n)));
                    const VisserModel m{fr, v};
                    CHECK(truth_set(m, f) == truth_set(m, box_as_rhd(f)));
                }
            }
        }
    }
}

TEST_CASE("delta_family lists the Fine-Rautenberg prefix") {
    const auto d0 = delta_family(0);
    REQUIRE(d0.size() == 1);
    CHECK(render(d0[0]) == "<>p0");

    const auto d1 = delta_family(1);
    REQUIRE(d1.size() == 2);
    CHECK(render(d1[0]) == "<>p0");
    CHECK(render(d1[1]) == "[](p0 -> <>p1)");

    const auto d2 = delta_family(2);
    REQUIRE(d2.size() == 3);
    CHECK(render(d2[2]) == "[](p1 -> <>p2)");
}

TEST_CASE("depth counts connective nesting") {
    CHECK(parse("p0").depth() == 0);
    CHECK(parse("[]p0").depth() == 1);
    CHECK(parse("p0 |> []p1").depth() == 2);
}
