#include "doctest.h"

#include <fstream>
#include <sstream>

#include "cltop/correspondence.hpp"
#include "cltop/model_io.hpp"
#include "testutil.hpp"

using namespace cltop;

namespace {

std::string slurp(const std::string& path) {
    std::ifstream in(path);
    REQUIRE(in);
    std::ostringstream buf;
    buf << in.rdbuf();
    return buf.str();
}

const std::string kData = CLTOP_TEST_DATA_DIR;

}  // namespace

TEST_CASE("golden fixtures load and reserialize byte-for-byte") {
    for (const char* name : {"/chain_model.json", "/space_scattered.json",
                             "/space_nonscattered.json"}) {
        const std::string text = slurp(kData + name);
        CHECK(serialize_model(parse_model_json(text)) == text);
    }

    const ModelFile chain = load_model_file(kData + "/chain_model.json");
    CHECK(chain.kind == ModelFile::Kind::Model);
    REQUIRE(chain.frame.has_value());
    CHECK(chain.frame->r() == Relation::from_pairs(2, {{0, 1}}));
    REQUIRE(chain.valuation.has_value());
    CHECK(chain.valuation->get(0) == Subset::of(2, {1}));
}

TEST_CASE("serialization round-trips on random frames and spaces") {
    std::mt19937_64 rng(616);
    for (int i = 0; i < 60; ++i) {
        const int size = 1 + static_cast<int>(rng() % 5);
        const ModelFile m =
            ModelFile::of_model(testutil::random_frame(rng, size),
                                testutil::random_valuation(rng, size, 2));
        const std::string text = serialize_model(m);
        const ModelFile back = parse_model_json(text);
        CHECK(back.frame->r() == m.frame->r());
        CHECK(back.frame->s() == m.frame->s());
        CHECK(*back.valuation == *m.valuation);
        CHECK(serialize_model(back) == text);
    }
    for (int i = 0; i < 60; ++i) {
        const int size = 1 + static_cast<int>(rng() % 5);
        const ModelFile m = ModelFile::of_space(
            BitopSpace(testutil::random_topology(rng, size, 3),
                       testutil::random_topology(rng, size, 3)));
        const std::string text = serialize_model(m);
        const ModelFile back = parse_model_json(text);
        CHECK(*back.space == *m.space);
        CHECK(serialize_model(back) == text);
    }
}

TEST_CASE("loading validates the module invariants") {
    // R not transitive
    CHECK_THROWS_AS(parse_model_json(R"({"kind":"frame","size":3,
        "R":[[0,1],[1,2]],"S":[[0,0],[1,1],[2,2]]})"),
                    InvalidInputError);
    // S not reflexive
    CHECK_THROWS_AS(parse_model_json(R"({"kind":"frame","size":2,"R":[],"S":[]})"),
                    InvalidInputError);
    // opens0 not a topology
    CHECK_THROWS_AS(parse_model_json(R"({"kind":"space","size":3,
        "opens0":[[],[0],[1],[0,1,2]],"opens1":[[],[0,1,2]]})"),
                    InvalidInputError);
    // model without valuation
    CHECK_THROWS_AS(parse_model_json(R"({"kind":"model","size":1,"R":[],"S":[[0,0]]})"),
                    InvalidInputError);
}

TEST_CASE("loading rejects malformed files with diagnostics") {
    CHECK_THROWS_AS(parse_model_json("{ not json"), InvalidInputError);
    CHECK_THROWS_AS(parse_model_json("[1,2]"), InvalidInputError);
    CHECK_THROWS_AS(parse_model_json(R"({"size":1})"), InvalidInputError);
    CHECK_THROWS_AS(parse_model_json(R"({"kind":"poset","size":1})"), InvalidInputError);
    CHECK_THROWS_AS(parse_model_json(R"({"kind":"frame","size":0,"R":[],"S":[]})"),
                    InvalidInputError);
    CHECK_THROWS_AS(parse_model_json(R"({"kind":"frame","size":2,"R":[[0,5]],
        "S":[[0,0],[1,1]]})"),
                    InvalidInputError);
    // unknown keys are rejected, catching typos like "opens" for "opens0"
    CHECK_THROWS_AS(parse_model_json(R"({"kind":"frame","size":1,"R":[],"S":[[0,0]],
        "opens":[]})"),
                    InvalidInputError);
    // valuation keys must be p<digits>
    CHECK_THROWS_AS(parse_model_json(R"({"kind":"model","size":1,"R":[],"S":[[0,0]],
        "valuation":{"q0":[0]}})"),
                    InvalidInputError);
    CHECK_THROWS_AS(load_model_file("/nonexistent/path.json"), InvalidInputError);
}

TEST_CASE("save then load is the identity") {
    const std::string path = testutil::test_tmp_dir() + "/roundtrip.json";
    std::mt19937_64 rng(717);
    const ModelFile m = ModelFile::of_frame(testutil::random_frame(rng, 4));
    save_model_file(m, path);
    const ModelFile back = load_model_file(path);
    CHECK(back.frame->r() == m.frame->r());
    CHECK(back.frame->s() == m.frame->s());
    CHECK(serialize_model(back) == slurp(path));
}
