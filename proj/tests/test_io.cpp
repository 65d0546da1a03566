#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cstdio>
#include <fstream>

#include "edet/matrix_io.hpp"
#include "edet/prime_field.hpp"
#include "edet/ring_registry.hpp"
#include "edet/table_algebra.hpp"

using namespace edet;

namespace {

struct TempFile {
    std::string path;
    explicit TempFile(const std::string& contents) {
        static int counter = 0;
        path = "edet_test_" + std::to_string(counter++) + ".json";
        std::ofstream out(path);
        out << contents;
    }
    ~TempFile() { std::remove(path.c_str()); }
};

const char* kTableJson = R"({
  "dimension": 2,
  "table": [ [ ["0","1"], ["1","0"] ],
             [ ["0","1"], ["0","0"] ] ]
})";

} // namespace

TEST_CASE("ring registry resolves every documented name") {
    CHECK(make_ring("rational")->name() == "rational");
    CHECK(make_ring("quaternion")->descriptor().is_associative);
    CHECK_FALSE(make_ring("octonion")->descriptor().is_associative);
    CHECK(make_ring("mod:7")->descriptor().characteristic == 7);
    CHECK(make_ring("poly:3")->descriptor().is_commutative);
    CHECK_FALSE(make_ring("free:2")->descriptor().is_commutative);

    auto nested = make_ring("matrixring:2:mod:7");
    CHECK(nested->name() == "matrixring:2:mod:7");
    CHECK(nested->descriptor().characteristic == 7);
    CHECK(nested->descriptor().is_associative);

    CHECK_THROWS_AS(make_ring("gaussian"), ParseError);
    CHECK_THROWS_AS(make_ring("mod:10"), Error); // not prime
    CHECK_THROWS_AS(make_ring("mod:x"), ParseError);
    CHECK_THROWS_AS(make_ring("matrixring:2"), ParseError);
    CHECK_THROWS_AS(make_ring("table:no_such_file.json"), ParseError);
}

TEST_CASE("table algebra rings load from files") {
    TempFile f(kTableJson);
    auto ring = make_ring("table:" + f.path);
    CHECK(ring->name() == "table:" + f.path);
    CHECK_FALSE(ring->descriptor().is_power_associative);

    TempFile bad(R"({"dimension": 2, "table": [[["1"]]]})");
    CHECK_THROWS_AS(make_ring("table:" + bad.path), MalformedTable);
}

TEST_CASE("matrix files round trip for every backend") {
    TempFile f(kTableJson);
    std::mt19937_64 rng(163);
    for (const std::string& name :
         {std::string("rational"), std::string("mod:11"), std::string("quaternion"),
          std::string("octonion"), std::string("matrixring:2:rational"),
          std::string("table:") + f.path}) {
        auto ring = make_ring(name);
        for (int n : {1, 2, 3}) {
            Matrix a = random_matrix(ring, n, rng);
            const nlohmann::json j = matrix_to_json(a);
            CHECK(j["ring"] == name);
            Matrix b = matrix_from_json(j);
            CHECK(matrix_equal(a, b.with_ring(ring)));
        }
    }
}

TEST_CASE("matrix file parsing accepts the documented layout") {
    const nlohmann::json j = nlohmann::json::parse(R"({
        "ring": "rational", "n": 2,
        "entries": [["1","2"],["3","4"]]
    })");
    Matrix a = matrix_from_json(j);
    CHECK(a.order() == 2);
    CHECK(a.ring()->to_string(a.at(1, 0)) == "3");

    // symbolic entries: variables or constants
    const nlohmann::json sym = nlohmann::json::parse(R"({
        "ring": "poly:2", "n": 2,
        "entries": [["x11","x12"],["x21","5"]]
    })");
    Matrix s = matrix_from_json(sym);
    CHECK(s.ring()->to_string(s.at(0, 1)) == "x12");
    CHECK(s.ring()->to_string(s.at(1, 1)) == "5");
}

TEST_CASE("malformed matrix files are rejected") {
    CHECK_THROWS_AS(matrix_from_json(nlohmann::json::parse(R"({"n": 2})")), ParseError);
    CHECK_THROWS_AS(
        matrix_from_json(nlohmann::json::parse(
            R"({"ring": "rational", "n": 2, "entries": [["1","2"]]})")),
        ParseError);
    CHECK_THROWS_AS(
        matrix_from_json(nlohmann::json::parse(
            R"({"ring": "rational", "n": 2, "entries": [["1","2"],["3"]]})")),
        ParseError);
    CHECK_THROWS_AS(
        matrix_from_json(nlohmann::json::parse(
            R"({"ring": "rational", "n": 0, "entries": []})")),
        ParseError);
    CHECK_THROWS_AS(
        matrix_from_json(nlohmann::json::parse(
            R"({"ring": "quaternion", "n": 1, "entries": [[["1","2"]]]})")),
        ParseError);
}

TEST_CASE("symbolic matrices with computed entries round trip") {
    for (const std::string& name : {std::string("poly:2"), std::string("free:2")}) {
        auto ring = make_ring(name);
        std::mt19937_64 rng(257);
        Matrix a(ring, 2);
        for (int i = 0; i < 2; ++i)
            for (int j = 0; j < 2; ++j) {
                // multi-term entries, beyond what the human-readable
                // variable syntax can express
                Value v = ring->mul(ring->sample(rng), ring->sample(rng));
                a.set(i, j, ring->add(v, ring->sample(rng)));
            }
        Matrix b = matrix_from_json(matrix_to_json(a));
        CHECK(matrix_equal(a, b.with_ring(ring)));
    }
}

TEST_CASE("matrix files written to disk re-parse identically") {
    auto ring = make_ring("quaternion");
    std::mt19937_64 rng(167);
    Matrix a = random_matrix(ring, 3, rng);
    TempFile f("");
    save_matrix_file(a, f.path);
    Matrix b = load_matrix_file(f.path);
    CHECK(matrix_equal(a, b.with_ring(ring)));
    CHECK(b.ring()->name() == "quaternion");
}

TEST_CASE("prime field entries reduce into range") {
    auto ring = make_ring("mod:5");
    const nlohmann::json j = nlohmann::json::parse(R"({
        "ring": "mod:5", "n": 1, "entries": [["-3"]]
    })");
    Matrix a = matrix_from_json(j);
    CHECK(ring->equal(a.at(0, 0), ring->from_int(2)));
}
