#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "edet/free_algebra.hpp"
#include "edet/matrix_ring.hpp"
#include "edet/octonion.hpp"
#include "edet/permutations.hpp"
#include "edet/polynomial.hpp"
#include "edet/prime_field.hpp"
#include "edet/quaternion.hpp"
#include "edet/rational.hpp"
#include "edet/table_algebra.hpp"

using namespace edet;

namespace {

// k*x through additions only, so div_int round trips are independent of
// the ring's multiplication.
Value int_scale(const Ring& r, const Value& x, int k) {
    if (k == 0)
        return r.zero();
    Value acc = x;
    for (int i = 1; i < (k > 0 ? k : -k); ++i)
        acc = r.add(acc, x);
    return k > 0 ? acc : r.neg(acc);
}

// The non-power-associative 2d algebra used throughout: u*u=v, u*v=u,
// v*u=v, v*v=0.
StructureTable non_pa_table() {
    StructureTable t;
    t.dimension = 2;
    t.table = {{{mpq_class(0), mpq_class(1)}, {mpq_class(1), mpq_class(0)}},
               {{mpq_class(0), mpq_class(1)}, {mpq_class(0), mpq_class(0)}}};
    return t;
}

void check_ring_axioms(const RingPtr& ring, int triples) {
    const Ring& r = *ring;
    std::mt19937_64 rng(7);
    for (int i = 0; i < triples; ++i) {
        const Value x = r.sample(rng);
        const Value y = r.sample(rng);
        const Value z = r.sample(rng);
        CHECK(r.equal(r.add(r.add(x, y), z), r.add(x, r.add(y, z))));
        CHECK(r.equal(r.add(x, y), r.add(y, x)));
        CHECK(r.equal(r.add(x, r.neg(x)), r.zero()));
        CHECK(r.equal(r.add(x, r.zero()), x));
        CHECK(r.equal(r.mul(x, r.add(y, z)), r.add(r.mul(x, y), r.mul(x, z))));
        CHECK(r.equal(r.mul(r.add(y, z), x), r.add(r.mul(y, x), r.mul(z, x))));
    }
    std::uniform_int_distribution<int> ks(1, 12);
    for (int i = 0; i < triples; ++i) {
        const Value x = r.sample(rng);
        long long k = ks(rng);
        if (r.descriptor().characteristic != 0)
            k = k % static_cast<long long>(r.descriptor().characteristic - 1) + 1;
        const long long signed_k = (i % 2 == 0) ? k : -k;
        CHECK(r.equal(r.div_int(int_scale(r, x, static_cast<int>(signed_k)), signed_k), x));
    }
}

} // namespace

TEST_CASE("rational canonical forms") {
    auto ring = make_rational_ring();
    CHECK(ring->equal(ring->parse("2/4"), ring->parse("1/2")));
    CHECK(ring->equal(ring->parse("0/1"), ring->zero()));
    CHECK(ring->to_string(ring->parse("-4/6")) == "-2/3");
    CHECK(ring->to_string(ring->from_int(-7)) == "-7");
    CHECK_THROWS_AS(ring->parse("1.5"), ParseError);
    CHECK_THROWS_AS(ring->parse("abc"), ParseError);
    CHECK_THROWS_AS(ring->parse("1/0"), ParseError);
}

TEST_CASE("rational division by integers") {
    auto ring = make_rational_ring();
    CHECK(ring->equal(ring->div_int(ring->from_int(6), 3), ring->from_int(2)));
    for (long long k : {1LL, -2LL, 7LL, 100LL})
        CHECK(ring->equal(ring->div_int(ring->zero(), k), ring->zero()));
    CHECK_THROWS_AS(ring->div_int(ring->one(), 0), DivisionUnavailable);
}

TEST_CASE("prime field basics") {
    auto ring = make_prime_field(7);
    // solve 2y = 3 (mod 7) by exhaustion: the unique y is 5
    int expected = -1;
    for (int y = 0; y < 7; ++y)
        if (2 * y % 7 == 3)
            expected = y;
    CHECK(expected == 5);
    CHECK(ring->equal(ring->div_int(ring->from_int(3), 2), ring->from_int(expected)));

    auto z5 = make_prime_field(5);
    CHECK(z5->equal(z5->from_int(7), z5->from_int(2)));
    CHECK_THROWS_AS(make_prime_field(6), Error);
    CHECK_THROWS_AS(ring->equal(ring->one(), z5->one()), RingMismatch);
}

TEST_CASE("prime field admissibility thresholds") {
    auto z13 = make_prime_field(13);
    for (int n = 1; n <= 6; ++n) { // n <= (p-1)/2
        CHECK_NOTHROW(z13->div_int(z13->one(), factorial(n)));
        CHECK_NOTHROW(z13->div_int(z13->one(), catalan(n)));
    }
    auto z5 = make_prime_field(5);
    CHECK_THROWS_AS(z5->div_int(z5->one(), factorial(5)), DivisionUnavailable);
    CHECK_THROWS_AS(z5->div_int(z5->one(), factorial(7)), DivisionUnavailable);
}

TEST_CASE("descriptor flag monotonicity is enforced") {
    RingDescriptor bad{.name = "bad",
                       .is_commutative = true,
                       .is_associative = false,
                       .is_power_associative = false,
                       .has_unit = true,
                       .characteristic = 0};
    CHECK_THROWS_AS(bad.validate(), Error);
    RingDescriptor bad2{.name = "bad2",
                        .is_commutative = false,
                        .is_associative = true,
                        .is_power_associative = false,
                        .has_unit = true,
                        .characteristic = 0};
    CHECK_THROWS_AS(bad2.validate(), Error);
}

TEST_CASE("ring axioms hold on random samples") {
    check_ring_axioms(make_rational_ring(), 1000);
    check_ring_axioms(make_prime_field(13), 1000);
    check_ring_axioms(make_quaternion_ring(), 1000);
    check_ring_axioms(make_octonion_ring(), 300);
    check_ring_axioms(make_table_algebra(non_pa_table()), 1000);
    check_ring_axioms(make_matrix_ring(2, make_rational_ring()), 300);
    check_ring_axioms(make_polynomial_ring(2), 200);
    check_ring_axioms(make_free_algebra(2), 200);
}

TEST_CASE("quaternions are associative but not commutative") {
    auto ring = make_quaternion_ring();
    std::mt19937_64 rng(11);
    int violations = 0;
    for (int i = 0; i < 1000; ++i) {
        const Value x = ring->sample(rng);
        const Value y = ring->sample(rng);
        if (!ring->equal(ring->mul(x, y), ring->mul(y, x)))
            ++violations;
    }
    CHECK(violations > 0);
    for (int i = 0; i < 1000; ++i) {
        const Value x = ring->sample(rng);
        const Value y = ring->sample(rng);
        const Value z = ring->sample(rng);
        CHECK(ring->equal(ring->mul(ring->mul(x, y), z), ring->mul(x, ring->mul(y, z))));
    }
    // ij = k, ijk = -1
    auto q = std::static_pointer_cast<const QuaternionRing>(ring);
    const Value i = q->from_coeffs({mpq_class(0), mpq_class(1), mpq_class(0), mpq_class(0)});
    const Value j = q->from_coeffs({mpq_class(0), mpq_class(0), mpq_class(1), mpq_class(0)});
    const Value k = q->from_coeffs({mpq_class(0), mpq_class(0), mpq_class(0), mpq_class(1)});
    CHECK(ring->equal(ring->mul(i, j), k));
    CHECK(ring->equal(ring->mul(ring->mul(i, j), k), ring->neg(ring->one())));
}

TEST_CASE("octonions are alternative but not associative") {
    auto ring = make_octonion_ring();
    auto oct = std::static_pointer_cast<const OctonionRing>(ring);

    bool found_nonzero_associator = false;
    for (int a = 1; a < 8 && !found_nonzero_associator; ++a)
        for (int b = 1; b < 8 && !found_nonzero_associator; ++b)
            for (int c = 1; c < 8 && !found_nonzero_associator; ++c) {
                const Value lhs =
                    ring->mul(ring->mul(oct->basis(a), oct->basis(b)), oct->basis(c));
                const Value rhs =
                    ring->mul(oct->basis(a), ring->mul(oct->basis(b), oct->basis(c)));
                if (!ring->equal(lhs, rhs))
                    found_nonzero_associator = true;
            }
    CHECK(found_nonzero_associator);

    std::mt19937_64 rng(13);
    for (int i = 0; i < 1000; ++i) {
        const Value x = ring->sample(rng);
        CHECK(ring->equal(ring->mul(ring->mul(x, x), x), ring->mul(x, ring->mul(x, x))));
    }
    // alternative laws on random pairs
    for (int i = 0; i < 200; ++i) {
        const Value x = ring->sample(rng);
        const Value y = ring->sample(rng);
        CHECK(ring->equal(ring->mul(ring->mul(x, x), y), ring->mul(x, ring->mul(x, y))));
        CHECK(ring->equal(ring->mul(ring->mul(y, x), x), ring->mul(y, ring->mul(x, x))));
    }
    CHECK_FALSE(ring->descriptor().is_associative);
    CHECK(ring->descriptor().is_power_associative);
}

TEST_CASE("table algebra capability flags") {
    SUBCASE("non-power-associative 2d example") {
        auto ring = make_table_algebra(non_pa_table());
        auto t = std::static_pointer_cast<const TableAlgebraRing>(ring);
        const Value u = t->basis(0);
        const Value v = t->basis(1);
        CHECK(ring->equal(ring->mul(ring->mul(u, u), u), v)); // (uu)u = v*u = v
        CHECK(ring->equal(ring->mul(u, ring->mul(u, u)), u)); // u(uu) = u*v = u
        CHECK_FALSE(ring->descriptor().is_associative);
        CHECK_FALSE(ring->descriptor().is_power_associative);
        CHECK_FALSE(ring->descriptor().is_commutative);
        CHECK_FALSE(ring->descriptor().has_unit);
    }
    SUBCASE("one-dimensional unital table is the rationals") {
        StructureTable t;
        t.dimension = 1;
        t.table = {{{mpq_class(1)}}};
        auto ring = make_table_algebra(std::move(t));
        CHECK(ring->descriptor().is_associative);
        CHECK(ring->descriptor().is_commutative);
        CHECK(ring->descriptor().has_unit);
        CHECK(ring->equal(ring->mul(ring->one(), ring->one()), ring->one()));
    }
    SUBCASE("octonion structure constants") {
        auto oct = std::make_shared<OctonionRing>();
        StructureTable t;
        t.dimension = 8;
        t.table.assign(8, std::vector<std::vector<mpq_class>>(8, std::vector<mpq_class>(8)));
        for (int i = 0; i < 8; ++i)
            for (int j = 0; j < 8; ++j) {
                const auto prod = OctonionRing::get(oct->mul(oct->basis(i), oct->basis(j)));
                for (int k = 0; k < 8; ++k)
                    t.table[static_cast<size_t>(i)][static_cast<size_t>(j)][static_cast<size_t>(
                        k)] = prod[static_cast<size_t>(k)];
            }
        auto ring = make_table_algebra(std::move(t));
        CHECK_FALSE(ring->descriptor().is_associative);
        CHECK(ring->descriptor().is_power_associative); // cube heuristic
        CHECK(ring->descriptor().has_unit);
    }
    SUBCASE("malformed tables are rejected") {
        StructureTable t;
        t.dimension = 2;
        t.table = {{{mpq_class(0)}}};
        CHECK_THROWS_AS(make_table_algebra(std::move(t)), MalformedTable);
        StructureTable t2;
        t2.dimension = 0;
        CHECK_THROWS_AS(make_table_algebra(std::move(t2)), MalformedTable);
    }
}

TEST_CASE("table algebra flags agree with brute force on basis triples") {
    // quaternion structure constants: must come out associative
    auto q = std::make_shared<QuaternionRing>();
    StructureTable t;
    t.dimension = 4;
    t.table.assign(4, std::vector<std::vector<mpq_class>>(4, std::vector<mpq_class>(4)));
    for (int i = 0; i < 4; ++i)
        for (int j = 0; j < 4; ++j) {
            std::array<mpq_class, 4> ei{}, ej{};
            ei[static_cast<size_t>(i)] = 1;
            ej[static_cast<size_t>(j)] = 1;
            const auto prod = QuaternionRing::get(q->mul(q->from_coeffs(ei), q->from_coeffs(ej)));
            for (int k = 0; k < 4; ++k)
                t.table[static_cast<size_t>(i)][static_cast<size_t>(j)][static_cast<size_t>(k)] =
                    prod[static_cast<size_t>(k)];
        }
    auto ring = make_table_algebra(std::move(t));
    auto tring = std::static_pointer_cast<const TableAlgebraRing>(ring);
    bool brute_assoc = true;
    for (int i = 0; i < 4 && brute_assoc; ++i)
        for (int j = 0; j < 4 && brute_assoc; ++j)
            for (int k = 0; k < 4 && brute_assoc; ++k) {
                const Value a = tring->basis(i), b = tring->basis(j), c = tring->basis(k);
                brute_assoc =
                    ring->equal(ring->mul(ring->mul(a, b), c), ring->mul(a, ring->mul(b, c)));
            }
    CHECK(brute_assoc);
    CHECK(ring->descriptor().is_associative == brute_assoc);
    CHECK(ring->descriptor().has_unit);
}

TEST_CASE("matrix ring element arithmetic") {
    auto ring = make_matrix_ring(2, make_rational_ring());
    CHECK(ring->descriptor().is_associative);
    CHECK_FALSE(ring->descriptor().is_commutative);
    CHECK(ring->descriptor().has_unit);
    std::mt19937_64 rng(17);
    int violations = 0;
    for (int i = 0; i < 200; ++i) {
        const Value x = ring->sample(rng);
        const Value y = ring->sample(rng);
        if (!ring->equal(ring->mul(x, y), ring->mul(y, x)))
            ++violations;
    }
    CHECK(violations > 0);
    CHECK(ring->equal(ring->mul(ring->one(), ring->one()), ring->one()));
}

TEST_CASE("polynomial ring expansion and equality") {
    auto ring = std::make_shared<PolynomialRing>(2);
    const Value x11 = ring->variable(0, 0);
    const Value x12 = ring->variable(0, 1);
    const Value sum = ring->add(x11, x12);
    const Value square = ring->mul(sum, sum);
    // (x11+x12)^2 = x11^2 + 2 x11 x12 + x12^2
    Value expected = ring->mul(x11, x11);
    expected = ring->add(expected, int_scale(*ring, ring->mul(x11, x12), 2));
    expected = ring->add(expected, ring->mul(x12, x12));
    CHECK(ring->equal(square, expected));
    CHECK(ring->to_string(ring->zero()) == "0");
    CHECK(ring->to_string(square) == "x11^2 + 2*x11*x12 + x12^2");
}

TEST_CASE("free algebra words concatenate with graded lengths") {
    auto ring = std::make_shared<FreeAlgebraRing>(2);
    const Value a = ring->letter(0, 0);
    const Value b = ring->letter(0, 1);
    CHECK_FALSE(ring->equal(ring->mul(a, b), ring->mul(b, a)));
    // product of words of lengths p and q is a word of length p+q
    std::mt19937_64 rng(23);
    std::uniform_int_distribution<int> pick(0, 1);
    std::uniform_int_distribution<int> len(1, 4);
    for (int trial = 0; trial < 100; ++trial) {
        const int p = len(rng), q = len(rng);
        Value w1 = ring->letter(pick(rng), pick(rng));
        for (int i = 1; i < p; ++i)
            w1 = ring->mul(w1, ring->letter(pick(rng), pick(rng)));
        Value w2 = ring->letter(pick(rng), pick(rng));
        for (int i = 1; i < q; ++i)
            w2 = ring->mul(w2, ring->letter(pick(rng), pick(rng)));
        const auto& terms = ring->get_terms(ring->mul(w1, w2));
        REQUIRE(terms.size() == 1);
        CHECK(static_cast<int>(terms.begin()->first.size()) == p + q);
    }
}

TEST_CASE("values from the wrong ring are rejected") {
    auto rat = make_rational_ring();
    auto quat = make_quaternion_ring();
    CHECK_THROWS_AS(quat->add(rat->one(), quat->one()), RingMismatch);
    auto m2 = make_matrix_ring(2, rat);
    auto m3 = make_matrix_ring(3, rat);
    CHECK_THROWS_AS(m3->add(m2->one(), m3->one()), RingMismatch);
}

TEST_CASE("unitless rings refuse one()") {
    auto ring = make_table_algebra(non_pa_table());
    CHECK_THROWS_AS(ring->one(), NoUnit);
    CHECK_THROWS_AS(ring->from_int(3), NoUnit);
}
