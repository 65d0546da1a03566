#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "edet/engines.hpp"
#include "edet/free_algebra.hpp"
#include "edet/matrix_ring.hpp"
#include "edet/octonion.hpp"
#include "edet/polynomial.hpp"
#include "edet/prime_field.hpp"
#include "edet/quaternion.hpp"
#include "edet/rational.hpp"
#include "edet/symbolic_matrix.hpp"
#include "edet/table_algebra.hpp"

using namespace edet;

namespace {

Matrix rational_matrix(const RingPtr& ring, const std::vector<std::vector<long>>& rows) {
    const int n = static_cast<int>(rows.size());
    Matrix m(ring, n);
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j)
            m.set(i, j, ring->from_int(rows[static_cast<size_t>(i)][static_cast<size_t>(j)]));
    return m;
}

StructureTable non_pa_table() {
    StructureTable t;
    t.dimension = 2;
    t.table = {{{mpq_class(0), mpq_class(1)}, {mpq_class(1), mpq_class(0)}},
               {{mpq_class(0), mpq_class(1)}, {mpq_class(0), mpq_class(0)}}};
    return t;
}

Value quaternion_unit(const RingPtr& ring, int axis) {
    auto q = std::static_pointer_cast<const QuaternionRing>(ring);
    std::array<mpq_class, 4> c{};
    c[static_cast<size_t>(axis)] = 1;
    return q->from_coeffs(std::move(c));
}

// Independent oracle for ass_power: enumerate every bracketing of the
// k-fold product recursively and sum the results.
Value sum_of_bracketings(const Ring& ring, const Value& a, int k) {
    if (k == 1)
        return a;
    Value total;
    bool first = true;
    for (int left = 1; left < k; ++left) {
        const Value l = sum_of_bracketings(ring, a, left);
        const Value r = sum_of_bracketings(ring, a, k - left);
        const Value prod = ring.mul(l, r);
        total = first ? prod : ring.add(total, prod);
        first = false;
    }
    return total;
}

} // namespace

TEST_CASE("leibniz determinant") {
    auto ring = make_rational_ring();
    CHECK(ring->equal(leibniz_det(rational_matrix(ring, {{1, 2}, {3, 4}})), ring->from_int(-2)));
    for (int n = 1; n <= 6; ++n)
        CHECK(ring->equal(leibniz_det(identity_matrix(ring, n)), ring->one()));

    // written out over the symbolic ring: x11*x22 - x12*x21
    Matrix sym = free_symbolic_matrix(2, true);
    auto poly = std::static_pointer_cast<const PolynomialRing>(sym.ring());
    const Value expected = poly->sub(poly->mul(poly->variable(0, 0), poly->variable(1, 1)),
                                     poly->mul(poly->variable(0, 1), poly->variable(1, 0)));
    CHECK(poly->equal(leibniz_det(sym), expected));

    CHECK_THROWS_AS(leibniz_det(identity_matrix(make_quaternion_ring(), 2)),
                    RingNotCommutative);
}

TEST_CASE("block sums for the frozen examples") {
    auto ring = make_rational_ring();
    SUBCASE("identity 3x3") {
        const BlockSums s = su_power_block_sums(identity_matrix(ring, 3), 3);
        CHECK(ring->equal(s.len_n1_even, ring->from_int(24)));
        CHECK(ring->equal(s.len_n1_odd, ring->from_int(6)));
        CHECK(ring->equal(s.len_n_odd, ring->from_int(3)));
        CHECK(ring->equal(s.len_n_even, ring->from_int(27)));
    }
    SUBCASE("[[1,2],[3,4]]") {
        const BlockSums s = su_power_block_sums(rational_matrix(ring, {{1, 2}, {3, 4}}), 2);
        CHECK(ring->equal(s.len_n1_even, ring->from_int(17))); // 1^2 + 4^2
        CHECK(ring->equal(s.len_n1_odd, ring->from_int(13)));  // 3^2 + 2^2
        CHECK(ring->equal(s.len_n_odd, ring->from_int(25)));
        CHECK(ring->equal(s.len_n_even, ring->from_int(25)));
    }
}

TEST_CASE("block sum variants agree where they overlap") {
    auto ring = make_rational_ring();
    std::mt19937_64 rng(211);
    Matrix a = random_matrix(ring, 3, rng);
    const BlockSums plain = su_power_block_sums(a, 3);
    const BlockSums shifted = shifted_power_block_sums(a, ring->zero());
    const BlockSums averaged = averaged_power_block_sums(a);
    for (Value BlockSums::*field :
         {&BlockSums::len_n1_even, &BlockSums::len_n1_odd, &BlockSums::len_n_even,
          &BlockSums::len_n_odd}) {
        CHECK(ring->equal(plain.*field, shifted.*field));
        CHECK(ring->equal(plain.*field, averaged.*field));
    }
}

TEST_CASE("the sign of the prefactor") {
    // On diag(1,1,1) the four block sums are 24, 6, 3, 27, so the bracket
    // evaluates to -6. With the prefactor (-1)^(n-1)/n! the odd order
    // n = 3 would give -1, contradicting the definitional determinant;
    // the engine's -1/n! gives +1.
    auto ring = make_rational_ring();
    Matrix id = identity_matrix(ring, 3);
    const BlockSums s = su_power_block_sums(id, 3);
    Value bracket = ring->sub(s.len_n1_even, s.len_n1_odd);
    bracket = ring->add(bracket, s.len_n_odd);
    bracket = ring->sub(bracket, s.len_n_even);
    CHECK(ring->equal(bracket, ring->from_int(-6)));

    const Value printed_variant = ring->div_int(bracket, factorial(3)); // (+1/6) * (-6)
    CHECK(ring->equal(printed_variant, ring->from_int(-1)));

    CHECK(ring->equal(power_sum_det(id), ring->one()));
    CHECK(ring->equal(leibniz_det(id), ring->one()));
}

TEST_CASE("power sum determinant over the rationals") {
    auto ring = make_rational_ring();
    CHECK(ring->equal(power_sum_det(rational_matrix(ring, {{1, 2}, {3, 4}})), ring->from_int(-2)));
    std::mt19937_64 rng(47);
    for (int n = 1; n <= 5; ++n) {
        for (int trial = 0; trial < 25; ++trial) {
            Matrix a = random_matrix(ring, n, rng);
            CHECK(ring->equal(power_sum_det(a), leibniz_det(a)));
        }
    }
}

TEST_CASE("uniform gamma determinant") {
    auto ring = make_rational_ring();
    CHECK(ring->equal(uniform_gamma_det(identity_matrix(ring, 3), ring->zero()), ring->one()));
    CHECK(ring->equal(uniform_gamma_det(rational_matrix(ring, {{1, 2}, {3, 4}}), ring->zero()),
                      ring->from_int(-2)));
    CHECK(ring->equal(uniform_gamma_det(identity_matrix(ring, 2), ring->one()), ring->one()));

    // shift invariance against the leibniz oracle
    std::mt19937_64 rng(53);
    for (int n = 1; n <= 5; ++n) {
        for (int trial = 0; trial < 10; ++trial) {
            Matrix a = random_matrix(ring, n, rng);
            const Value det = leibniz_det(a);
            for (long g : {-3L, 0L, 1L, 9L})
                CHECK(ring->equal(uniform_gamma_det(a, ring->from_int(g)), det));
        }
    }
}

TEST_CASE("polarized determinant") {
    auto ring = make_rational_ring();
    SUBCASE("zero assignment reduces to the power sum form") {
        std::mt19937_64 rng(59);
        for (int n = 1; n <= 5; ++n) {
            Matrix a = random_matrix(ring, n, rng);
            CHECK(ring->equal(polarized_det(a, GammaAssignment::zero()), power_sum_det(a)));
        }
    }
    SUBCASE("constant 7 on the 2x2 example") {
        Matrix a = rational_matrix(ring, {{1, 2}, {3, 4}});
        CHECK(ring->equal(polarized_det(a, GammaAssignment::constant(ring->from_int(7))),
                          ring->from_int(-2)));
    }
    SUBCASE("gamma invariance: twenty random assignments, one value") {
        std::mt19937_64 rng(61);
        Matrix a = random_matrix(ring, 3, rng);
        const Value det = leibniz_det(a);
        for (std::uint64_t seed = 0; seed < 20; ++seed)
            CHECK(ring->equal(polarized_det(a, GammaAssignment::seeded(seed)), det));
    }
    SUBCASE("explicit per-permutation shifts") {
        Matrix a = rational_matrix(ring, {{2, 5}, {1, 3}});
        std::vector<Value> gammas{ring->from_int(4), ring->from_int(-2)};
        CHECK(ring->equal(polarized_det(a, GammaAssignment::explicit_list(gammas)),
                          ring->one()));
        std::vector<Value> wrong{ring->from_int(4)};
        CHECK_THROWS_AS(polarized_det(a, GammaAssignment::explicit_list(wrong)), PayloadLength);
    }
}

TEST_CASE("polarization kernel in isolation") {
    // sum over subsets S of [n] of (-1)^(n-|S|) (gamma + sum_S x_i)^n
    // equals n! x_1 ... x_n over a commutative ring.
    auto ring = make_rational_ring();
    std::mt19937_64 rng(67);
    for (int n = 1; n <= 6; ++n) {
        for (int trial = 0; trial < 10; ++trial) {
            std::vector<Value> xs;
            for (int i = 0; i < n; ++i)
                xs.push_back(ring->sample(rng));
            const Value gamma = ring->sample(rng);

            Value acc = ring->zero();
            for (unsigned mask = 0; mask < (1u << n); ++mask) {
                Value sum = gamma;
                int size = 0;
                for (int i = 0; i < n; ++i)
                    if (mask & (1u << i)) {
                        sum = ring->add(sum, xs[static_cast<size_t>(i)]);
                        ++size;
                    }
                const Value p = ring->pow(sum, static_cast<unsigned>(n));
                acc = ((n - size) % 2 == 0) ? ring->add(acc, p) : ring->sub(acc, p);
            }

            Value product = ring->from_int(factorial(n));
            for (const auto& x : xs)
                product = ring->mul(product, x);
            CHECK(ring->equal(acc, product));
        }
    }
}

TEST_CASE("sdet agrees with the leibniz determinant over commutative rings") {
    auto ring = make_rational_ring();
    CHECK(ring->equal(sdet_barvinok(rational_matrix(ring, {{1, 2}, {3, 4}})), ring->from_int(-2)));
    std::mt19937_64 rng(71);
    for (int n = 1; n <= 4; ++n)
        for (int trial = 0; trial < 10; ++trial) {
            Matrix a = random_matrix(ring, n, rng);
            CHECK(ring->equal(sdet_barvinok(a), leibniz_det(a)));
        }
}

TEST_CASE("quaternion 2x2 with unit entries") {
    auto ring = make_quaternion_ring();
    Matrix a(ring, 2);
    a.set(0, 0, quaternion_unit(ring, 1)); // i
    a.set(0, 1, quaternion_unit(ring, 2)); // j
    a.set(1, 0, quaternion_unit(ring, 3)); // k
    a.set(1, 1, ring->one());
    const Value expected = quaternion_unit(ring, 1); // (i*1 + 1*i - j*k - k*j)/2 = i
    CHECK(ring->equal(sdet_barvinok(a), expected));
    CHECK(ring->equal(power_sum_det(a), expected));
}

TEST_CASE("sdet equals the power sum determinant over associative rings") {
    std::mt19937_64 rng(73);
    for (const RingPtr& ring :
         {make_quaternion_ring(), make_matrix_ring(2, make_rational_ring())}) {
        for (int n : {2, 3}) {
            for (int trial = 0; trial < 200; ++trial) {
                Matrix a = random_matrix(ring, n, rng);
                CHECK(ring->equal(sdet_barvinok(a), power_sum_det(a)));
            }
        }
    }
}

TEST_CASE("symbolic matrix orders are capped") {
    CHECK_NOTHROW(free_symbolic_matrix(4, true));
    CHECK_THROWS_AS(free_symbolic_matrix(5, true), OrderTooLarge);
    CHECK_NOTHROW(free_symbolic_matrix(3, false));
    CHECK_THROWS_AS(free_symbolic_matrix(4, false), OrderTooLarge);
    CHECK_THROWS_AS(free_symbolic_matrix(0, true), OrderTooLarge);
}

TEST_CASE("symbolic identities") {
    SUBCASE("commutative: power sum equals leibniz as polynomials, n=2,3") {
        for (int n : {2, 3}) {
            Matrix sym = free_symbolic_matrix(n, true);
            CHECK(sym.ring()->equal(power_sum_det(sym), leibniz_det(sym)));
        }
    }
    SUBCASE("free noncommutative: power sum equals sdet word by word, n=2") {
        Matrix sym = free_symbolic_matrix(2, false);
        CHECK(sym.ring()->equal(power_sum_det(sym), sdet_barvinok(sym)));
    }
    SUBCASE("free n=2 expands to the symmetrized half sum") {
        Matrix sym = free_symbolic_matrix(2, false);
        auto ring = std::static_pointer_cast<const FreeAlgebraRing>(sym.ring());
        Value expected = ring->mul(ring->letter(0, 0), ring->letter(1, 1));
        expected = ring->add(expected, ring->mul(ring->letter(1, 1), ring->letter(0, 0)));
        expected = ring->sub(expected, ring->mul(ring->letter(0, 1), ring->letter(1, 0)));
        expected = ring->sub(expected, ring->mul(ring->letter(1, 0), ring->letter(0, 1)));
        expected = ring->div_int(expected, 2);
        CHECK(ring->equal(power_sum_det(sym), expected));
    }
}

TEST_CASE("ass_power") {
    auto table_ring = make_table_algebra(non_pa_table());
    auto t = std::static_pointer_cast<const TableAlgebraRing>(table_ring);
    const Value u = t->basis(0);
    const Value v = t->basis(1);

    SUBCASE("frozen 2d example: Ass(u^3) = (u+v)/2") {
        // (uu)u = v, u(uu) = u, catalan(3) = 2
        const Value expected = table_ring->div_int(table_ring->add(u, v), 2);
        CHECK(table_ring->equal(ass_power(*table_ring, u, 3), expected));
    }
    SUBCASE("exponent one is the element itself") {
        CHECK(table_ring->equal(ass_power(*table_ring, u, 1), u));
        CHECK_THROWS_AS(ass_power(*table_ring, u, 0), ExponentOutOfRange);
    }
    SUBCASE("octonion cubes agree with the plain power") {
        auto oct = make_octonion_ring();
        std::mt19937_64 rng(79);
        for (int trial = 0; trial < 50; ++trial) {
            const Value a = oct->sample(rng);
            CHECK(oct->equal(ass_power(*oct, a, 3), oct->pow(a, 3)));
        }
    }
    SUBCASE("bracketing enumeration oracle, n = 2..6") {
        std::mt19937_64 rng(83);
        for (unsigned n = 2; n <= 6; ++n) {
            for (int trial = 0; trial < 100; ++trial) {
                const Value a = table_ring->sample(rng);
                const Value brute = table_ring->div_int(
                    sum_of_bracketings(*table_ring, a, static_cast<int>(n)), catalan(static_cast<int>(n)));
                CHECK(table_ring->equal(ass_power(*table_ring, a, n), brute));
            }
        }
    }
}

TEST_CASE("nonassoc_edet") {
    SUBCASE("agrees with power_sum_det on associative and power-associative rings") {
        std::mt19937_64 rng(89);
        for (const RingPtr& ring : {make_rational_ring(), make_quaternion_ring()}) {
            for (int n : {2, 3})
                for (int trial = 0; trial < 10; ++trial) {
                    Matrix a = random_matrix(ring, n, rng);
                    CHECK(ring->equal(nonassoc_edet(a), power_sum_det(a)));
                }
        }
        auto oct = make_octonion_ring();
        for (int trial = 0; trial < 10; ++trial) {
            Matrix a = random_matrix(oct, 2, rng);
            CHECK(oct->equal(nonassoc_edet(a), power_sum_det(a)));
        }
    }
    SUBCASE("equal rows give zero over the table algebra") {
        auto ring = make_table_algebra(non_pa_table());
        std::mt19937_64 rng(97);
        for (int trial = 0; trial < 50; ++trial) {
            Matrix a = random_matrix(ring, 2, rng);
            for (int j = 0; j < 2; ++j)
                a.set(1, j, a.at(0, j));
            CHECK(ring->is_zero(nonassoc_edet(a)));
        }
    }
    SUBCASE("power_sum_det refuses rings with ambiguous powers") {
        auto ring = make_table_algebra(non_pa_table());
        std::mt19937_64 rng(101);
        Matrix a = random_matrix(ring, 2, rng);
        CHECK_THROWS_AS(power_sum_det(a), RingNotPowerAssociative);
        CHECK_NOTHROW(nonassoc_edet(a));
    }
}

TEST_CASE("identity residuals vanish") {
    auto ring = make_rational_ring();
    SUBCASE("identity 3x3 at t=1, with block values 6,6,3,3") {
        Matrix id = identity_matrix(ring, 3);
        const BlockSums s = su_power_block_sums(id, 1);
        CHECK(ring->equal(s.len_n1_even, ring->from_int(6)));
        CHECK(ring->equal(s.len_n1_odd, ring->from_int(6)));
        CHECK(ring->equal(s.len_n_odd, ring->from_int(3)));
        CHECK(ring->equal(s.len_n_even, ring->from_int(3)));
        CHECK(ring->is_zero(identity_residual(id, 1)));
    }
    SUBCASE("random rational 4x4, t = 1..3") {
        std::mt19937_64 rng(103);
        for (int trial = 0; trial < 25; ++trial) {
            Matrix a = random_matrix(ring, 4, rng);
            for (unsigned t = 1; t <= 3; ++t)
                CHECK(ring->is_zero(identity_residual(a, t)));
        }
    }
    SUBCASE("symbolically at n=3, t=1,2") {
        Matrix sym = free_symbolic_matrix(3, true);
        CHECK(sym.ring()->is_zero(identity_residual(sym, 1)));
        CHECK(sym.ring()->is_zero(identity_residual(sym, 2)));
    }
    SUBCASE("exponent range is enforced") {
        Matrix a = identity_matrix(ring, 3);
        CHECK_THROWS_AS(identity_residual(a, 0), ExponentOutOfRange);
        CHECK_THROWS_AS(identity_residual(a, 3), ExponentOutOfRange);
    }
}

TEST_CASE("singularity criterion") {
    auto ring = make_rational_ring();
    CHECK(singularity_check(rational_matrix(ring, {{1, 2}, {2, 4}})));
    CHECK_FALSE(singularity_check(identity_matrix(ring, 3)));
    // the rank-one 4x4 outer product plus a dependent row
    Matrix outer(ring, 4);
    const long us[4] = {1, -2, 3, 1};
    const long vs[4] = {2, 1, -1, 3};
    for (int i = 0; i < 4; ++i)
        for (int j = 0; j < 4; ++j)
            outer.set(i, j, ring->from_int(us[i] * vs[j]));
    CHECK(ring->is_zero(leibniz_det(outer)));
    CHECK(singularity_check(outer));

    std::mt19937_64 rng(107);
    for (int n = 2; n <= 4; ++n)
        for (int trial = 0; trial < 20; ++trial) {
            Matrix a = random_matrix(ring, n, rng);
            CHECK(singularity_check(a) == ring->is_zero(leibniz_det(a)));
        }
}

TEST_CASE("prime field orders are gated by the characteristic") {
    auto z7 = make_prime_field(7);
    std::mt19937_64 rng(109);
    SUBCASE("small orders work and match leibniz") {
        for (int n = 2; n <= 4; ++n) {
            Matrix a = random_matrix(z7, n, rng);
            CHECK(z7->equal(power_sum_det(a), leibniz_det(a)));
        }
    }
    SUBCASE("n >= p is refused up front") {
        Matrix a = random_matrix(z7, 7, rng);
        CHECK_THROWS_AS(power_sum_det(a), DivisionUnavailable);
    }
    SUBCASE("the nonassociative path needs p > 2n-2") {
        auto z5 = make_prime_field(5);
        Matrix a = random_matrix(z5, 4, rng); // 2n-2 = 6 >= 5
        CHECK_THROWS_AS(nonassoc_edet(a), DivisionUnavailable);
        Matrix b = random_matrix(z7, 4, rng); // 2n-2 = 6 < 7
        CHECK_NOTHROW(nonassoc_edet(b));
    }
}

TEST_CASE("method admissibility") {
    std::mt19937_64 rng(113);
    auto oct = make_octonion_ring();
    Matrix a = random_matrix(oct, 2, rng);
    CHECK_THROWS_AS(sdet_barvinok(a), RingNotAssociative);
    CHECK_THROWS_AS(leibniz_det(a), RingNotCommutative);
    CHECK_THROWS_AS(uniform_gamma_det(a, oct->zero()), RingNotCommutative);
    CHECK_NOTHROW(power_sum_det(a)); // powers are unambiguous
}

TEST_CASE("worker partitioning leaves results unchanged") {
    auto ring = make_rational_ring();
    std::mt19937_64 rng(127);
    for (int n : {3, 4, 5}) {
        Matrix a = random_matrix(ring, n, rng);
        const EvalOptions w1{1}, w4{4}, w7{7};
        CHECK(ring->equal(leibniz_det(a, w1), leibniz_det(a, w4)));
        CHECK(ring->equal(power_sum_det(a, w1), power_sum_det(a, w4)));
        CHECK(ring->equal(power_sum_det(a, w1), power_sum_det(a, w7)));
        CHECK(ring->equal(sdet_barvinok(a, w1), sdet_barvinok(a, w4)));
        CHECK(ring->equal(polarized_det(a, GammaAssignment::seeded(5), w1),
                          polarized_det(a, GammaAssignment::seeded(5), w4)));
        CHECK(singularity_check(a, w1) == singularity_check(a, w4));
    }
}

TEST_CASE("evaluate_method dispatch") {
    auto ring = make_rational_ring();
    Matrix a = rational_matrix(ring, {{1, 2}, {3, 4}});
    const auto gamma = GammaAssignment::seeded(42);
    for (auto m : {DetMethod::leibniz, DetMethod::b3, DetMethod::b4, DetMethod::b5,
                   DetMethod::sdet, DetMethod::nonassoc})
        CHECK(ring->equal(evaluate_method(m, a, gamma), ring->from_int(-2)));
    CHECK(det_method_from_string("b5") == DetMethod::b5);
    CHECK_THROWS_AS(det_method_from_string("qr"), ParseError);
    CHECK(det_method_name(DetMethod::nonassoc) == "nonassoc");
}
