#pragma once

#include <gmpxx.h>
#include <map>
#include <vector>

#include "edet/ring.hpp"

namespace edet {

/// Exponent vector over the n*n matrix indeterminates x11..xnn, stored
/// densely. Keys compare lexicographically, which fixes the canonical
/// term order for printing and structural equality.
using Monomial = std::vector<unsigned char>;

struct PolynomialRep final : ValueRep {
    int nvars;
    std::map<Monomial, mpq_class> terms; // no zero coefficients stored
    PolynomialRep(int nv, std::map<Monomial, mpq_class> t) : nvars(nv), terms(std::move(t)) {}
};

/// Commutative polynomials in the entries of a generic n x n matrix.
/// The symbolic oracle over which the engine identities are proved as
/// polynomial identities rather than spot checks.
class PolynomialRing final : public Ring {
  public:
    explicit PolynomialRing(int matrix_order);

    int matrix_order() const { return order_; }
    int variable_count() const { return order_ * order_; }

    /// The indeterminate x_{ij} (0-based indices).
    Value variable(int i, int j) const;
    Value constant(mpq_class q) const;
    const std::map<Monomial, mpq_class>& get_terms(const Value& v) const;

    Value zero() const override;
    Value one() const override;
    Value from_int(long long k) const override;
    Value add(const Value& a, const Value& b) const override;
    Value sub(const Value& a, const Value& b) const override;
    Value neg(const Value& a) const override;
    Value mul(const Value& a, const Value& b) const override;
    Value div_int(const Value& x, long long k) const override;
    bool equal(const Value& a, const Value& b) const override;
    Value sample(std::mt19937_64& rng) const override;
    std::string to_string(const Value& a) const override;
    Value parse(const nlohmann::json& j) const override;
    nlohmann::json to_json(const Value& a) const override;

  private:
    Value from_terms(std::map<Monomial, mpq_class> t) const;
    std::string variable_name(int idx) const;

    int order_;
};

RingPtr make_polynomial_ring(int matrix_order);

} // namespace edet
