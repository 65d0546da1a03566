#pragma once

#include <array>
#include <gmpxx.h>

#include "edet/ring.hpp"

namespace edet {

struct OctonionRep final : ValueRep {
    std::array<mpq_class, 8> c; // e0 = 1, e1..e7 imaginary units
    explicit OctonionRep(std::array<mpq_class, 8> v) : c(std::move(v)) {}
};

/// Rational octonions with the cyclic Fano-plane orientation
/// e_i e_{i+1} = e_{i+3} (indices mod 7 in 1..7), so e1 e2 = e4.
/// Alternative, hence power-associative, but not associative: the test bed
/// for unambiguous powers without associativity.
class OctonionRing final : public Ring {
  public:
    OctonionRing();

    Value from_coeffs(std::array<mpq_class, 8> c) const;
    Value basis(int i) const;
    static const std::array<mpq_class, 8>& get(const Value& v) { return v.as<OctonionRep>().c; }

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
    // product of basis units: e_i * e_j = sign[i][j] * e_{index[i][j]}
    std::array<std::array<int, 8>, 8> sign_;
    std::array<std::array<int, 8>, 8> index_;
};

RingPtr make_octonion_ring();

} // namespace edet
