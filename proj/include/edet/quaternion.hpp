#pragma once

#include <array>
#include <gmpxx.h>

#include "edet/ring.hpp"

namespace edet {

struct QuaternionRep final : ValueRep {
    std::array<mpq_class, 4> c; // 1, i, j, k coordinates
    explicit QuaternionRep(std::array<mpq_class, 4> v) : c(std::move(v)) {}
};

/// Rational quaternions: the workhorse noncommutative associative ring.
/// i^2 = j^2 = k^2 = ijk = -1.
class QuaternionRing final : public Ring {
  public:
    QuaternionRing();

    Value from_coeffs(std::array<mpq_class, 4> c) const;
    static const std::array<mpq_class, 4>& get(const Value& v) {
        return v.as<QuaternionRep>().c;
    }

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
};

RingPtr make_quaternion_ring();

} // namespace edet
