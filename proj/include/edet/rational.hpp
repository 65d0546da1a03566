#pragma once

#include <gmpxx.h>

#include "edet/ring.hpp"

namespace edet {

/// Element of the rational ring: an mpq_class kept canonical (reduced
/// fraction, positive denominator), so equality is structural.
struct RationalRep final : ValueRep {
    mpq_class q;
    explicit RationalRep(mpq_class v) : q(std::move(v)) { q.canonicalize(); }
};

/// Arbitrary-precision rationals. The reference commutative ring: every
/// operation is exact and division by any nonzero integer always succeeds.
class RationalRing final : public Ring {
  public:
    RationalRing();

    Value zero() const override;
    Value one() const override;
    Value from_int(long long k) const override;
    Value from_mpq(mpq_class q) const;

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

    static const mpq_class& get(const Value& v) { return v.as<RationalRep>().q; }
};

RingPtr make_rational_ring();

/// Parses "p" or "p/q" into a canonical rational; used by every backend
/// whose coefficients are rationals.
mpq_class parse_rational_string(const std::string& s);
std::string rational_to_string(const mpq_class& q);

} // namespace edet
