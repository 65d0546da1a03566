#pragma once

#include "edet/ring.hpp"

namespace edet {

struct PrimeFieldRep final : ValueRep {
    unsigned long long residue; // in [0, p)
    unsigned long long p;
    PrimeFieldRep(unsigned long long r, unsigned long long mod) : residue(r), p(mod) {}
};

/// Z/p for prime p (p < 2^62). Division by an integer k succeeds exactly
/// when p does not divide k, which is how the formulas signal that a
/// modulus is too small for a given matrix order.
class PrimeFieldRing final : public Ring {
  public:
    explicit PrimeFieldRing(unsigned long long p);

    unsigned long long modulus() const { return p_; }

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
    unsigned long long get(const Value& v) const;
    unsigned long long p_;
};

bool is_prime_u64(unsigned long long n);

RingPtr make_prime_field(unsigned long long p);

} // namespace edet
