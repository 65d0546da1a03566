#include "edet/prime_field.hpp"

namespace edet {

namespace {

using u64 = unsigned long long;
using u128 = unsigned __int128;

u64 mulmod(u64 a, u64 b, u64 p) {
    return static_cast<u64>((u128(a) * b) % p);
}

u64 powmod(u64 a, u64 e, u64 p) {
    u64 r = 1 % p;
    while (e) {
        if (e & 1)
            r = mulmod(r, a, p);
        a = mulmod(a, a, p);
        e >>= 1;
    }
    return r;
}

// Deterministic Miller-Rabin, valid for all 64-bit inputs.
bool miller_rabin(u64 n) {
    if (n < 2)
        return false;
    for (u64 q : {2ULL, 3ULL, 5ULL, 7ULL, 11ULL, 13ULL, 17ULL, 19ULL, 23ULL, 29ULL, 31ULL, 37ULL}) {
        if (n % q == 0)
            return n == q;
    }
    u64 d = n - 1;
    int s = 0;
    while ((d & 1) == 0) {
        d >>= 1;
        ++s;
    }
    for (u64 a : {2ULL, 3ULL, 5ULL, 7ULL, 11ULL, 13ULL, 17ULL, 19ULL, 23ULL, 29ULL, 31ULL, 37ULL}) {
        u64 x = powmod(a % n, d, n);
        if (x == 0 || x == 1 || x == n - 1)
            continue;
        bool composite = true;
        for (int i = 1; i < s; ++i) {
            x = mulmod(x, x, n);
            if (x == n - 1) {
                composite = false;
                break;
            }
        }
        if (composite)
            return false;
    }
    return true;
}

} // namespace

bool is_prime_u64(unsigned long long n) {
    return miller_rabin(n);
}

PrimeFieldRing::PrimeFieldRing(unsigned long long p)
    : Ring({.name = "mod:" + std::to_string(p),
            .is_commutative = true,
            .is_associative = true,
            .is_power_associative = true,
            .has_unit = true,
            .characteristic = p}),
      p_(p) {
    if (p >= (1ULL << 62))
        throw Error("prime field modulus too large");
    if (!is_prime_u64(p))
        throw Error("modulus " + std::to_string(p) + " is not prime");
}

unsigned long long PrimeFieldRing::get(const Value& v) const {
    const auto& rep = v.as<PrimeFieldRep>();
    if (rep.p != p_)
        throw RingMismatch("element of Z/" + std::to_string(rep.p) + " used in Z/" +
                           std::to_string(p_));
    return rep.residue;
}

Value PrimeFieldRing::zero() const { return make_value<PrimeFieldRep>(0, p_); }
Value PrimeFieldRing::one() const { return make_value<PrimeFieldRep>(1 % p_, p_); }

Value PrimeFieldRing::from_int(long long k) const {
    long long r = k % static_cast<long long>(p_);
    if (r < 0)
        r += static_cast<long long>(p_);
    return make_value<PrimeFieldRep>(static_cast<u64>(r), p_);
}

Value PrimeFieldRing::add(const Value& a, const Value& b) const {
    u64 x = get(a), y = get(b);
    u64 s = x + y;
    if (s >= p_)
        s -= p_;
    return make_value<PrimeFieldRep>(s, p_);
}

Value PrimeFieldRing::sub(const Value& a, const Value& b) const {
    u64 x = get(a), y = get(b);
    return make_value<PrimeFieldRep>(x >= y ? x - y : x + (p_ - y), p_);
}

Value PrimeFieldRing::neg(const Value& a) const {
    u64 x = get(a);
    return make_value<PrimeFieldRep>(x == 0 ? 0 : p_ - x, p_);
}

Value PrimeFieldRing::mul(const Value& a, const Value& b) const {
    return make_value<PrimeFieldRep>(mulmod(get(a), get(b), p_), p_);
}

Value PrimeFieldRing::div_int(const Value& x, long long k) const {
    if (k == 0)
        throw DivisionUnavailable("division by integer 0");
    u64 km = static_cast<u64>(k >= 0 ? k : -k) % p_;
    if (km == 0)
        throw DivisionUnavailable("integer " + std::to_string(k) + " is divisible by modulus " +
                                  std::to_string(p_));
    // k^(p-2) = k^-1 by Fermat; p is prime and p does not divide k.
    u64 inv = powmod(km, p_ - 2, p_);
    u64 y = mulmod(get(x), inv, p_);
    if (k < 0)
        y = (y == 0 ? 0 : p_ - y);
    return make_value<PrimeFieldRep>(y, p_);
}

bool PrimeFieldRing::equal(const Value& a, const Value& b) const {
    return get(a) == get(b);
}

Value PrimeFieldRing::sample(std::mt19937_64& rng) const {
    std::uniform_int_distribution<u64> d(0, p_ - 1);
    return make_value<PrimeFieldRep>(d(rng), p_);
}

std::string PrimeFieldRing::to_string(const Value& a) const {
    return std::to_string(get(a));
}

Value PrimeFieldRing::parse(const nlohmann::json& j) const {
    if (j.is_number_integer())
        return from_int(j.get<long long>());
    if (!j.is_string())
        throw ParseError("prime-field entry must be an integer string");
    const std::string s = j.get<std::string>();
    try {
        size_t pos = 0;
        long long v = std::stoll(s, &pos);
        if (pos != s.size())
            throw ParseError("bad residue literal '" + s + "'");
        return from_int(v);
    } catch (const std::logic_error&) {
        throw ParseError("bad residue literal '" + s + "'");
    }
}

nlohmann::json PrimeFieldRing::to_json(const Value& a) const {
    return to_string(a);
}

RingPtr make_prime_field(unsigned long long p) {
    return std::make_shared<PrimeFieldRing>(p);
}

} // namespace edet
