#include "edet/rational.hpp"

namespace edet {

namespace {
const mpq_class kZero(0);
const mpq_class kOne(1);
} // namespace

mpq_class parse_rational_string(const std::string& s) {
    if (s.empty())
        throw ParseError("empty rational literal");
    // mpq_class accepts "p/q"; validate strictly via set_str so garbage
    // ("1.5", "1/2/3", "abc") is rejected instead of silently zeroed.
    mpq_class q;
    if (mpq_set_str(q.get_mpq_t(), s.c_str(), 10) != 0)
        throw ParseError("bad rational literal '" + s + "'");
    if (mpz_sgn(mpq_denref(q.get_mpq_t())) == 0)
        throw ParseError("zero denominator in '" + s + "'");
    q.canonicalize();
    return q;
}

std::string rational_to_string(const mpq_class& q) {
    return q.get_str();
}

RationalRing::RationalRing()
    : Ring({.name = "rational",
            .is_commutative = true,
            .is_associative = true,
            .is_power_associative = true,
            .has_unit = true,
            .characteristic = 0}) {}

Value RationalRing::zero() const { return make_value<RationalRep>(kZero); }
Value RationalRing::one() const { return make_value<RationalRep>(kOne); }

Value RationalRing::from_int(long long k) const {
    return make_value<RationalRep>(mpq_class(static_cast<long>(k)));
}

Value RationalRing::from_mpq(mpq_class q) const {
    return make_value<RationalRep>(std::move(q));
}

Value RationalRing::add(const Value& a, const Value& b) const {
    return make_value<RationalRep>(get(a) + get(b));
}

Value RationalRing::sub(const Value& a, const Value& b) const {
    return make_value<RationalRep>(get(a) - get(b));
}

Value RationalRing::neg(const Value& a) const {
    return make_value<RationalRep>(-get(a));
}

Value RationalRing::mul(const Value& a, const Value& b) const {
    return make_value<RationalRep>(get(a) * get(b));
}

Value RationalRing::div_int(const Value& x, long long k) const {
    if (k == 0)
        throw DivisionUnavailable("division by integer 0");
    return make_value<RationalRep>(get(x) / mpq_class(static_cast<long>(k)));
}

bool RationalRing::equal(const Value& a, const Value& b) const {
    return get(a) == get(b);
}

Value RationalRing::sample(std::mt19937_64& rng) const {
    std::uniform_int_distribution<int> d(-5, 5);
    return from_int(d(rng));
}

std::string RationalRing::to_string(const Value& a) const {
    return rational_to_string(get(a));
}

Value RationalRing::parse(const nlohmann::json& j) const {
    if (j.is_number_integer())
        return from_int(j.get<long long>());
    if (!j.is_string())
        throw ParseError("rational entry must be a string like \"p/q\"");
    return make_value<RationalRep>(parse_rational_string(j.get<std::string>()));
}

nlohmann::json RationalRing::to_json(const Value& a) const {
    return rational_to_string(get(a));
}

RingPtr make_rational_ring() {
    return std::make_shared<RationalRing>();
}

} // namespace edet
