#include "edet/quaternion.hpp"

#include "edet/rational.hpp"

namespace edet {

QuaternionRing::QuaternionRing()
    : Ring({.name = "quaternion",
            .is_commutative = false,
            .is_associative = true,
            .is_power_associative = true,
            .has_unit = true,
            .characteristic = 0}) {}

Value QuaternionRing::from_coeffs(std::array<mpq_class, 4> c) const {
    return make_value<QuaternionRep>(std::move(c));
}

Value QuaternionRing::zero() const {
    return from_coeffs({mpq_class(0), mpq_class(0), mpq_class(0), mpq_class(0)});
}

Value QuaternionRing::one() const {
    return from_coeffs({mpq_class(1), mpq_class(0), mpq_class(0), mpq_class(0)});
}

Value QuaternionRing::from_int(long long k) const {
    return from_coeffs({mpq_class(static_cast<long>(k)), mpq_class(0), mpq_class(0), mpq_class(0)});
}

Value QuaternionRing::add(const Value& a, const Value& b) const {
    const auto& x = get(a);
    const auto& y = get(b);
    return from_coeffs({x[0] + y[0], x[1] + y[1], x[2] + y[2], x[3] + y[3]});
}

Value QuaternionRing::sub(const Value& a, const Value& b) const {
    const auto& x = get(a);
    const auto& y = get(b);
    return from_coeffs({x[0] - y[0], x[1] - y[1], x[2] - y[2], x[3] - y[3]});
}

Value QuaternionRing::neg(const Value& a) const {
    const auto& x = get(a);
    return from_coeffs({-x[0], -x[1], -x[2], -x[3]});
}

Value QuaternionRing::mul(const Value& a, const Value& b) const {
    const auto& x = get(a);
    const auto& y = get(b);
    return from_coeffs({x[0] * y[0] - x[1] * y[1] - x[2] * y[2] - x[3] * y[3],
                        x[0] * y[1] + x[1] * y[0] + x[2] * y[3] - x[3] * y[2],
                        x[0] * y[2] - x[1] * y[3] + x[2] * y[0] + x[3] * y[1],
                        x[0] * y[3] + x[1] * y[2] - x[2] * y[1] + x[3] * y[0]});
}

Value QuaternionRing::div_int(const Value& x, long long k) const {
    if (k == 0)
        throw DivisionUnavailable("division by integer 0");
    const auto& v = get(x);
    const mpq_class d(static_cast<long>(k));
    return from_coeffs({v[0] / d, v[1] / d, v[2] / d, v[3] / d});
}

bool QuaternionRing::equal(const Value& a, const Value& b) const {
    return get(a) == get(b);
}

Value QuaternionRing::sample(std::mt19937_64& rng) const {
    std::uniform_int_distribution<int> d(-5, 5);
    return from_coeffs({mpq_class(d(rng)), mpq_class(d(rng)), mpq_class(d(rng)), mpq_class(d(rng))});
}

std::string QuaternionRing::to_string(const Value& a) const {
    const auto& c = get(a);
    return c[0].get_str() + " + " + c[1].get_str() + "i + " + c[2].get_str() + "j + " +
           c[3].get_str() + "k";
}

Value QuaternionRing::parse(const nlohmann::json& j) const {
    if (!j.is_array() || j.size() != 4)
        throw ParseError("quaternion entry must be an array of 4 rational strings");
    std::array<mpq_class, 4> c;
    for (size_t i = 0; i < 4; ++i) {
        if (j[i].is_number_integer())
            c[i] = mpq_class(j[i].get<long>());
        else if (j[i].is_string())
            c[i] = parse_rational_string(j[i].get<std::string>());
        else
            throw ParseError("quaternion coefficient must be a rational string");
    }
    return from_coeffs(std::move(c));
}

nlohmann::json QuaternionRing::to_json(const Value& a) const {
    const auto& c = get(a);
    return nlohmann::json::array({c[0].get_str(), c[1].get_str(), c[2].get_str(), c[3].get_str()});
}

RingPtr make_quaternion_ring() {
    return std::make_shared<QuaternionRing>();
}

} // namespace edet
