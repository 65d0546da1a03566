#include "edet/octonion.hpp"

#include "edet/rational.hpp"

namespace edet {

OctonionRing::OctonionRing()
    : Ring({.name = "octonion",
            .is_commutative = false,
            .is_associative = false,
            .is_power_associative = true,
            .has_unit = true,
            .characteristic = 0}) {
    for (int i = 0; i < 8; ++i)
        for (int j = 0; j < 8; ++j) {
            sign_[i][j] = 0;
            index_[i][j] = 0;
        }
    // scalar unit
    for (int i = 0; i < 8; ++i) {
        sign_[0][i] = sign_[i][0] = 1;
        index_[0][i] = index_[i][0] = i;
    }
    // imaginary squares
    for (int i = 1; i < 8; ++i) {
        sign_[i][i] = -1;
        index_[i][i] = 0;
    }
    // Fano lines (a,b,c): e_a e_b = e_c cyclically, anticommuting otherwise.
    const int lines[7][3] = {{1, 2, 4}, {2, 3, 5}, {3, 4, 6}, {4, 5, 7},
                             {5, 6, 1}, {6, 7, 2}, {7, 1, 3}};
    for (const auto& ln : lines) {
        const int a = ln[0], b = ln[1], c = ln[2];
        const int cyc[3][3] = {{a, b, c}, {b, c, a}, {c, a, b}};
        for (const auto& t : cyc) {
            sign_[t[0]][t[1]] = 1;
            index_[t[0]][t[1]] = t[2];
            sign_[t[1]][t[0]] = -1;
            index_[t[1]][t[0]] = t[2];
        }
    }
}

Value OctonionRing::from_coeffs(std::array<mpq_class, 8> c) const {
    return make_value<OctonionRep>(std::move(c));
}

Value OctonionRing::basis(int i) const {
    if (i < 0 || i > 7)
        throw Error("octonion basis index out of range");
    std::array<mpq_class, 8> c;
    c[static_cast<size_t>(i)] = 1;
    return from_coeffs(std::move(c));
}

Value OctonionRing::zero() const {
    return from_coeffs({});
}

Value OctonionRing::one() const {
    return basis(0);
}

Value OctonionRing::from_int(long long k) const {
    std::array<mpq_class, 8> c;
    c[0] = mpq_class(static_cast<long>(k));
    return from_coeffs(std::move(c));
}

Value OctonionRing::add(const Value& a, const Value& b) const {
    const auto& x = get(a);
    const auto& y = get(b);
    std::array<mpq_class, 8> c;
    for (size_t i = 0; i < 8; ++i)
        c[i] = x[i] + y[i];
    return from_coeffs(std::move(c));
}

Value OctonionRing::sub(const Value& a, const Value& b) const {
    const auto& x = get(a);
    const auto& y = get(b);
    std::array<mpq_class, 8> c;
    for (size_t i = 0; i < 8; ++i)
        c[i] = x[i] - y[i];
    return from_coeffs(std::move(c));
}

Value OctonionRing::neg(const Value& a) const {
    const auto& x = get(a);
    std::array<mpq_class, 8> c;
    for (size_t i = 0; i < 8; ++i)
        c[i] = -x[i];
    return from_coeffs(std::move(c));
}

Value OctonionRing::mul(const Value& a, const Value& b) const {
    const auto& x = get(a);
    const auto& y = get(b);
    std::array<mpq_class, 8> c;
    for (size_t i = 0; i < 8; ++i) {
        if (x[i] == 0)
            continue;
        for (size_t j = 0; j < 8; ++j) {
            if (y[j] == 0)
                continue;
            const mpq_class term = x[i] * y[j];
            const size_t k = static_cast<size_t>(index_[i][j]);
            if (sign_[i][j] > 0)
                c[k] += term;
            else
                c[k] -= term;
        }
    }
    return from_coeffs(std::move(c));
}

Value OctonionRing::div_int(const Value& x, long long k) const {
    if (k == 0)
        throw DivisionUnavailable("division by integer 0");
    const auto& v = get(x);
    const mpq_class d(static_cast<long>(k));
    std::array<mpq_class, 8> c;
    for (size_t i = 0; i < 8; ++i)
        c[i] = v[i] / d;
    return from_coeffs(std::move(c));
}

bool OctonionRing::equal(const Value& a, const Value& b) const {
    return get(a) == get(b);
}

Value OctonionRing::sample(std::mt19937_64& rng) const {
    std::uniform_int_distribution<int> d(-5, 5);
    std::array<mpq_class, 8> c;
    for (size_t i = 0; i < 8; ++i)
        c[i] = mpq_class(d(rng));
    return from_coeffs(std::move(c));
}

std::string OctonionRing::to_string(const Value& a) const {
    const auto& c = get(a);
    std::string s = c[0].get_str();
    for (size_t i = 1; i < 8; ++i)
        s += " + " + c[i].get_str() + "e" + std::to_string(i);
    return s;
}

Value OctonionRing::parse(const nlohmann::json& j) const {
    if (!j.is_array() || j.size() != 8)
        throw ParseError("octonion entry must be an array of 8 rational strings");
    std::array<mpq_class, 8> c;
    for (size_t i = 0; i < 8; ++i) {
        if (j[i].is_number_integer())
            c[i] = mpq_class(j[i].get<long>());
        else if (j[i].is_string())
            c[i] = parse_rational_string(j[i].get<std::string>());
        else
            throw ParseError("octonion coefficient must be a rational string");
    }
    return from_coeffs(std::move(c));
}

nlohmann::json OctonionRing::to_json(const Value& a) const {
    const auto& c = get(a);
    nlohmann::json out = nlohmann::json::array();
    for (size_t i = 0; i < 8; ++i)
        out.push_back(c[i].get_str());
    return out;
}

RingPtr make_octonion_ring() {
    return std::make_shared<OctonionRing>();
}

} // namespace edet
