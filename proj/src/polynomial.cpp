#include "edet/polynomial.hpp"

#include "edet/rational.hpp"

namespace edet {

PolynomialRing::PolynomialRing(int matrix_order)
    : Ring({.name = "poly:" + std::to_string(matrix_order),
            .is_commutative = true,
            .is_associative = true,
            .is_power_associative = true,
            .has_unit = true,
            .characteristic = 0}),
      order_(matrix_order) {
    if (matrix_order < 1)
        throw OrderTooLarge("polynomial ring needs order >= 1");
}

Value PolynomialRing::from_terms(std::map<Monomial, mpq_class> t) const {
    for (auto it = t.begin(); it != t.end();) {
        if (it->second == 0)
            it = t.erase(it);
        else
            ++it;
    }
    return make_value<PolynomialRep>(variable_count(), std::move(t));
}

const std::map<Monomial, mpq_class>& PolynomialRing::get_terms(const Value& v) const {
    const auto& rep = v.as<PolynomialRep>();
    if (rep.nvars != variable_count())
        throw RingMismatch("polynomial from a ring with a different variable set");
    return rep.terms;
}

Value PolynomialRing::variable(int i, int j) const {
    if (i < 0 || i >= order_ || j < 0 || j >= order_)
        throw DimensionMismatch("variable index out of range");
    Monomial m(static_cast<size_t>(variable_count()), 0);
    m[static_cast<size_t>(i * order_ + j)] = 1;
    std::map<Monomial, mpq_class> t;
    t.emplace(std::move(m), mpq_class(1));
    return from_terms(std::move(t));
}

Value PolynomialRing::constant(mpq_class q) const {
    std::map<Monomial, mpq_class> t;
    if (q != 0)
        t.emplace(Monomial(static_cast<size_t>(variable_count()), 0), std::move(q));
    return make_value<PolynomialRep>(variable_count(), std::move(t));
}

Value PolynomialRing::zero() const {
    return make_value<PolynomialRep>(variable_count(), std::map<Monomial, mpq_class>{});
}

Value PolynomialRing::one() const {
    return constant(mpq_class(1));
}

Value PolynomialRing::from_int(long long k) const {
    return constant(mpq_class(static_cast<long>(k)));
}

Value PolynomialRing::add(const Value& a, const Value& b) const {
    auto t = get_terms(a);
    for (const auto& [m, c] : get_terms(b)) {
        auto [it, inserted] = t.emplace(m, c);
        if (!inserted) {
            it->second += c;
            if (it->second == 0)
                t.erase(it);
        }
    }
    return make_value<PolynomialRep>(variable_count(), std::move(t));
}

Value PolynomialRing::sub(const Value& a, const Value& b) const {
    auto t = get_terms(a);
    for (const auto& [m, c] : get_terms(b)) {
        auto [it, inserted] = t.emplace(m, -c);
        if (!inserted) {
            it->second -= c;
            if (it->second == 0)
                t.erase(it);
        }
    }
    return make_value<PolynomialRep>(variable_count(), std::move(t));
}

Value PolynomialRing::neg(const Value& a) const {
    auto t = get_terms(a);
    for (auto& [m, c] : t)
        c = -c;
    return make_value<PolynomialRep>(variable_count(), std::move(t));
}

Value PolynomialRing::mul(const Value& a, const Value& b) const {
    const auto& x = get_terms(a);
    const auto& y = get_terms(b);
    std::map<Monomial, mpq_class> t;
    const size_t nv = static_cast<size_t>(variable_count());
    for (const auto& [mx, cx] : x) {
        for (const auto& [my, cy] : y) {
            Monomial m(nv);
            for (size_t i = 0; i < nv; ++i) {
                const unsigned sum = static_cast<unsigned>(mx[i]) + my[i];
                if (sum > 255)
                    throw OrderTooLarge("monomial degree overflow");
                m[i] = static_cast<unsigned char>(sum);
            }
            auto [it, inserted] = t.emplace(std::move(m), cx * cy);
            if (!inserted) {
                it->second += cx * cy;
                if (it->second == 0)
                    t.erase(it);
            }
        }
    }
    return make_value<PolynomialRep>(variable_count(), std::move(t));
}

Value PolynomialRing::div_int(const Value& x, long long k) const {
    if (k == 0)
        throw DivisionUnavailable("division by integer 0");
    auto t = get_terms(x);
    const mpq_class d(static_cast<long>(k));
    for (auto& [m, c] : t)
        c /= d;
    return make_value<PolynomialRep>(variable_count(), std::move(t));
}

bool PolynomialRing::equal(const Value& a, const Value& b) const {
    return get_terms(a) == get_terms(b);
}

Value PolynomialRing::sample(std::mt19937_64& rng) const {
    // a random variable plus a small constant; enough for axiom tests
    std::uniform_int_distribution<int> v(0, variable_count() - 1);
    std::uniform_int_distribution<int> c(-3, 3);
    const int idx = v(rng);
    Value var = variable(idx / order_, idx % order_);
    return add(var, from_int(c(rng)));
}

std::string PolynomialRing::variable_name(int idx) const {
    return "x" + std::to_string(idx / order_ + 1) + std::to_string(idx % order_ + 1);
}

std::string PolynomialRing::to_string(const Value& a) const {
    const auto& t = get_terms(a);
    if (t.empty())
        return "0";
    std::string s;
    // leading monomial first
    for (auto it = t.rbegin(); it != t.rend(); ++it) {
        const auto& [m, c] = *it;
        if (!s.empty())
            s += " + ";
        std::string mono;
        for (size_t i = 0; i < m.size(); ++i) {
            if (m[i] == 0)
                continue;
            if (!mono.empty())
                mono += "*";
            mono += variable_name(static_cast<int>(i));
            if (m[i] > 1)
                mono += "^" + std::to_string(static_cast<int>(m[i]));
        }
        if (mono.empty())
            s += c.get_str();
        else if (c == 1)
            s += mono;
        else
            s += c.get_str() + "*" + mono;
    }
    return s;
}

Value PolynomialRing::parse(const nlohmann::json& j) const {
    // Entries are rational constants, bare variables like "x21", or the
    // structured {"terms": [[coeff, [exponents...]], ...]} form that
    // to_json writes.
    if (j.is_number_integer())
        return from_int(j.get<long long>());
    if (j.is_object() && j.contains("terms") && j["terms"].is_array()) {
        const size_t nv = static_cast<size_t>(variable_count());
        std::map<Monomial, mpq_class> t;
        for (const auto& term : j["terms"]) {
            if (!term.is_array() || term.size() != 2 || !term[0].is_string() ||
                !term[1].is_array() || term[1].size() != nv)
                throw ParseError("bad polynomial term encoding");
            Monomial m(nv);
            for (size_t i = 0; i < nv; ++i) {
                if (!term[1][i].is_number_unsigned() || term[1][i].get<unsigned>() > 255)
                    throw ParseError("bad polynomial exponent");
                m[i] = static_cast<unsigned char>(term[1][i].get<unsigned>());
            }
            const mpq_class c = parse_rational_string(term[0].get<std::string>());
            if (c != 0)
                t[std::move(m)] += c;
        }
        return from_terms(std::move(t));
    }
    if (!j.is_string())
        throw ParseError("polynomial entry must be a string");
    const std::string s = j.get<std::string>();
    if (!s.empty() && s[0] == 'x') {
        if (s.size() == 3 && s[1] >= '1' && s[2] >= '1') {
            const int i = s[1] - '1';
            const int jj = s[2] - '1';
            if (i < order_ && jj < order_)
                return variable(i, jj);
        }
        throw ParseError("unknown variable '" + s + "'");
    }
    return constant(parse_rational_string(s));
}

nlohmann::json PolynomialRing::to_json(const Value& a) const {
    nlohmann::json terms = nlohmann::json::array();
    for (const auto& [m, c] : get_terms(a)) {
        nlohmann::json exps = nlohmann::json::array();
        for (const auto e : m)
            exps.push_back(static_cast<unsigned>(e));
        terms.push_back(nlohmann::json::array({c.get_str(), exps}));
    }
    return nlohmann::json{{"terms", terms}};
}

RingPtr make_polynomial_ring(int matrix_order) {
    return std::make_shared<PolynomialRing>(matrix_order);
}

} // namespace edet
