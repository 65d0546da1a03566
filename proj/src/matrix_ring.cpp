#include "edet/matrix_ring.hpp"

namespace edet {

MatrixRing::MatrixRing(int m, RingPtr coefficient_ring)
    : Ring({.name = "matrixring:" + std::to_string(m) + ":" + coefficient_ring->name(),
            .is_commutative = false,
            .is_associative = true,
            .is_power_associative = true,
            .has_unit = coefficient_ring->descriptor().has_unit,
            .characteristic = coefficient_ring->descriptor().characteristic}),
      m_(m),
      inner_(std::move(coefficient_ring)) {
    if (m < 1)
        throw DimensionMismatch("matrix ring order must be >= 1");
    if (!inner_->descriptor().is_associative)
        throw RingNotAssociative("matrix ring needs an associative coefficient ring");
}

Value MatrixRing::from_entries(std::vector<Value> entries) const {
    if (entries.size() != static_cast<size_t>(m_) * static_cast<size_t>(m_))
        throw DimensionMismatch("matrix ring element needs " + std::to_string(m_ * m_) +
                                " entries");
    return make_value<MatrixElementRep>(m_, std::move(entries));
}

const std::vector<Value>& MatrixRing::get_entries(const Value& v) const {
    const auto& rep = v.as<MatrixElementRep>();
    if (rep.m != m_)
        throw RingMismatch("matrix ring element of order " + std::to_string(rep.m) +
                           " used in order " + std::to_string(m_));
    return rep.entries;
}

Value MatrixRing::zero() const {
    return make_value<MatrixElementRep>(
        m_, std::vector<Value>(static_cast<size_t>(m_) * m_, inner_->zero()));
}

Value MatrixRing::one() const {
    std::vector<Value> e(static_cast<size_t>(m_) * m_, inner_->zero());
    for (int i = 0; i < m_; ++i)
        e[static_cast<size_t>(i) * m_ + i] = inner_->one();
    return make_value<MatrixElementRep>(m_, std::move(e));
}

Value MatrixRing::from_int(long long k) const {
    std::vector<Value> e(static_cast<size_t>(m_) * m_, inner_->zero());
    for (int i = 0; i < m_; ++i)
        e[static_cast<size_t>(i) * m_ + i] = inner_->from_int(k);
    return make_value<MatrixElementRep>(m_, std::move(e));
}

Value MatrixRing::add(const Value& a, const Value& b) const {
    const auto& x = get_entries(a);
    const auto& y = get_entries(b);
    std::vector<Value> e;
    e.reserve(x.size());
    for (size_t i = 0; i < x.size(); ++i)
        e.push_back(inner_->add(x[i], y[i]));
    return make_value<MatrixElementRep>(m_, std::move(e));
}

Value MatrixRing::sub(const Value& a, const Value& b) const {
    const auto& x = get_entries(a);
    const auto& y = get_entries(b);
    std::vector<Value> e;
    e.reserve(x.size());
    for (size_t i = 0; i < x.size(); ++i)
        e.push_back(inner_->sub(x[i], y[i]));
    return make_value<MatrixElementRep>(m_, std::move(e));
}

Value MatrixRing::neg(const Value& a) const {
    const auto& x = get_entries(a);
    std::vector<Value> e;
    e.reserve(x.size());
    for (const auto& v : x)
        e.push_back(inner_->neg(v));
    return make_value<MatrixElementRep>(m_, std::move(e));
}

Value MatrixRing::mul(const Value& a, const Value& b) const {
    const auto& x = get_entries(a);
    const auto& y = get_entries(b);
    const size_t m = static_cast<size_t>(m_);
    std::vector<Value> e;
    e.reserve(m * m);
    for (size_t i = 0; i < m; ++i)
        for (size_t j = 0; j < m; ++j) {
            Value s = inner_->mul(x[i * m], y[j]);
            for (size_t k = 1; k < m; ++k)
                s = inner_->add(s, inner_->mul(x[i * m + k], y[k * m + j]));
            e.push_back(std::move(s));
        }
    return make_value<MatrixElementRep>(m_, std::move(e));
}

Value MatrixRing::div_int(const Value& x, long long k) const {
    const auto& v = get_entries(x);
    std::vector<Value> e;
    e.reserve(v.size());
    for (const auto& entry : v)
        e.push_back(inner_->div_int(entry, k));
    return make_value<MatrixElementRep>(m_, std::move(e));
}

bool MatrixRing::equal(const Value& a, const Value& b) const {
    const auto& x = get_entries(a);
    const auto& y = get_entries(b);
    for (size_t i = 0; i < x.size(); ++i)
        if (!inner_->equal(x[i], y[i]))
            return false;
    return true;
}

Value MatrixRing::sample(std::mt19937_64& rng) const {
    std::vector<Value> e;
    e.reserve(static_cast<size_t>(m_) * m_);
    for (int i = 0; i < m_ * m_; ++i)
        e.push_back(inner_->sample(rng));
    return make_value<MatrixElementRep>(m_, std::move(e));
}

std::string MatrixRing::to_string(const Value& a) const {
    const auto& x = get_entries(a);
    std::string s = "[";
    for (int i = 0; i < m_; ++i) {
        if (i)
            s += ", ";
        s += "[";
        for (int j = 0; j < m_; ++j) {
            if (j)
                s += ", ";
            s += inner_->to_string(x[static_cast<size_t>(i) * m_ + j]);
        }
        s += "]";
    }
    return s + "]";
}

Value MatrixRing::parse(const nlohmann::json& j) const {
    if (!j.is_array() || static_cast<int>(j.size()) != m_)
        throw ParseError("matrix-ring entry must be an array of " + std::to_string(m_) + " rows");
    std::vector<Value> e;
    e.reserve(static_cast<size_t>(m_) * m_);
    for (const auto& row : j) {
        if (!row.is_array() || static_cast<int>(row.size()) != m_)
            throw ParseError("matrix-ring row must have " + std::to_string(m_) + " entries");
        for (const auto& cell : row)
            e.push_back(inner_->parse(cell));
    }
    return from_entries(std::move(e));
}

nlohmann::json MatrixRing::to_json(const Value& a) const {
    const auto& x = get_entries(a);
    nlohmann::json rows = nlohmann::json::array();
    for (int i = 0; i < m_; ++i) {
        nlohmann::json row = nlohmann::json::array();
        for (int j = 0; j < m_; ++j)
            row.push_back(inner_->to_json(x[static_cast<size_t>(i) * m_ + j]));
        rows.push_back(row);
    }
    return rows;
}

RingPtr make_matrix_ring(int m, RingPtr coefficient_ring) {
    return std::make_shared<MatrixRing>(m, std::move(coefficient_ring));
}

} // namespace edet
