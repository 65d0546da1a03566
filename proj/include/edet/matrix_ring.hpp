#pragma once

#include <vector>

#include "edet/ring.hpp"

namespace edet {

struct MatrixElementRep final : ValueRep {
    int m;
    std::vector<Value> entries; // row-major, m*m inner-ring values
    MatrixElementRep(int mm, std::vector<Value> e) : m(mm), entries(std::move(e)) {}
};

/// Ring of m x m matrices over a coefficient ring: associative,
/// noncommutative for m >= 2, unital when the coefficients are. The
/// standard source of matrices I_n whose determinant must come out as the
/// identity element.
class MatrixRing final : public Ring {
  public:
    MatrixRing(int m, RingPtr coefficient_ring);

    int element_order() const { return m_; }
    const RingPtr& coefficient_ring() const { return inner_; }

    Value from_entries(std::vector<Value> entries) const;
    const std::vector<Value>& get_entries(const Value& v) const;

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
    int m_;
    RingPtr inner_;
};

RingPtr make_matrix_ring(int m, RingPtr coefficient_ring);

} // namespace edet
