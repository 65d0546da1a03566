#pragma once

#include <gmpxx.h>
#include <map>
#include <vector>

#include "edet/ring.hpp"

namespace edet {

/// A word in the noncommuting letters a11..ann, as a sequence of letter
/// ids (i * n + j). Concatenation is the product.
using Word = std::vector<unsigned short>;

struct FreeAlgebraRep final : ValueRep {
    int nletters;
    std::map<Word, mpq_class> terms;
    FreeAlgebraRep(int nl, std::map<Word, mpq_class> t) : nletters(nl), terms(std::move(t)) {}
};

/// The free associative algebra on the entries of a generic n x n matrix:
/// the symbolic oracle for noncommutative identities. Two expressions are
/// the same element exactly when their expanded word maps coincide.
class FreeAlgebraRing final : public Ring {
  public:
    explicit FreeAlgebraRing(int matrix_order);

    int matrix_order() const { return order_; }

    Value letter(int i, int j) const;
    const std::map<Word, mpq_class>& get_terms(const Value& v) const;

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
    std::string letter_name(int idx) const;

    int order_;
};

RingPtr make_free_algebra(int matrix_order);

} // namespace edet
