#pragma once

#include <gmpxx.h>
#include <vector>

#include "edet/ring.hpp"

namespace edet {

/// Structure constants of a finite-dimensional algebra:
/// e_i * e_j = sum_k table[i][j][k] e_k. Shared by all elements of the
/// ring so cross-table mixing is detectable.
struct StructureTable {
    int dimension = 0;
    // table[i][j][k], each inner vector of length dimension
    std::vector<std::vector<std::vector<mpq_class>>> table;
};

struct TableElementRep final : ValueRep {
    std::shared_ptr<const StructureTable> table;
    std::vector<mpq_class> coeffs;
    TableElementRep(std::shared_ptr<const StructureTable> t, std::vector<mpq_class> c)
        : table(std::move(t)), coeffs(std::move(c)) {}
};

/// Algebra given by an explicit multiplication table: the fully generic
/// (possibly nonassociative, non-power-associative) test bed. Capability
/// flags are computed on construction: associativity from all basis
/// triples (sufficient by bilinearity), power-associativity from basis
/// cubes only — a degree-3 heuristic, which is why engines select the
/// averaged-bracketing path from is_associative rather than trusting it.
class TableAlgebraRing final : public Ring {
  public:
    /// `name` is what the ring registry can resolve back to this algebra
    /// (e.g. "table:<path>"); defaults to "table:<dimension>".
    explicit TableAlgebraRing(StructureTable table, std::string name = "");

    int dimension() const { return table_->dimension; }

    Value from_coeffs(std::vector<mpq_class> c) const;
    Value basis(int i) const;
    static const std::vector<mpq_class>& get_coeffs(const Value& v) {
        return v.as<TableElementRep>().coeffs;
    }

    Value zero() const override;
    Value one() const override;
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
    const std::vector<mpq_class>& checked(const Value& v) const;
    std::vector<mpq_class> mul_coeffs(const std::vector<mpq_class>& x,
                                      const std::vector<mpq_class>& y) const;

    std::shared_ptr<const StructureTable> table_;
    int unit_index_ = -1; // basis vector acting as two-sided unit, if any
};

/// Builds the ring and computes its capability flags. Throws
/// MalformedTable on wrong arity or dimension.
RingPtr make_table_algebra(StructureTable table, std::string name = "");

/// Reads `{ "dimension": d, "table": [[["p/q", ...], ...], ...] }`.
StructureTable load_structure_table(const nlohmann::json& j);
nlohmann::json structure_table_to_json(const StructureTable& t);

} // namespace edet
