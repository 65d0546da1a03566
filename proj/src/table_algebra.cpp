#include "edet/table_algebra.hpp"

#include "edet/rational.hpp"

namespace edet {

namespace {

std::vector<mpq_class> basis_coeffs(int d, int i) {
    std::vector<mpq_class> c(static_cast<size_t>(d));
    c[static_cast<size_t>(i)] = 1;
    return c;
}

std::vector<mpq_class> raw_mul(const StructureTable& t, const std::vector<mpq_class>& x,
                               const std::vector<mpq_class>& y) {
    const int d = t.dimension;
    std::vector<mpq_class> out(static_cast<size_t>(d));
    for (int i = 0; i < d; ++i) {
        if (x[static_cast<size_t>(i)] == 0)
            continue;
        for (int j = 0; j < d; ++j) {
            if (y[static_cast<size_t>(j)] == 0)
                continue;
            const mpq_class prod = x[static_cast<size_t>(i)] * y[static_cast<size_t>(j)];
            const auto& row = t.table[static_cast<size_t>(i)][static_cast<size_t>(j)];
            for (int k = 0; k < d; ++k)
                if (row[static_cast<size_t>(k)] != 0)
                    out[static_cast<size_t>(k)] += prod * row[static_cast<size_t>(k)];
        }
    }
    return out;
}

// (e_i e_j) e_k == e_i (e_j e_k) on all basis triples; enough for the
// whole algebra by bilinearity.
bool table_is_associative(const StructureTable& t) {
    const int d = t.dimension;
    for (int i = 0; i < d; ++i)
        for (int j = 0; j < d; ++j)
            for (int k = 0; k < d; ++k) {
                auto lhs = raw_mul(t, raw_mul(t, basis_coeffs(d, i), basis_coeffs(d, j)),
                                   basis_coeffs(d, k));
                auto rhs = raw_mul(t, basis_coeffs(d, i),
                                   raw_mul(t, basis_coeffs(d, j), basis_coeffs(d, k)));
                if (lhs != rhs)
                    return false;
            }
    return true;
}

bool table_is_commutative(const StructureTable& t) {
    const int d = t.dimension;
    for (int i = 0; i < d; ++i)
        for (int j = i + 1; j < d; ++j)
            if (raw_mul(t, basis_coeffs(d, i), basis_coeffs(d, j)) !=
                raw_mul(t, basis_coeffs(d, j), basis_coeffs(d, i)))
                return false;
    return true;
}

// Degree-3 check only: (e_i e_i) e_i == e_i (e_i e_i). A heuristic, not a
// proof of power-associativity; see the class comment.
bool table_cubes_associate(const StructureTable& t) {
    const int d = t.dimension;
    for (int i = 0; i < d; ++i) {
        auto e = basis_coeffs(d, i);
        auto sq = raw_mul(t, e, e);
        if (raw_mul(t, sq, e) != raw_mul(t, e, sq))
            return false;
    }
    return true;
}

int find_unit_index(const StructureTable& t) {
    const int d = t.dimension;
    for (int u = 0; u < d; ++u) {
        bool ok = true;
        for (int i = 0; i < d && ok; ++i) {
            auto e = basis_coeffs(d, i);
            ok = raw_mul(t, basis_coeffs(d, u), e) == e && raw_mul(t, e, basis_coeffs(d, u)) == e;
        }
        if (ok)
            return u;
    }
    return -1;
}

} // namespace

TableAlgebraRing::TableAlgebraRing(StructureTable table, std::string name)
    : Ring([&table, &name] {
          if (table.dimension < 1)
              throw MalformedTable("table dimension must be >= 1");
          const size_t d = static_cast<size_t>(table.dimension);
          if (table.table.size() != d)
              throw MalformedTable("structure table has wrong first arity");
          for (const auto& row : table.table) {
              if (row.size() != d)
                  throw MalformedTable("structure table has wrong second arity");
              for (const auto& cell : row)
                  if (cell.size() != d)
                      throw MalformedTable("structure table has wrong third arity");
          }
          const bool assoc = table_is_associative(table);
          const bool comm = assoc && table_is_commutative(table);
          const bool pa = assoc || table_cubes_associate(table);
          RingDescriptor desc{.name = name.empty() ? "table:" + std::to_string(table.dimension)
                                                   : std::move(name),
                              .is_commutative = comm,
                              .is_associative = assoc,
                              .is_power_associative = pa,
                              .has_unit = find_unit_index(table) >= 0,
                              .characteristic = 0};
          return desc;
      }()) {
    unit_index_ = find_unit_index(table);
    table_ = std::make_shared<const StructureTable>(std::move(table));
}

const std::vector<mpq_class>& TableAlgebraRing::checked(const Value& v) const {
    const auto& rep = v.as<TableElementRep>();
    if (rep.table != table_) {
        if (rep.table->dimension != table_->dimension || rep.table->table != table_->table)
            throw RingMismatch("element belongs to a different table algebra");
    }
    return rep.coeffs;
}

Value TableAlgebraRing::from_coeffs(std::vector<mpq_class> c) const {
    if (static_cast<int>(c.size()) != dimension())
        throw DimensionMismatch("coefficient vector length does not match algebra dimension");
    return make_value<TableElementRep>(table_, std::move(c));
}

Value TableAlgebraRing::basis(int i) const {
    if (i < 0 || i >= dimension())
        throw Error("basis index out of range");
    return from_coeffs(basis_coeffs(dimension(), i));
}

Value TableAlgebraRing::zero() const {
    return make_value<TableElementRep>(table_,
                                       std::vector<mpq_class>(static_cast<size_t>(dimension())));
}

Value TableAlgebraRing::one() const {
    if (unit_index_ < 0)
        throw NoUnit("table algebra has no (basis) unit");
    return basis(unit_index_);
}

Value TableAlgebraRing::add(const Value& a, const Value& b) const {
    const auto& x = checked(a);
    const auto& y = checked(b);
    std::vector<mpq_class> c(x.size());
    for (size_t i = 0; i < x.size(); ++i)
        c[i] = x[i] + y[i];
    return make_value<TableElementRep>(table_, std::move(c));
}

Value TableAlgebraRing::sub(const Value& a, const Value& b) const {
    const auto& x = checked(a);
    const auto& y = checked(b);
    std::vector<mpq_class> c(x.size());
    for (size_t i = 0; i < x.size(); ++i)
        c[i] = x[i] - y[i];
    return make_value<TableElementRep>(table_, std::move(c));
}

Value TableAlgebraRing::neg(const Value& a) const {
    const auto& x = checked(a);
    std::vector<mpq_class> c(x.size());
    for (size_t i = 0; i < x.size(); ++i)
        c[i] = -x[i];
    return make_value<TableElementRep>(table_, std::move(c));
}

Value TableAlgebraRing::mul(const Value& a, const Value& b) const {
    return make_value<TableElementRep>(table_, raw_mul(*table_, checked(a), checked(b)));
}

Value TableAlgebraRing::div_int(const Value& x, long long k) const {
    if (k == 0)
        throw DivisionUnavailable("division by integer 0");
    const auto& v = checked(x);
    const mpq_class d(static_cast<long>(k));
    std::vector<mpq_class> c(v.size());
    for (size_t i = 0; i < v.size(); ++i)
        c[i] = v[i] / d;
    return make_value<TableElementRep>(table_, std::move(c));
}

bool TableAlgebraRing::equal(const Value& a, const Value& b) const {
    return checked(a) == checked(b);
}

Value TableAlgebraRing::sample(std::mt19937_64& rng) const {
    std::uniform_int_distribution<int> d(-5, 5);
    std::vector<mpq_class> c(static_cast<size_t>(dimension()));
    for (auto& q : c)
        q = mpq_class(d(rng));
    return make_value<TableElementRep>(table_, std::move(c));
}

std::string TableAlgebraRing::to_string(const Value& a) const {
    const auto& c = checked(a);
    std::string s = "(";
    for (size_t i = 0; i < c.size(); ++i) {
        if (i)
            s += ", ";
        s += c[i].get_str();
    }
    return s + ")";
}

Value TableAlgebraRing::parse(const nlohmann::json& j) const {
    if (!j.is_array() || static_cast<int>(j.size()) != dimension())
        throw ParseError("table-algebra entry must be an array of " +
                         std::to_string(dimension()) + " rational strings");
    std::vector<mpq_class> c(j.size());
    for (size_t i = 0; i < j.size(); ++i) {
        if (j[i].is_number_integer())
            c[i] = mpq_class(j[i].get<long>());
        else if (j[i].is_string())
            c[i] = parse_rational_string(j[i].get<std::string>());
        else
            throw ParseError("table-algebra coefficient must be a rational string");
    }
    return from_coeffs(std::move(c));
}

nlohmann::json TableAlgebraRing::to_json(const Value& a) const {
    const auto& c = checked(a);
    nlohmann::json out = nlohmann::json::array();
    for (const auto& q : c)
        out.push_back(q.get_str());
    return out;
}

RingPtr make_table_algebra(StructureTable table, std::string name) {
    return std::make_shared<TableAlgebraRing>(std::move(table), std::move(name));
}

StructureTable load_structure_table(const nlohmann::json& j) {
    if (!j.is_object() || !j.contains("dimension") || !j.contains("table"))
        throw MalformedTable("structure table needs 'dimension' and 'table'");
    StructureTable t;
    if (!j["dimension"].is_number_integer())
        throw MalformedTable("'dimension' must be an integer");
    t.dimension = j["dimension"].get<int>();
    if (t.dimension < 1)
        throw MalformedTable("dimension must be >= 1");
    const auto& tab = j["table"];
    if (!tab.is_array())
        throw MalformedTable("'table' must be a 3d array");
    t.table.resize(tab.size());
    for (size_t i = 0; i < tab.size(); ++i) {
        if (!tab[i].is_array())
            throw MalformedTable("'table' must be a 3d array");
        t.table[i].resize(tab[i].size());
        for (size_t jj = 0; jj < tab[i].size(); ++jj) {
            const auto& cell = tab[i][jj];
            if (!cell.is_array())
                throw MalformedTable("'table' must be a 3d array");
            for (const auto& entry : cell) {
                if (entry.is_number_integer())
                    t.table[i][jj].emplace_back(entry.get<long>());
                else if (entry.is_string())
                    t.table[i][jj].push_back(parse_rational_string(entry.get<std::string>()));
                else
                    throw MalformedTable("structure constants must be rational strings");
            }
        }
    }
    return t;
}

nlohmann::json structure_table_to_json(const StructureTable& t) {
    nlohmann::json tab = nlohmann::json::array();
    for (const auto& plane : t.table) {
        nlohmann::json jp = nlohmann::json::array();
        for (const auto& row : plane) {
            nlohmann::json jr = nlohmann::json::array();
            for (const auto& q : row)
                jr.push_back(q.get_str());
            jp.push_back(jr);
        }
        tab.push_back(jp);
    }
    return nlohmann::json{{"dimension", t.dimension}, {"table", tab}};
}

} // namespace edet
