#include "edet/suites.hpp"

#include "edet/matrix_io.hpp"

namespace edet {

namespace {

using u64 = std::uint64_t;

u64 mix64(u64 x) {
    x += 0x9e3779b97f4a7c15ULL;
    x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ULL;
    x = (x ^ (x >> 27)) * 0x94d049bb133111ebULL;
    return x ^ (x >> 31);
}

std::vector<Value> random_row(const Ring& ring, int n, std::mt19937_64& rng) {
    std::vector<Value> row;
    row.reserve(static_cast<size_t>(n));
    for (int j = 0; j < n; ++j)
        row.push_back(ring.sample(rng));
    return row;
}

Matrix with_row(const Matrix& a, int r, const std::vector<Value>& row) {
    Matrix m = a;
    for (int j = 0; j < a.order(); ++j)
        m.set(r, j, row[static_cast<size_t>(j)]);
    return m;
}

Matrix with_column(const Matrix& a, int c, const std::vector<Value>& col) {
    Matrix m = a;
    for (int i = 0; i < a.order(); ++i)
        m.set(i, c, col[static_cast<size_t>(i)]);
    return m;
}

Matrix with_rows_swapped(const Matrix& a, int r1, int r2) {
    Matrix m = a;
    for (int j = 0; j < a.order(); ++j) {
        m.set(r1, j, a.at(r2, j));
        m.set(r2, j, a.at(r1, j));
    }
    return m;
}

Matrix with_columns_swapped(const Matrix& a, int c1, int c2) {
    Matrix m = a;
    for (int i = 0; i < a.order(); ++i) {
        m.set(i, c1, a.at(i, c2));
        m.set(i, c2, a.at(i, c1));
    }
    return m;
}

std::vector<Value> add_rows(const Ring& ring, const std::vector<Value>& u,
                            const std::vector<Value>& v) {
    std::vector<Value> w;
    w.reserve(u.size());
    for (size_t i = 0; i < u.size(); ++i)
        w.push_back(ring.add(u[i], v[i]));
    return w;
}

nlohmann::json make_witness(const std::string& property, u64 trial,
                            std::initializer_list<const Matrix*> mats, const Ring& ring,
                            const Value& lhs, const Value& rhs) {
    nlohmann::json jm = nlohmann::json::array();
    for (const Matrix* m : mats)
        jm.push_back(matrix_to_json(*m));
    return nlohmann::json{{"property", property},
                          {"trial", trial},
                          {"matrices", jm},
                          {"lhs", ring.to_string(lhs)},
                          {"rhs", ring.to_string(rhs)}};
}

// Runs `check` over seeded trials, recording failures and the first
// witness. `check` returns nullopt on success or a witness json.
PropertyReport run_clause(const std::string& property, const RingPtr& ring, int n,
                          const SuiteOptions& opt, bool expected_to_hold,
                          const std::function<std::optional<nlohmann::json>(
                              std::mt19937_64&, u64)>& check) {
    PropertyReport rep;
    rep.property = property;
    rep.ring = ring->name();
    rep.n = n;
    rep.trials = opt.trials;
    rep.expected_to_hold = expected_to_hold;
    for (u64 t = 0; t < opt.trials; ++t) {
        auto rng = trial_rng(opt.seed, t);
        auto w = check(rng, t);
        if (w) {
            ++rep.failures;
            if (!rep.witness)
                rep.witness = std::move(w);
        }
    }
    return rep;
}

using EngineFn = std::function<Value(const Matrix&)>;

// Clauses shared by the associative and nonassociative suites. `prefix`
// is "lemma3" or "lemma6"; the engine decides which determinant is under
// test.
std::vector<PropertyReport> row_column_clauses(const std::string& prefix, const EngineFn& edet,
                                               bool additivity_expected, const RingPtr& ring,
                                               int n, const SuiteOptions& opt) {
    if (n < 2)
        throw DimensionMismatch(prefix + " clauses need n >= 2");
    const Ring& r = *ring;
    std::vector<PropertyReport> reports;

    reports.push_back(run_clause(
        prefix + "/a-row-additivity", ring, n, opt, additivity_expected,
        [&](std::mt19937_64& rng, u64 t) -> std::optional<nlohmann::json> {
            Matrix m = random_matrix(ring, n, rng);
            const int row = static_cast<int>(rng() % static_cast<u64>(n));
            const auto u = random_row(r, n, rng);
            const auto v = random_row(r, n, rng);
            Matrix a = with_row(m, row, u);
            Matrix b = with_row(m, row, v);
            Matrix c = with_row(m, row, add_rows(r, u, v));
            const Value lhs = edet(c);
            const Value rhs = r.add(edet(a), edet(b));
            if (r.equal(lhs, rhs))
                return std::nullopt;
            return make_witness(prefix + "/a-row-additivity", t, {&a, &b, &c}, r, lhs, rhs);
        }));

    reports.push_back(run_clause(
        prefix + "/a-column-additivity", ring, n, opt, additivity_expected,
        [&](std::mt19937_64& rng, u64 t) -> std::optional<nlohmann::json> {
            Matrix m = random_matrix(ring, n, rng);
            const int col = static_cast<int>(rng() % static_cast<u64>(n));
            const auto u = random_row(r, n, rng);
            const auto v = random_row(r, n, rng);
            Matrix a = with_column(m, col, u);
            Matrix b = with_column(m, col, v);
            Matrix c = with_column(m, col, add_rows(r, u, v));
            const Value lhs = edet(c);
            const Value rhs = r.add(edet(a), edet(b));
            if (r.equal(lhs, rhs))
                return std::nullopt;
            return make_witness(prefix + "/a-column-additivity", t, {&a, &b, &c}, r, lhs, rhs);
        }));

    reports.push_back(run_clause(
        prefix + "/b-row-antisymmetry", ring, n, opt, true,
        [&](std::mt19937_64& rng, u64 t) -> std::optional<nlohmann::json> {
            Matrix a = random_matrix(ring, n, rng);
            const int r1 = static_cast<int>(rng() % static_cast<u64>(n));
            int r2 = static_cast<int>(rng() % static_cast<u64>(n - 1));
            if (r2 >= r1)
                ++r2;
            Matrix b = with_rows_swapped(a, r1, r2);
            const Value lhs = edet(b);
            const Value rhs = r.neg(edet(a));
            if (r.equal(lhs, rhs))
                return std::nullopt;
            return make_witness(prefix + "/b-row-antisymmetry", t, {&a, &b}, r, lhs, rhs);
        }));

    reports.push_back(run_clause(
        prefix + "/b-column-antisymmetry", ring, n, opt, true,
        [&](std::mt19937_64& rng, u64 t) -> std::optional<nlohmann::json> {
            Matrix a = random_matrix(ring, n, rng);
            const int c1 = static_cast<int>(rng() % static_cast<u64>(n));
            int c2 = static_cast<int>(rng() % static_cast<u64>(n - 1));
            if (c2 >= c1)
                ++c2;
            Matrix b = with_columns_swapped(a, c1, c2);
            const Value lhs = edet(b);
            const Value rhs = r.neg(edet(a));
            if (r.equal(lhs, rhs))
                return std::nullopt;
            return make_witness(prefix + "/b-column-antisymmetry", t, {&a, &b}, r, lhs, rhs);
        }));

    reports.push_back(run_clause(
        prefix + "/c-zero-row", ring, n, opt, true,
        [&](std::mt19937_64& rng, u64 t) -> std::optional<nlohmann::json> {
            Matrix a = random_matrix(ring, n, rng);
            const int row = static_cast<int>(rng() % static_cast<u64>(n));
            Matrix b = with_row(a, row, std::vector<Value>(static_cast<size_t>(n), r.zero()));
            const Value lhs = edet(b);
            if (r.is_zero(lhs))
                return std::nullopt;
            return make_witness(prefix + "/c-zero-row", t, {&b}, r, lhs, r.zero());
        }));

    reports.push_back(run_clause(
        prefix + "/c-zero-column", ring, n, opt, true,
        [&](std::mt19937_64& rng, u64 t) -> std::optional<nlohmann::json> {
            Matrix a = random_matrix(ring, n, rng);
            const int col = static_cast<int>(rng() % static_cast<u64>(n));
            Matrix b = with_column(a, col, std::vector<Value>(static_cast<size_t>(n), r.zero()));
            const Value lhs = edet(b);
            if (r.is_zero(lhs))
                return std::nullopt;
            return make_witness(prefix + "/c-zero-column", t, {&b}, r, lhs, r.zero());
        }));

    reports.push_back(run_clause(
        prefix + "/d-equal-rows", ring, n, opt, true,
        [&](std::mt19937_64& rng, u64 t) -> std::optional<nlohmann::json> {
            Matrix a = random_matrix(ring, n, rng);
            const int r1 = static_cast<int>(rng() % static_cast<u64>(n));
            int r2 = static_cast<int>(rng() % static_cast<u64>(n - 1));
            if (r2 >= r1)
                ++r2;
            std::vector<Value> row;
            for (int j = 0; j < n; ++j)
                row.push_back(a.at(r1, j));
            Matrix b = with_row(a, r2, row);
            const Value lhs = edet(b);
            if (r.is_zero(lhs))
                return std::nullopt;
            return make_witness(prefix + "/d-equal-rows", t, {&b}, r, lhs, r.zero());
        }));

    reports.push_back(run_clause(
        prefix + "/d-equal-columns", ring, n, opt, true,
        [&](std::mt19937_64& rng, u64 t) -> std::optional<nlohmann::json> {
            Matrix a = random_matrix(ring, n, rng);
            const int c1 = static_cast<int>(rng() % static_cast<u64>(n));
            int c2 = static_cast<int>(rng() % static_cast<u64>(n - 1));
            if (c2 >= c1)
                ++c2;
            std::vector<Value> col;
            for (int i = 0; i < n; ++i)
                col.push_back(a.at(i, c1));
            Matrix b = with_column(a, c2, col);
            const Value lhs = edet(b);
            if (r.is_zero(lhs))
                return std::nullopt;
            return make_witness(prefix + "/d-equal-columns", t, {&b}, r, lhs, r.zero());
        }));

    reports.push_back(run_clause(
        prefix + "/e-transpose", ring, n, opt, true,
        [&](std::mt19937_64& rng, u64 t) -> std::optional<nlohmann::json> {
            Matrix a = random_matrix(ring, n, rng);
            Matrix b = a.transposed();
            const Value lhs = edet(b);
            const Value rhs = edet(a);
            if (r.equal(lhs, rhs))
                return std::nullopt;
            return make_witness(prefix + "/e-transpose", t, {&a}, r, lhs, rhs);
        }));

    return reports;
}

} // namespace

SuiteKind suite_from_string(const std::string& s) {
    if (s == "lemma3")
        return SuiteKind::lemma3;
    if (s == "lemma4")
        return SuiteKind::lemma4;
    if (s == "lemma6")
        return SuiteKind::lemma6;
    if (s == "corollary1")
        return SuiteKind::corollary1;
    if (s == "corollary2")
        return SuiteKind::corollary2;
    throw ParseError("unknown suite '" + s + "'");
}

std::string suite_name(SuiteKind k) {
    switch (k) {
    case SuiteKind::lemma3:
        return "lemma3";
    case SuiteKind::lemma4:
        return "lemma4";
    case SuiteKind::lemma6:
        return "lemma6";
    case SuiteKind::corollary1:
        return "corollary1";
    case SuiteKind::corollary2:
        return "corollary2";
    }
    throw Error("unreachable suite");
}

ClaimKind claim_from_string(const std::string& s) {
    if (s == "multiplicativity")
        return ClaimKind::multiplicativity;
    if (s == "laplace")
        return ClaimKind::laplace;
    if (s == "polyadditivity-nonassoc")
        return ClaimKind::polyadditivity_nonassoc;
    throw ParseError("unknown claim '" + s + "'");
}

std::string claim_name(ClaimKind k) {
    switch (k) {
    case ClaimKind::multiplicativity:
        return "multiplicativity";
    case ClaimKind::laplace:
        return "laplace";
    case ClaimKind::polyadditivity_nonassoc:
        return "polyadditivity-nonassoc";
    }
    throw Error("unreachable claim");
}

nlohmann::json PropertyReport::to_json() const {
    nlohmann::json j{{"property", property},
                     {"ring", ring},
                     {"n", n},
                     {"trials", std::to_string(trials)},
                     {"failures", std::to_string(failures)},
                     {"expected_to_hold", expected_to_hold},
                     {"satisfied", satisfied()}};
    if (witness)
        j["witness"] = *witness;
    return j;
}

nlohmann::json CounterexampleWitness::to_json() const {
    nlohmann::json jm = nlohmann::json::array();
    for (const auto& m : matrices)
        jm.push_back(m);
    return nlohmann::json{{"claim", claim},
                          {"trial", trial},
                          {"matrices", jm},
                          {"lhs", lhs},
                          {"rhs", rhs}};
}

std::mt19937_64 trial_rng(std::uint64_t seed, std::uint64_t index) {
    return std::mt19937_64(mix64(seed ^ mix64(index + 1)));
}

Matrix random_singular_matrix(const RingPtr& ring, int n, std::mt19937_64& rng) {
    const Ring& r = *ring;
    Matrix a = random_matrix(ring, n, rng);
    // last row := sum of small integer multiples of the other rows
    std::uniform_int_distribution<int> coeff(-3, 3);
    for (int j = 0; j < n; ++j)
        a.set(n - 1, j, r.zero());
    for (int i = 0; i + 1 < n; ++i) {
        const Value c = r.from_int(coeff(rng));
        for (int j = 0; j < n; ++j)
            a.set(n - 1, j, r.add(a.at(n - 1, j), r.mul(c, a.at(i, j))));
    }
    return a;
}

std::vector<PropertyReport> run_property_suite(SuiteKind suite, const RingPtr& ring, int n,
                                               const SuiteOptions& opt) {
    const Ring& r = *ring;
    switch (suite) {
    case SuiteKind::lemma3: {
        if (!r.descriptor().is_associative)
            throw RingNotAssociative("lemma3 suite needs an associative ring");
        EngineFn edet = [&](const Matrix& m) { return power_sum_det(m, opt.eval); };
        return row_column_clauses("lemma3", edet, true, ring, n, opt);
    }
    case SuiteKind::lemma6: {
        EngineFn edet = [&](const Matrix& m) { return nonassoc_edet(m, opt.eval); };
        // Clause a is the denied one here: satisfied by finding a failure.
        return row_column_clauses("lemma6", edet, false, ring, n, opt);
    }
    case SuiteKind::lemma4: {
        if (!r.descriptor().is_associative)
            throw RingNotAssociative("lemma4 suite needs an associative ring");
        std::vector<PropertyReport> reports;
        reports.push_back(run_clause(
            "lemma4/sdet-equals-edet", ring, n, opt, true,
            [&](std::mt19937_64& rng, u64 t) -> std::optional<nlohmann::json> {
                Matrix a = random_matrix(ring, n, rng);
                const Value lhs = sdet_barvinok(a, opt.eval);
                const Value rhs = power_sum_det(a, opt.eval);
                if (r.equal(lhs, rhs))
                    return std::nullopt;
                return make_witness("lemma4/sdet-equals-edet", t, {&a}, r, lhs, rhs);
            }));
        if (r.descriptor().has_unit) {
            SuiteOptions once = opt;
            once.trials = 1;
            reports.push_back(run_clause(
                "lemma4/unit-determinant", ring, n, once, true,
                [&](std::mt19937_64&, u64 t) -> std::optional<nlohmann::json> {
                    Matrix id = identity_matrix(ring, n);
                    const Value lhs = power_sum_det(id, opt.eval);
                    const Value rhs = r.one();
                    if (r.equal(lhs, rhs))
                        return std::nullopt;
                    return make_witness("lemma4/unit-determinant", t, {&id}, r, lhs, rhs);
                }));
        }
        return reports;
    }
    case SuiteKind::corollary1: {
        if (!r.descriptor().is_commutative)
            throw RingNotCommutative("corollary1 suite needs a commutative ring");
        std::vector<PropertyReport> reports;
        reports.push_back(run_clause(
            "corollary1/zero-residuals", ring, n, opt, true,
            [&](std::mt19937_64& rng, u64 t) -> std::optional<nlohmann::json> {
                Matrix a = random_matrix(ring, n, rng);
                for (unsigned tt = 1; tt + 1 <= static_cast<unsigned>(n); ++tt) {
                    const Value res = identity_residual(a, tt, opt.eval);
                    if (!r.is_zero(res)) {
                        auto w = make_witness("corollary1/zero-residuals", t, {&a}, r, res,
                                              r.zero());
                        w["t"] = tt;
                        return w;
                    }
                }
                return std::nullopt;
            }));
        return reports;
    }
    case SuiteKind::corollary2: {
        if (!r.descriptor().is_commutative)
            throw RingNotCommutative("corollary2 suite needs a commutative ring");
        std::vector<PropertyReport> reports;
        reports.push_back(run_clause(
            "corollary2/singularity-criterion", ring, n, opt, true,
            [&](std::mt19937_64& rng, u64 t) -> std::optional<nlohmann::json> {
                // alternate constructed-singular and generic matrices
                Matrix a = (t % 2 == 0) ? random_singular_matrix(ring, n, rng)
                                        : random_matrix(ring, n, rng);
                const bool claimed = singularity_check(a, opt.eval);
                const bool actual = r.is_zero(leibniz_det(a, opt.eval));
                if (claimed == actual)
                    return std::nullopt;
                return make_witness("corollary2/singularity-criterion", t, {&a}, r,
                                    claimed ? r.zero() : r.one(), actual ? r.zero() : r.one());
            }));
        return reports;
    }
    }
    throw Error("unreachable suite");
}

std::optional<CounterexampleWitness> search_counterexample(ClaimKind claim, const RingPtr& ring,
                                                           int n, std::uint64_t seed,
                                                           std::uint64_t max_trials,
                                                           const EvalOptions& eval) {
    const Ring& r = *ring;
    const bool averaged = !r.descriptor().is_power_associative;
    const EngineFn edet = [&](const Matrix& m) {
        return averaged ? nonassoc_edet(m, eval) : power_sum_det(m, eval);
    };
    if (claim == ClaimKind::polyadditivity_nonassoc && r.descriptor().is_associative)
        throw RingNotAssociative(
            "polyadditivity-nonassoc is a claim about nonassociative rings");

    for (u64 t = 0; t < max_trials; ++t) {
        auto rng = trial_rng(seed, t);
        switch (claim) {
        case ClaimKind::multiplicativity: {
            Matrix a = random_matrix(ring, n, rng);
            Matrix b = random_matrix(ring, n, rng);
            Matrix ab = matrix_product(a, b);
            const Value lhs = edet(ab);
            const Value rhs = r.mul(edet(a), edet(b));
            if (!r.equal(lhs, rhs))
                return CounterexampleWitness{claim_name(claim),
                                             t,
                                             {matrix_to_json(a), matrix_to_json(b)},
                                             r.to_string(lhs),
                                             r.to_string(rhs)};
            break;
        }
        case ClaimKind::laplace: {
            Matrix a = random_matrix(ring, n, rng);
            if (n < 2)
                throw DimensionMismatch("laplace expansion needs n >= 2");
            // first-row expansion with left factors
            Value acc = r.zero();
            for (int j = 0; j < n; ++j) {
                const Value term = r.mul(a.at(0, j), edet(a.minor_matrix(0, j)));
                acc = (j % 2 == 0) ? r.add(acc, term) : r.sub(acc, term);
            }
            const Value rhs = edet(a);
            if (!r.equal(acc, rhs))
                return CounterexampleWitness{claim_name(claim),
                                             t,
                                             {matrix_to_json(a)},
                                             r.to_string(acc),
                                             r.to_string(rhs)};
            break;
        }
        case ClaimKind::polyadditivity_nonassoc: {
            Matrix m = random_matrix(ring, n, rng);
            const int row = static_cast<int>(rng() % static_cast<u64>(n));
            const auto u = random_row(r, n, rng);
            const auto v = random_row(r, n, rng);
            Matrix a = with_row(m, row, u);
            Matrix b = with_row(m, row, v);
            Matrix c = with_row(m, row, add_rows(r, u, v));
            const Value lhs = edet(c);
            const Value rhs = r.add(edet(a), edet(b));
            if (!r.equal(lhs, rhs))
                return CounterexampleWitness{
                    claim_name(claim),
                    t,
                    {matrix_to_json(a), matrix_to_json(b), matrix_to_json(c)},
                    r.to_string(lhs),
                    r.to_string(rhs)};
            break;
        }
        }
    }
    return std::nullopt;
}

} // namespace edet
