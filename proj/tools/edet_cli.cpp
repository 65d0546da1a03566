// Command-line front end: determinants over exact rings, identity checks,
// operation-count benchmarks, property suites and counterexample search.

#include <cstdio>
#include <fstream>
#include <iostream>

#include <CLI11.hpp>

#include "edet/engines.hpp"
#include "edet/matrix_io.hpp"
#include "edet/op_report.hpp"
#include "edet/ring_registry.hpp"
#include "edet/suites.hpp"

namespace {

using namespace edet;

constexpr int kExitParse = 2;
constexpr int kExitInadmissible = 3;
constexpr int kExitDivision = 4;
constexpr int kExitCap = 5;

// A gamma flag value is a JSON literal when possible ('["0","1","0","0"]'
// for coefficient rings), otherwise a plain scalar string.
nlohmann::json value_literal(const std::string& s) {
    try {
        return nlohmann::json::parse(s);
    } catch (const nlohmann::json::exception&) {
        return nlohmann::json(s);
    }
}

GammaAssignment gamma_from_flags(const Matrix& a, const std::string& gamma_constant,
                                 bool has_seed, std::uint64_t gamma_seed,
                                 const std::string& gamma_file) {
    const int present = (!gamma_constant.empty() ? 1 : 0) + (has_seed ? 1 : 0) +
                        (!gamma_file.empty() ? 1 : 0);
    if (present > 1)
        throw ParseError("give at most one of --gamma, --gamma-seed, --gamma-file");
    if (!gamma_constant.empty())
        return GammaAssignment::constant(a.ring()->parse(value_literal(gamma_constant)));
    if (has_seed)
        return GammaAssignment::seeded(gamma_seed);
    if (!gamma_file.empty()) {
        std::ifstream in(gamma_file);
        if (!in)
            throw ParseError("cannot open gamma file '" + gamma_file + "'");
        nlohmann::json j;
        try {
            in >> j;
        } catch (const nlohmann::json::exception& e) {
            throw ParseError("bad JSON in '" + gamma_file + "': " + std::string(e.what()));
        }
        if (!j.is_object() || !j.contains("gammas") || !j["gammas"].is_array())
            throw ParseError("gamma file needs {\"gammas\": [...]}");
        std::vector<Value> values;
        for (const auto& entry : j["gammas"])
            values.push_back(a.ring()->parse(entry));
        return GammaAssignment::explicit_list(std::move(values));
    }
    return GammaAssignment::zero();
}

void write_or_print(const nlohmann::json& j, const std::string& path) {
    if (path.empty()) {
        std::cout << j.dump(2) << "\n";
        return;
    }
    std::ofstream out(path);
    if (!out)
        throw ParseError("cannot write '" + path + "'");
    out << j.dump(2) << "\n";
}

int run(int argc, char** argv) {
    CLI::App app{"exact determinants over commutative, associative, power-associative "
                 "and nonassociative rings"};
    app.set_version_flag("--version", "edet 0.1.0");
    app.require_subcommand(1);
    app.fallthrough(); // --seed / --workers are valid after the subcommand too

    int workers = 1;
    std::uint64_t seed = 1;
    app.add_option("--workers", workers, "permutation-range workers (results are identical)")
        ->check(CLI::Range(1, 64));
    app.add_option("--seed", seed, "seed for randomized commands")->envname("EDET_SEED");

    // det
    auto* det = app.add_subcommand("det", "compute a determinant from a matrix file");
    std::string det_input, det_method = "b5", det_gamma, det_gamma_file, det_output;
    std::uint64_t det_gamma_seed = 0;
    bool det_count_ops = false;
    det->add_option("--input", det_input, "matrix JSON file")->required();
    det->add_option("--method", det_method, "leibniz|b3|b4|b5|sdet|nonassoc");
    det->add_option("--gamma", det_gamma, "constant shift value (ring entry encoding)");
    auto* gseed = det->add_option("--gamma-seed", det_gamma_seed, "seeded shift assignment");
    det->add_option("--gamma-file", det_gamma_file, "explicit shift list file");
    det->add_flag("--count-ops", det_count_ops, "also print the operation-count report");
    det->add_option("--output", det_output, "write the report JSON here instead of stdout");

    // check
    auto* check = app.add_subcommand("check", "run the identity / singularity checks");
    std::string check_input;
    int check_corollary = 1;
    check->add_option("--input", check_input, "matrix JSON file")->required();
    check->add_option("--corollary", check_corollary, "1 = zero residuals, 2 = singularity")
        ->check(CLI::Range(1, 2));

    // bench
    auto* bench = app.add_subcommand("bench", "measure operation counts against the budgets");
    int bench_lo = 2, bench_hi = 7, bench_trials = 1;
    std::string bench_ring = "rational", bench_method = "b5", bench_json;
    bool bench_force = false;
    bench->add_option("--n-min", bench_lo, "smallest order");
    bench->add_option("--n-max", bench_hi, "largest order");
    bench->add_option("--ring", bench_ring, "ring name");
    bench->add_option("--method", bench_method, "engine to instrument");
    bench->add_option("--trials", bench_trials, "matrices per order")->check(CLI::Range(1, 1000));
    bench->add_flag("--force", bench_force, "allow orders past the desk-scale cap (7)");
    bench->add_option("--json", bench_json, "also write the full report array here");

    // search
    auto* search = app.add_subcommand("search", "look for a counterexample to a denied identity");
    std::string search_claim, search_ring = "quaternion", search_output;
    int search_n = 2;
    std::uint64_t search_max = 1000;
    search->add_option("--claim", search_claim, "multiplicativity|laplace|polyadditivity-nonassoc")
        ->required();
    search->add_option("--ring", search_ring, "ring name");
    search->add_option("--n", search_n, "matrix order")->check(CLI::Range(1, 6));
    search->add_option("--max-trials", search_max, "search budget");
    search->add_option("--output", search_output, "write the witness JSON here");

    // suite
    auto* suite = app.add_subcommand("suite", "run a property suite");
    std::string suite_kind, suite_ring = "quaternion", suite_output;
    int suite_n = 2;
    std::uint64_t suite_trials = 200;
    suite->add_option("--suite", suite_kind, "lemma3|lemma4|lemma6|corollary1|corollary2")
        ->required();
    suite->add_option("--ring", suite_ring, "ring name");
    suite->add_option("--n", suite_n, "matrix order")->check(CLI::Range(1, 6));
    suite->add_option("--trials", suite_trials, "trials per clause");
    suite->add_option("--output", suite_output, "write the report JSON here");

    CLI11_PARSE(app, argc, argv);
    const EvalOptions eval{workers};

    if (det->parsed()) {
        const Matrix a = load_matrix_file(det_input);
        const DetMethod method = det_method_from_string(det_method);
        const GammaAssignment gamma =
            gamma_from_flags(a, det_gamma, gseed->count() > 0, det_gamma_seed, det_gamma_file);
        if (det_count_ops) {
            auto [value, report] = measure(method, a, gamma, eval);
            std::cout << a.ring()->to_string(value) << "\n";
            write_or_print(report.to_json(), det_output);
        } else {
            const Value value = evaluate_method(method, a, gamma, eval);
            std::cout << a.ring()->to_string(value) << "\n";
        }
        return 0;
    }

    if (check->parsed()) {
        const Matrix a = load_matrix_file(check_input);
        const Ring& ring = *a.ring();
        if (check_corollary == 1) {
            bool all_zero = true;
            for (int t = 1; t < a.order(); ++t) {
                const Value res = identity_residual(a, static_cast<unsigned>(t), eval);
                std::cout << "t=" << t << ": " << ring.to_string(res) << "\n";
                all_zero = all_zero && ring.is_zero(res);
            }
            std::cout << (all_zero ? "all residuals zero" : "NONZERO RESIDUAL (identity violated)")
                      << "\n";
            return all_zero ? 0 : 1;
        }
        const BlockSums blocks = su_power_block_sums(a, static_cast<unsigned>(a.order()), eval);
        const Value full_diff = ring.sub(blocks.len_n_even, blocks.len_n_odd);
        const Value loo_diff = ring.sub(blocks.len_n1_even, blocks.len_n1_odd);
        std::cout << "length-n   block difference: " << ring.to_string(full_diff) << "\n";
        std::cout << "length-n-1 block difference: " << ring.to_string(loo_diff) << "\n";
        std::cout << (ring.equal(full_diff, loo_diff) ? "singular" : "nonsingular") << "\n";
        return 0;
    }

    if (bench->parsed()) {
        if (bench_lo < 1 || bench_hi < bench_lo)
            throw ParseError("bad order range");
        if (bench_hi > 7 && !bench_force) {
            std::cerr << "order " << bench_hi
                      << " is past the desk-scale cap (7); rerun with --force\n";
            return kExitCap;
        }
        const RingPtr ring = make_ring(bench_ring);
        const DetMethod method = det_method_from_string(bench_method);
        nlohmann::json all = nlohmann::json::array();
        std::printf("%-3s %-9s %14s %14s %9s %14s %14s %9s %9s\n", "n", "method", "adds+subs",
                    "predicted", "ratio", "muls", "predicted", "ratio", "ref-ratio");
        for (int n = bench_lo; n <= bench_hi; ++n) {
            OpCountReport report;
            for (int trial = 0; trial < bench_trials; ++trial) {
                auto rng = trial_rng(seed, static_cast<std::uint64_t>(n) * 1000 +
                                               static_cast<std::uint64_t>(trial));
                const Matrix a = random_matrix(ring, n, rng);
                auto [value, rep] = measure(method, a, GammaAssignment::seeded(seed), eval);
                (void)value;
                report = rep;
            }
            all.push_back(report.to_json());
            std::printf("%-3d %-9s %14llu %14s %9.4f %14llu %14s %9.4f %9.4f\n", n,
                        det_method_name(method).c_str(),
                        static_cast<unsigned long long>(report.counts.additions +
                                                        report.counts.subtractions),
                        report.predicted_additions.get_str().c_str(), report.addition_ratio(),
                        static_cast<unsigned long long>(report.counts.multiplications),
                        report.predicted_multiplications.get_str().c_str(),
                        report.multiplication_ratio(), report.multiplication_ref_ratio());
        }
        if (!bench_json.empty())
            write_or_print(all, bench_json);
        return 0;
    }

    if (search->parsed()) {
        const RingPtr ring = make_ring(search_ring);
        const ClaimKind claim = claim_from_string(search_claim);
        const auto witness = search_counterexample(claim, ring, search_n, seed, search_max, eval);
        if (!witness) {
            std::cout << "exhausted: no counterexample in " << search_max << " trials\n";
            return 1;
        }
        write_or_print(witness->to_json(), search_output);
        return 0;
    }

    if (suite->parsed()) {
        const RingPtr ring = make_ring(suite_ring);
        SuiteOptions opt;
        opt.trials = suite_trials;
        opt.seed = seed;
        opt.eval = eval;
        const auto reports = run_property_suite(suite_from_string(suite_kind), ring, suite_n, opt);
        nlohmann::json arr = nlohmann::json::array();
        bool all_ok = true;
        for (const auto& rep : reports) {
            arr.push_back(rep.to_json());
            std::cout << (rep.satisfied() ? "PASS " : "FAIL ") << rep.property << " ("
                      << rep.failures << "/" << rep.trials << " failures)\n";
            all_ok = all_ok && rep.satisfied();
        }
        if (!suite_output.empty())
            write_or_print(arr, suite_output);
        return all_ok ? 0 : 1;
    }

    return 0;
}

} // namespace

int main(int argc, char** argv) {
    try {
        return run(argc, argv);
    } catch (const DivisionUnavailable& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitDivision;
    } catch (const RingNotCommutative& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitInadmissible;
    } catch (const RingNotAssociative& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitInadmissible;
    } catch (const RingNotPowerAssociative& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitInadmissible;
    } catch (const ParseError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitParse;
    } catch (const MalformedTable& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitParse;
    } catch (const Error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitParse;
    } catch (const std::exception& e) {
        std::cerr << "internal error: " << e.what() << "\n";
        return 70;
    }
}
