#pragma once

#include <optional>

#include "edet/engines.hpp"
#include "edet/op_report.hpp"

namespace edet {

enum class SuiteKind { lemma3, lemma4, lemma6, corollary1, corollary2 };
enum class ClaimKind { multiplicativity, laplace, polyadditivity_nonassoc };

SuiteKind suite_from_string(const std::string& s);
ClaimKind claim_from_string(const std::string& s);
std::string suite_name(SuiteKind k);
std::string claim_name(ClaimKind k);

/// Outcome of checking one clause over `trials` seeded random instances.
/// `expected_to_hold` records whether the property is asserted or denied;
/// a denied property is satisfied by exhibiting at least one failure.
struct PropertyReport {
    std::string property;
    std::string ring;
    int n = 0;
    std::uint64_t trials = 0;
    std::uint64_t failures = 0;
    bool expected_to_hold = true;
    std::optional<nlohmann::json> witness; // first failing instance

    bool satisfied() const { return expected_to_hold ? failures == 0 : failures > 0; }
    nlohmann::json to_json() const;
};

struct SuiteOptions {
    std::uint64_t trials = 200;
    std::uint64_t seed = 1;
    EvalOptions eval;
};

/// Runs every clause of one suite; deterministic given the seed (each
/// trial reseeds from (seed, trial index), so results are independent of
/// trial scheduling).
std::vector<PropertyReport> run_property_suite(SuiteKind suite, const RingPtr& ring, int n,
                                               const SuiteOptions& opt = {});

struct CounterexampleWitness {
    std::string claim;
    std::uint64_t trial = 0;
    std::vector<nlohmann::json> matrices;
    std::string lhs;
    std::string rhs;
    nlohmann::json to_json() const;
};

/// Random search for a violation of a denied identity. Returns the first
/// witness (replayable from the seed) or nullopt when the budget is
/// exhausted; exhaustion is inconclusive, not an error.
std::optional<CounterexampleWitness> search_counterexample(ClaimKind claim, const RingPtr& ring,
                                                           int n, std::uint64_t seed,
                                                           std::uint64_t max_trials,
                                                           const EvalOptions& eval = {});

/// Rank-deficient by construction: the last row is a small random integer
/// combination of the others.
Matrix random_singular_matrix(const RingPtr& ring, int n, std::mt19937_64& rng);

/// Sub-stream RNG for trial `index`: identical trials regardless of how
/// trials are scheduled.
std::mt19937_64 trial_rng(std::uint64_t seed, std::uint64_t index);

} // namespace edet
