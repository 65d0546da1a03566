#pragma once

#include <gmpxx.h>

#include "edet/counting_ring.hpp"
#include "edet/engines.hpp"

namespace edet {

/// Measured operation counts for one engine run, next to the predicted
/// budgets: (3n-1) n! additions, and for multiplications both the
/// implementable budget n! * n * ceil(log2 n) (binary powering over the
/// n*n! + n! power calls) and the coarser reference curve (n+1)! * ln n.
/// Ratios are measured / predicted.
struct OpCountReport {
    int n = 0;
    DetMethod method = DetMethod::b5;
    OpCounts counts;

    mpz_class predicted_additions;           // (3n-1) * n!
    mpz_class predicted_multiplications;     // n! * n * ceil(log2 n)
    double predicted_multiplications_ref = 0; // (n+1)! * ln n

    double addition_ratio() const;       // (adds+subs) / predicted_additions
    double multiplication_ratio() const; // muls / predicted_multiplications
    double multiplication_ref_ratio() const;

    nlohmann::json to_json() const;
};

/// Runs one engine under a counting wrapper and reports the tallies.
/// The returned value is exactly what the unwrapped engine returns.
std::pair<Value, OpCountReport> measure(DetMethod m, const Matrix& a,
                                        const GammaAssignment& gamma = GammaAssignment::zero(),
                                        const EvalOptions& opt = {});

mpz_class predicted_additions_budget(int n);
mpz_class predicted_multiplications_budget(int n);
double predicted_multiplications_reference(int n);

} // namespace edet
