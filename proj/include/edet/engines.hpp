#pragma once

#include "edet/gamma.hpp"
#include "edet/matrix.hpp"
#include "edet/subdiagonals.hpp"

namespace edet {

/// Evaluation method tokens, shared by the engines, the instrumentation
/// layer and the CLI.
enum class DetMethod { leibniz, b3, b4, b5, sdet, nonassoc };

DetMethod det_method_from_string(const std::string& s);
std::string det_method_name(DetMethod m);

struct EvalOptions {
    /// Number of contiguous permutation-rank blocks evaluated
    /// independently (possibly on threads) and merged in block order.
    /// Results and operation counts are identical for every value.
    int workers = 1;
};

/// The four alternating block sums every power-sum engine combines:
/// sums of t-th powers of subdiagonal sums of length n-1 and n, split by
/// the parity of the parent diagonal.
struct BlockSums {
    Value len_n1_even;
    Value len_n1_odd;
    Value len_n_even;
    Value len_n_odd;
};

/// Sums su(l)^t over the leave-one-out schedule: one pass over S_n, n-1
/// additions for each full diagonal sum and one subtraction per
/// leave-one-out sum.
BlockSums su_power_block_sums(const Matrix& a, unsigned t, const EvalOptions& opt = {});

/// Same schedule with every sum shifted by a fixed gamma before powering.
BlockSums shifted_power_block_sums(const Matrix& a, const Value& gamma,
                                   const EvalOptions& opt = {});

/// Same schedule with n-th powers replaced by averaged bracketings, for
/// rings whose powers are ambiguous.
BlockSums averaged_power_block_sums(const Matrix& a, const EvalOptions& opt = {});

/// Signed sum of diagonal products; the definitional determinant over a
/// commutative ring and the oracle everything else is checked against.
Value leibniz_det(const Matrix& a, const EvalOptions& opt = {});

/// Determinant from the full polarization family: one free shift value
/// per permutation, alternating powers of shifted subset sums, divided by
/// n!. Equal to leibniz_det for every gamma assignment.
Value polarized_det(const Matrix& a, const GammaAssignment& gamma, const EvalOptions& opt = {});

/// Specialization of polarized_det to a single shared gamma: only the
/// length n-1 and n subdiagonals survive the cancellation.
Value uniform_gamma_det(const Matrix& a, const Value& gamma, const EvalOptions& opt = {});

/// The power-sum determinant (gamma = 0): multiplication-free except for
/// the n-th powers, and meaningful over any ring with unambiguous powers.
/// Over a commutative ring it equals leibniz_det; over an associative
/// ring it equals sdet_barvinok.
Value power_sum_det(const Matrix& a, const EvalOptions& opt = {});

/// Symmetrized double sum over row and column permutations divided by n!,
/// by direct enumeration of (n!)^2 terms. Oracle-grade.
Value sdet_barvinok(const Matrix& a, const EvalOptions& opt = {});

/// Average of all bracketings of the n-fold product a * ... * a, via the
/// convolution recurrence A_k = sum A_i A_{k-i} (valid by bilinearity),
/// divided by the bracketing count catalan(n).
Value ass_power(const Ring& ring, const Value& a, unsigned n);

/// Power-sum determinant with averaged bracketings in place of powers:
/// defined over fully nonassociative rings.
Value nonassoc_edet(const Matrix& a, const EvalOptions& opt = {});

/// The alternating block combination at exponent t < n; identically zero
/// over any commutative ring with integer division.
Value identity_residual(const Matrix& a, unsigned t, const EvalOptions& opt = {});

/// True iff the determinant vanishes, decided by comparing the length-n
/// and length-(n-1) power blocks, without dividing by n!.
bool singularity_check(const Matrix& a, const EvalOptions& opt = {});

/// Evaluates one method on one matrix (the CLI entry point). b3 uses the
/// given gamma assignment; b4 uses gamma at rank 0 as its constant shift.
Value evaluate_method(DetMethod m, const Matrix& a, const GammaAssignment& gamma,
                      const EvalOptions& opt = {});

} // namespace edet
