#include "edet/engines.hpp"

#include <mutex>
#include <optional>
#include <thread>

#include "edet/permutations.hpp"

namespace edet {

DetMethod det_method_from_string(const std::string& s) {
    if (s == "leibniz")
        return DetMethod::leibniz;
    if (s == "b3")
        return DetMethod::b3;
    if (s == "b4")
        return DetMethod::b4;
    if (s == "b5")
        return DetMethod::b5;
    if (s == "sdet")
        return DetMethod::sdet;
    if (s == "nonassoc")
        return DetMethod::nonassoc;
    throw ParseError("unknown method '" + s + "'");
}

std::string det_method_name(DetMethod m) {
    switch (m) {
    case DetMethod::leibniz:
        return "leibniz";
    case DetMethod::b3:
        return "b3";
    case DetMethod::b4:
        return "b4";
    case DetMethod::b5:
        return "b5";
    case DetMethod::sdet:
        return "sdet";
    case DetMethod::nonassoc:
        return "nonassoc";
    }
    throw Error("unreachable method");
}

namespace {

using u64 = std::uint64_t;

void require_commutative(const Ring& r, const char* what) {
    if (!r.descriptor().is_commutative)
        throw RingNotCommutative(std::string(what) + " needs a commutative ring, got '" +
                                 r.name() + "'");
}

void require_associative(const Ring& r, const char* what) {
    if (!r.descriptor().is_associative)
        throw RingNotAssociative(std::string(what) + " needs an associative ring, got '" +
                                 r.name() + "'");
}

void require_unambiguous_powers(const Ring& r, const char* what) {
    if (!r.descriptor().is_power_associative)
        throw RingNotPowerAssociative(std::string(what) + " needs unambiguous powers; ring '" +
                                      r.name() + "' must go through nonassoc_edet");
}

// The formulas divide by n! (and the nonassociative path also by the
// bracketing counts); over characteristic p this is only exact when p is
// large enough, checked up front so a too-small modulus fails fast.
void require_characteristic(const Ring& r, int n, bool averaged_brackets) {
    const unsigned long long p = r.descriptor().characteristic;
    if (p == 0)
        return;
    const unsigned long long need =
        averaged_brackets ? std::max<unsigned long long>(static_cast<unsigned long long>(n),
                                                         2ULL * static_cast<unsigned long long>(n) - 2)
                          : static_cast<unsigned long long>(n);
    if (p <= need)
        throw DivisionUnavailable("characteristic " + std::to_string(p) +
                                  " too small for order " + std::to_string(n) +
                                  (averaged_brackets ? " (needs p > 2n-2)" : " (needs p > n)"));
}

struct RankRange {
    u64 lo, hi;
};

std::vector<RankRange> split_ranks(u64 total, int workers) {
    u64 w = workers < 1 ? 1 : static_cast<u64>(workers);
    if (w > total)
        w = total == 0 ? 1 : total;
    std::vector<RankRange> out;
    out.reserve(static_cast<size_t>(w));
    const u64 base = total / w;
    const u64 extra = total % w;
    u64 lo = 0;
    for (u64 i = 0; i < w; ++i) {
        const u64 len = base + (i < extra ? 1 : 0);
        out.push_back({lo, lo + len});
        lo += len;
    }
    return out;
}

// Runs `block` over contiguous rank ranges, each under its own worker
// clone of the matrix ring, and merges partials in block order. A single
// worker evaluates directly, with no clone and no merge; the merged
// result is identical either way because ring addition is exact.
template <class Partial, class BlockFn, class MergeFn>
Partial run_partitioned(const Matrix& a, u64 total, const EvalOptions& opt, BlockFn block,
                        MergeFn merge) {
    const auto ranges = split_ranks(total, opt.workers);
    if (ranges.size() == 1)
        return block(a, ranges[0].lo, ranges[0].hi);

    std::vector<RingPtr> clones;
    clones.reserve(ranges.size());
    for (size_t i = 0; i < ranges.size(); ++i)
        clones.push_back(a.ring()->worker_clone());

    std::vector<std::optional<Partial>> partials(ranges.size());
    std::exception_ptr failure;
    std::mutex failure_mutex;
    std::vector<std::thread> threads;
    threads.reserve(ranges.size());
    for (size_t i = 0; i < ranges.size(); ++i) {
        threads.emplace_back([&, i] {
            try {
                partials[i] = block(a.with_ring(clones[i]), ranges[i].lo, ranges[i].hi);
            } catch (...) {
                std::lock_guard<std::mutex> lock(failure_mutex);
                if (!failure)
                    failure = std::current_exception();
            }
        });
    }
    for (auto& t : threads)
        t.join();
    if (failure)
        std::rethrow_exception(failure);

    for (const auto& c : clones)
        a.ring()->absorb_worker(*c);

    // Partial merging is bookkeeping, not part of the measured schedule.
    const RingPtr merge_ring = a.ring()->unwrap();
    Partial acc = std::move(*partials[0]);
    for (size_t i = 1; i < partials.size(); ++i)
        acc = merge(std::move(acc), std::move(*partials[i]), *merge_ring);
    return acc;
}

enum class PowerKind { plain, averaged };

struct RawBlocks {
    Value n1_even, n1_odd, n_even, n_odd;
};

// One pass over a rank range of S_n. Per diagonal: n-1 additions build
// the full sum, one optional addition applies the gamma shift, each
// leave-one-out sum costs one subtraction, and each of the n+1 powers is
// accumulated with one addition.
RawBlocks block_sums_range(const Matrix& a, u64 lo, u64 hi, unsigned t, const Value* gamma,
                           PowerKind kind) {
    const Ring& ring = *a.ring();
    const int n = a.order();
    RawBlocks s{ring.zero(), ring.zero(), ring.zero(), ring.zero()};
    PermutationStream perms(n, lo, hi);
    while (const Permutation* p = perms.next()) {
        Value base = a.at(0, p->image[0]);
        for (int i = 1; i < n; ++i)
            base = ring.add(base, a.at(i, p->image[static_cast<size_t>(i)]));
        if (gamma != nullptr)
            base = ring.add(*gamma, base);
        const Value full_power =
            kind == PowerKind::plain ? ring.pow(base, t) : ass_power(ring, base, t);
        Value& acc_n = p->is_even ? s.n_even : s.n_odd;
        acc_n = ring.add(acc_n, full_power);
        Value& acc_n1 = p->is_even ? s.n1_even : s.n1_odd;
        for (int j = 0; j < n; ++j) {
            const Value loo = ring.sub(base, a.at(j, p->image[static_cast<size_t>(j)]));
            const Value loo_power =
                kind == PowerKind::plain ? ring.pow(loo, t) : ass_power(ring, loo, t);
            acc_n1 = ring.add(acc_n1, loo_power);
        }
    }
    return s;
}

RawBlocks merge_blocks(RawBlocks x, RawBlocks y, const Ring& ring) {
    return {ring.add(x.n1_even, y.n1_even), ring.add(x.n1_odd, y.n1_odd),
            ring.add(x.n_even, y.n_even), ring.add(x.n_odd, y.n_odd)};
}

BlockSums to_block_sums(RawBlocks s) {
    return {std::move(s.n1_even), std::move(s.n1_odd), std::move(s.n_even), std::move(s.n_odd)};
}

RawBlocks compute_blocks(const Matrix& a, unsigned t, const Value* gamma, PowerKind kind,
                         const EvalOptions& opt) {
    const u64 total = static_cast<u64>(factorial(a.order()));
    return run_partitioned<RawBlocks>(
        a, total, opt,
        [&](const Matrix& m, u64 lo, u64 hi) {
            return block_sums_range(m, lo, hi, t, gamma, kind);
        },
        merge_blocks);
}

// det = -(1/n!) { S_{n-1}^even - S_{n-1}^odd + S_n^odd - S_n^even }.
Value combine_alternating(const Ring& ring, const RawBlocks& s) {
    Value r = ring.sub(s.n1_even, s.n1_odd);
    r = ring.add(r, s.n_odd);
    return ring.sub(r, s.n_even);
}

} // namespace

BlockSums su_power_block_sums(const Matrix& a, unsigned t, const EvalOptions& opt) {
    return to_block_sums(compute_blocks(a, t, nullptr, PowerKind::plain, opt));
}

BlockSums shifted_power_block_sums(const Matrix& a, const Value& gamma, const EvalOptions& opt) {
    return to_block_sums(
        compute_blocks(a, static_cast<unsigned>(a.order()), &gamma, PowerKind::plain, opt));
}

BlockSums averaged_power_block_sums(const Matrix& a, const EvalOptions& opt) {
    return to_block_sums(
        compute_blocks(a, static_cast<unsigned>(a.order()), nullptr, PowerKind::averaged, opt));
}

Value leibniz_det(const Matrix& a, const EvalOptions& opt) {
    const Ring& ring = *a.ring();
    require_commutative(ring, "leibniz_det");
    const int n = a.order();
    const u64 total = static_cast<u64>(factorial(n));
    return run_partitioned<Value>(
        a, total, opt,
        [n](const Matrix& m, u64 lo, u64 hi) {
            const Ring& r = *m.ring();
            Value acc = r.zero();
            PermutationStream perms(n, lo, hi);
            while (const Permutation* p = perms.next()) {
                Value prod = m.at(0, p->image[0]);
                for (int i = 1; i < n; ++i)
                    prod = r.mul(prod, m.at(i, p->image[static_cast<size_t>(i)]));
                acc = p->is_even ? r.add(acc, prod) : r.sub(acc, prod);
            }
            return acc;
        },
        [](Value x, Value y, const Ring& r) { return r.add(x, y); });
}

Value polarized_det(const Matrix& a, const GammaAssignment& gamma, const EvalOptions& opt) {
    const Ring& ring = *a.ring();
    const int n = a.order();
    require_commutative(ring, "polarized_det");
    require_characteristic(ring, n, false);
    const u64 total = static_cast<u64>(factorial(n));
    gamma.validate(total);

    Value acc = run_partitioned<Value>(
        a, total, opt,
        [&gamma, n](const Matrix& m, u64 lo, u64 hi) {
            const Ring& r = *m.ring();
            const unsigned nexp = static_cast<unsigned>(n);
            Value acc = r.zero();
            PermutationStream perms(n, lo, hi);
            while (const Permutation* p = perms.next()) {
                const Value shift = gamma.at(p->rank, r);
                // alternating sum over all subsets of row positions, each
                // subset sum built with one addition from its prefix
                Value inner = r.zero();
                auto visit = [&](auto&& self, int start, const Value& sum, int size) -> void {
                    const Value power = r.pow(sum, nexp);
                    const bool plus = (n - size) % 2 == 0;
                    inner = plus ? r.add(inner, power) : r.sub(inner, power);
                    for (int next = start; next < n; ++next)
                        self(self, next + 1,
                             r.add(sum, m.at(next, p->image[static_cast<size_t>(next)])),
                             size + 1);
                };
                visit(visit, 0, shift, 0);
                acc = p->is_even ? r.add(acc, inner) : r.sub(acc, inner);
            }
            return acc;
        },
        [](Value x, Value y, const Ring& r) { return r.add(x, y); });
    return ring.div_int(acc, factorial(n));
}

Value uniform_gamma_det(const Matrix& a, const Value& gamma, const EvalOptions& opt) {
    const Ring& ring = *a.ring();
    const int n = a.order();
    require_commutative(ring, "uniform_gamma_det");
    require_characteristic(ring, n, false);
    const RawBlocks s =
        compute_blocks(a, static_cast<unsigned>(n), &gamma, PowerKind::plain, opt);
    return ring.div_int(combine_alternating(ring, s), -factorial(n));
}

Value power_sum_det(const Matrix& a, const EvalOptions& opt) {
    const Ring& ring = *a.ring();
    const int n = a.order();
    require_unambiguous_powers(ring, "power_sum_det");
    require_characteristic(ring, n, false);
    const RawBlocks s =
        compute_blocks(a, static_cast<unsigned>(n), nullptr, PowerKind::plain, opt);
    return ring.div_int(combine_alternating(ring, s), -factorial(n));
}

Value sdet_barvinok(const Matrix& a, const EvalOptions& opt) {
    const Ring& ring = *a.ring();
    const int n = a.order();
    require_associative(ring, "sdet_barvinok");
    require_characteristic(ring, n, false);
    const u64 total = static_cast<u64>(factorial(n));

    Value acc = run_partitioned<Value>(
        a, total, opt,
        [n, total](const Matrix& m, u64 lo, u64 hi) {
            const Ring& r = *m.ring();
            Value acc = r.zero();
            PermutationStream rows(n, lo, hi);
            while (const Permutation* mu = rows.next()) {
                PermutationStream cols(n, 0, total);
                while (const Permutation* sigma = cols.next()) {
                    Value prod = m.at(mu->image[0], sigma->image[0]);
                    for (int s = 1; s < n; ++s)
                        prod = r.mul(prod, m.at(mu->image[static_cast<size_t>(s)],
                                                sigma->image[static_cast<size_t>(s)]));
                    const bool plus = mu->is_even == sigma->is_even;
                    acc = plus ? r.add(acc, prod) : r.sub(acc, prod);
                }
            }
            return acc;
        },
        [](Value x, Value y, const Ring& r) { return r.add(x, y); });
    return ring.div_int(acc, factorial(n));
}

Value ass_power(const Ring& ring, const Value& a, unsigned n) {
    if (n == 0)
        throw ExponentOutOfRange("ass_power needs exponent >= 1");
    if (n == 1)
        return a;
    ScopedTag tag(ring, "ass-power");
    // partial[k-1] = sum of all bracketings of the k-fold product
    std::vector<Value> partial;
    partial.reserve(n);
    partial.push_back(a);
    for (unsigned k = 2; k <= n; ++k) {
        Value s = ring.mul(partial[0], partial[k - 2]);
        for (unsigned i = 2; i < k; ++i)
            s = ring.add(s, ring.mul(partial[i - 1], partial[k - 1 - i]));
        partial.push_back(std::move(s));
    }
    return ring.div_int(partial[n - 1], catalan(static_cast<int>(n)));
}

Value nonassoc_edet(const Matrix& a, const EvalOptions& opt) {
    const Ring& ring = *a.ring();
    const int n = a.order();
    require_characteristic(ring, n, true);
    const RawBlocks s =
        compute_blocks(a, static_cast<unsigned>(n), nullptr, PowerKind::averaged, opt);
    return ring.div_int(combine_alternating(ring, s), -factorial(n));
}

Value identity_residual(const Matrix& a, unsigned t, const EvalOptions& opt) {
    const Ring& ring = *a.ring();
    const int n = a.order();
    require_commutative(ring, "identity_residual");
    if (t < 1 || t > static_cast<unsigned>(n) - 1)
        throw ExponentOutOfRange("exponent t = " + std::to_string(t) +
                                 " outside 1..n-1 for n = " + std::to_string(n));
    const RawBlocks s = compute_blocks(a, t, nullptr, PowerKind::plain, opt);
    return combine_alternating(ring, s);
}

bool singularity_check(const Matrix& a, const EvalOptions& opt) {
    const Ring& ring = *a.ring();
    require_commutative(ring, "singularity_check");
    const RawBlocks s =
        compute_blocks(a, static_cast<unsigned>(a.order()), nullptr, PowerKind::plain, opt);
    // det vanishes iff the two parity differences coincide; no division
    // by n! is needed to decide it.
    return ring.equal(ring.sub(s.n_even, s.n_odd), ring.sub(s.n1_even, s.n1_odd));
}

Value evaluate_method(DetMethod m, const Matrix& a, const GammaAssignment& gamma,
                      const EvalOptions& opt) {
    switch (m) {
    case DetMethod::leibniz:
        return leibniz_det(a, opt);
    case DetMethod::b3:
        return polarized_det(a, gamma, opt);
    case DetMethod::b4:
        return uniform_gamma_det(a, gamma.at(0, *a.ring()), opt);
    case DetMethod::b5:
        return power_sum_det(a, opt);
    case DetMethod::sdet:
        return sdet_barvinok(a, opt);
    case DetMethod::nonassoc:
        return nonassoc_edet(a, opt);
    }
    throw Error("unreachable method");
}

} // namespace edet
