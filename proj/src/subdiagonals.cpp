#include "edet/subdiagonals.hpp"

#include <numeric>

namespace edet {

Value Subdiagonal::sum(const Ring& ring) const {
    if (values.empty())
        return ring.zero();
    Value s = values[0];
    for (size_t i = 1; i < values.size(); ++i)
        s = ring.add(s, values[i]);
    return s;
}

SubdiagonalStream::SubdiagonalStream(const Matrix& a, int k, ParityFilter parity)
    : a_(a), k_(k), parity_(parity), perms_(a.order()) {
    if (k < 1 || k > a.order())
        throw DimensionMismatch("subdiagonal length " + std::to_string(k) +
                                " out of range for order " + std::to_string(a.order()));
    advance_parent();
}

bool SubdiagonalStream::advance_parent() {
    const bool want_even = parity_ == ParityFilter::even;
    while ((parent_ = perms_.next()) != nullptr) {
        if (parent_->is_even == want_even) {
            subset_.resize(static_cast<size_t>(k_));
            std::iota(subset_.begin(), subset_.end(), 0);
            subset_fresh_ = true;
            return true;
        }
    }
    return false;
}

bool SubdiagonalStream::next(Subdiagonal& out) {
    if (parent_ == nullptr)
        return false;
    if (!subset_fresh_) {
        // lexicographically next k-subset of {0..n-1}
        const int n = a_.order();
        int i = k_ - 1;
        while (i >= 0 && subset_[static_cast<size_t>(i)] == n - k_ + i)
            --i;
        if (i < 0) {
            if (!advance_parent())
                return false;
        } else {
            ++subset_[static_cast<size_t>(i)];
            for (int j = i + 1; j < k_; ++j)
                subset_[static_cast<size_t>(j)] = subset_[static_cast<size_t>(j - 1)] + 1;
        }
    }
    subset_fresh_ = false;

    out.rows = subset_;
    out.cols.clear();
    out.values.clear();
    for (int r : subset_) {
        const int c = parent_->image[static_cast<size_t>(r)];
        out.cols.push_back(c);
        out.values.push_back(a_.at(r, c));
    }
    out.parent_rank = parent_->rank;
    out.parent_even = parent_->is_even;
    return true;
}

DiagonalSums subdiagonal_sums(const Matrix& a, const Permutation& sigma) {
    const int n = a.order();
    if (sigma.n() != n)
        throw DimensionMismatch("permutation order " + std::to_string(sigma.n()) +
                                " does not match matrix order " + std::to_string(n));
    const Ring& ring = *a.ring();
    DiagonalSums out;
    out.full = a.at(0, sigma.image[0]);
    for (int i = 1; i < n; ++i)
        out.full = ring.add(out.full, a.at(i, sigma.image[static_cast<size_t>(i)]));
    out.leave_one_out.reserve(static_cast<size_t>(n));
    for (int j = 0; j < n; ++j)
        out.leave_one_out.push_back(
            ring.sub(out.full, a.at(j, sigma.image[static_cast<size_t>(j)])));
    return out;
}

} // namespace edet
