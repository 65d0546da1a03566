#pragma once

#include "edet/matrix.hpp"
#include "edet/permutations.hpp"

namespace edet {

/// A length-k subsequence of some diagonal: entries a[r, sigma(r)] at
/// strictly increasing rows, remembered together with the parity of the
/// generating permutation. For k >= n-1 the parent is determined by the
/// positions and column images; for shorter subdiagonals the same
/// position/column set can arise from several parents and is emitted once
/// per parent.
struct Subdiagonal {
    std::vector<int> rows; // strictly increasing, 0-based
    std::vector<int> cols; // cols[s] = sigma(rows[s])
    std::vector<Value> values;
    std::uint64_t parent_rank = 0;
    bool parent_even = true;

    int length() const { return static_cast<int>(rows.size()); }
    /// Sum of the entries, su(l). Empty subdiagonals sum to zero.
    Value sum(const Ring& ring) const;
};

enum class ParityFilter { even, odd };

/// Streams every (parent diagonal, k-subset) pair with the requested
/// parent parity, parents in lexicographic rank order and subsets in
/// lexicographic position order within a parent.
class SubdiagonalStream {
  public:
    SubdiagonalStream(const Matrix& a, int k, ParityFilter parity);

    /// Fills `out` and returns true, or returns false when exhausted.
    bool next(Subdiagonal& out);

  private:
    bool advance_parent();

    const Matrix& a_;
    int k_;
    ParityFilter parity_;
    PermutationStream perms_;
    const Permutation* parent_ = nullptr;
    std::vector<int> subset_; // current k-subset of row indices
    bool subset_fresh_ = false;
};

/// The sums the power-sum engines consume for one diagonal: the full
/// diagonal sum built with n-1 additions, and the n leave-one-out sums
/// each obtained with a single subtraction.
struct DiagonalSums {
    Value full;
    std::vector<Value> leave_one_out;
};

DiagonalSums subdiagonal_sums(const Matrix& a, const Permutation& sigma);

} // namespace edet
