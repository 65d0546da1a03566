#pragma once

#include <cstdint>
#include <vector>

#include "edet/ring.hpp"

namespace edet {

/// n! as a machine integer; throws OrderTooLarge past n = 20 (the
/// factorial-time engines are desk-scale by design, the cap is just where
/// the arithmetic would overflow).
long long factorial(int n);

/// Number of ways to bracket an n-fold product: (2n-2)! / (n! (n-1)!).
/// Indexed so that catalan(3) = 2.
long long catalan(int n);

struct Permutation {
    std::vector<int> image; // 0-based images: image[i] = sigma(i)
    std::uint64_t rank = 0; // position in the lexicographic enumeration
    bool is_even = true;

    int n() const { return static_cast<int>(image.size()); }
    int parity_sign() const { return is_even ? 1 : -1; }
};

int inversion_count(const std::vector<int>& image);

/// Image array of the permutation with the given lexicographic rank
/// (factorial number system).
std::vector<int> unrank_permutation(int n, std::uint64_t rank);
std::uint64_t permutation_rank(const std::vector<int>& image);

/// Lazy lexicographic enumeration of S_n over a contiguous rank range.
/// Rank order is the canonical index used for gamma assignments, and the
/// unit of work distribution across workers.
class PermutationStream {
  public:
    PermutationStream(int n, std::uint64_t begin_rank, std::uint64_t end_rank);
    explicit PermutationStream(int n);

    /// Returns the next permutation, or nullptr when the range is done.
    const Permutation* next();

  private:
    Permutation current_;
    std::uint64_t end_;
    bool first_ = true;
    bool done_ = false;
};

} // namespace edet
