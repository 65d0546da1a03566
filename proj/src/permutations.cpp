#include "edet/permutations.hpp"

#include <algorithm>
#include <numeric>

namespace edet {

long long factorial(int n) {
    if (n < 0)
        throw OrderTooLarge("factorial of negative order");
    if (n > 20)
        throw OrderTooLarge("factorial(" + std::to_string(n) + ") overflows 64 bits");
    long long f = 1;
    for (int i = 2; i <= n; ++i)
        f *= i;
    return f;
}

long long catalan(int n) {
    if (n < 1)
        throw OrderTooLarge("catalan defined for n >= 1");
    if (n > 30)
        throw OrderTooLarge("catalan(" + std::to_string(n) + ") overflows 64 bits");
    // (2n-2)! / (n! (n-1)!) computed as binomial(2n-2, n-1) / n, which
    // stays integral at every step of the incremental product.
    long long c = 1;
    for (int i = 1; i <= n - 1; ++i)
        c = c * (n - 1 + i) / i; // binomial(2n-2, n-1), exact at each step
    return c / n;
}

int inversion_count(const std::vector<int>& image) {
    int inv = 0;
    const int n = static_cast<int>(image.size());
    for (int i = 0; i < n; ++i)
        for (int j = i + 1; j < n; ++j)
            if (image[i] > image[j])
                ++inv;
    return inv;
}

std::vector<int> unrank_permutation(int n, std::uint64_t rank) {
    const auto total = static_cast<std::uint64_t>(factorial(n));
    if (rank >= total)
        throw OrderTooLarge("rank out of range");
    std::vector<int> pool(n);
    std::iota(pool.begin(), pool.end(), 0);
    std::vector<int> image;
    image.reserve(n);
    std::uint64_t base = total;
    for (int i = n; i >= 1; --i) {
        base /= static_cast<std::uint64_t>(i);
        const auto digit = static_cast<size_t>(rank / base);
        rank %= base;
        image.push_back(pool[digit]);
        pool.erase(pool.begin() + static_cast<std::ptrdiff_t>(digit));
    }
    return image;
}

std::uint64_t permutation_rank(const std::vector<int>& image) {
    const int n = static_cast<int>(image.size());
    std::vector<int> pool(n);
    std::iota(pool.begin(), pool.end(), 0);
    std::uint64_t rank = 0;
    for (int i = 0; i < n; ++i) {
        auto it = std::find(pool.begin(), pool.end(), image[i]);
        if (it == pool.end())
            throw Error("image array is not a permutation");
        rank = rank * static_cast<std::uint64_t>(n - i) +
               static_cast<std::uint64_t>(it - pool.begin());
        pool.erase(it);
    }
    return rank;
}

PermutationStream::PermutationStream(int n, std::uint64_t begin_rank, std::uint64_t end_rank)
    : end_(end_rank) {
    if (n < 1)
        throw OrderTooLarge("permutations of order < 1");
    if (begin_rank >= end_rank) {
        done_ = true;
        return;
    }
    current_.image = unrank_permutation(n, begin_rank);
    current_.rank = begin_rank;
    current_.is_even = inversion_count(current_.image) % 2 == 0;
}

PermutationStream::PermutationStream(int n)
    : PermutationStream(n, 0, static_cast<std::uint64_t>(factorial(n))) {}

const Permutation* PermutationStream::next() {
    if (done_)
        return nullptr;
    if (first_) {
        first_ = false;
        return &current_;
    }
    if (current_.rank + 1 >= end_ ||
        !std::next_permutation(current_.image.begin(), current_.image.end())) {
        done_ = true;
        return nullptr;
    }
    ++current_.rank;
    current_.is_even = inversion_count(current_.image) % 2 == 0;
    return &current_;
}

} // namespace edet
