#pragma once

#include <vector>

#include "edet/ring.hpp"

namespace edet {

/// Dense square matrix over a ring. Entries are immutable ring values;
/// the matrix itself is filled during construction and then treated as
/// read-only by every engine.
class Matrix {
  public:
    Matrix(RingPtr ring, int n);

    int order() const { return n_; }
    const RingPtr& ring() const { return ring_; }

    const Value& at(int i, int j) const { return entries_[index(i, j)]; }
    void set(int i, int j, Value v) { entries_[index(i, j)] = std::move(v); }

    /// Same entries, different ring handle. Used to evaluate an existing
    /// matrix under an instrumented wrapper of its own ring.
    Matrix with_ring(RingPtr ring) const;

    Matrix transposed() const;
    /// The (n-1)x(n-1) matrix with row i and column j removed.
    Matrix minor_matrix(int i, int j) const;

  private:
    size_t index(int i, int j) const;

    int n_;
    RingPtr ring_;
    std::vector<Value> entries_;
};

Matrix identity_matrix(const RingPtr& ring, int n);
Matrix zero_matrix(const RingPtr& ring, int n);
Matrix matrix_product(const Matrix& a, const Matrix& b);
Matrix random_matrix(const RingPtr& ring, int n, std::mt19937_64& rng);
bool matrix_equal(const Matrix& a, const Matrix& b);

} // namespace edet
