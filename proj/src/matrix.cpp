#include "edet/matrix.hpp"

namespace edet {

Matrix::Matrix(RingPtr ring, int n) : n_(n), ring_(std::move(ring)) {
    if (n < 1)
        throw DimensionMismatch("matrix order must be >= 1, got " + std::to_string(n));
    entries_.assign(static_cast<size_t>(n) * n, ring_->zero());
}

size_t Matrix::index(int i, int j) const {
    if (i < 0 || i >= n_ || j < 0 || j >= n_)
        throw DimensionMismatch("matrix index (" + std::to_string(i) + "," + std::to_string(j) +
                                ") out of range for order " + std::to_string(n_));
    return static_cast<size_t>(i) * n_ + j;
}

Matrix Matrix::with_ring(RingPtr ring) const {
    Matrix m = *this;
    m.ring_ = std::move(ring);
    return m;
}

Matrix Matrix::transposed() const {
    Matrix t(ring_, n_);
    for (int i = 0; i < n_; ++i)
        for (int j = 0; j < n_; ++j)
            t.set(j, i, at(i, j));
    return t;
}

Matrix Matrix::minor_matrix(int i, int j) const {
    if (n_ < 2)
        throw DimensionMismatch("no minors of a 1x1 matrix");
    index(i, j);
    Matrix m(ring_, n_ - 1);
    for (int r = 0, mr = 0; r < n_; ++r) {
        if (r == i)
            continue;
        for (int c = 0, mc = 0; c < n_; ++c) {
            if (c == j)
                continue;
            m.set(mr, mc, at(r, c));
            ++mc;
        }
        ++mr;
    }
    return m;
}

Matrix identity_matrix(const RingPtr& ring, int n) {
    Matrix m(ring, n);
    for (int i = 0; i < n; ++i)
        m.set(i, i, ring->one());
    return m;
}

Matrix zero_matrix(const RingPtr& ring, int n) {
    return Matrix(ring, n);
}

Matrix matrix_product(const Matrix& a, const Matrix& b) {
    if (a.order() != b.order())
        throw DimensionMismatch("matrix product of orders " + std::to_string(a.order()) + " and " +
                                std::to_string(b.order()));
    const Ring& ring = *a.ring();
    const int n = a.order();
    Matrix c(a.ring(), n);
    for (int i = 0; i < n; ++i) {
        for (int j = 0; j < n; ++j) {
            Value s = ring.mul(a.at(i, 0), b.at(0, j));
            for (int k = 1; k < n; ++k)
                s = ring.add(s, ring.mul(a.at(i, k), b.at(k, j)));
            c.set(i, j, s);
        }
    }
    return c;
}

Matrix random_matrix(const RingPtr& ring, int n, std::mt19937_64& rng) {
    Matrix m(ring, n);
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j)
            m.set(i, j, ring->sample(rng));
    return m;
}

bool matrix_equal(const Matrix& a, const Matrix& b) {
    if (a.order() != b.order())
        return false;
    for (int i = 0; i < a.order(); ++i)
        for (int j = 0; j < a.order(); ++j)
            if (!a.ring()->equal(a.at(i, j), b.at(i, j)))
                return false;
    return true;
}

} // namespace edet
