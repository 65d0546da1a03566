#include "edet/symbolic_matrix.hpp"

#include "edet/free_algebra.hpp"
#include "edet/polynomial.hpp"

namespace edet {

Matrix free_symbolic_matrix(int n, bool commutative) {
    if (n < 1)
        throw OrderTooLarge("symbolic matrix needs order >= 1");
    if (commutative && n > 4)
        throw OrderTooLarge("commutative symbolic matrices are capped at order 4");
    if (!commutative && n > 3)
        throw OrderTooLarge("free symbolic matrices are capped at order 3");
    if (commutative) {
        auto ring = std::make_shared<PolynomialRing>(n);
        Matrix m(ring, n);
        for (int i = 0; i < n; ++i)
            for (int j = 0; j < n; ++j)
                m.set(i, j, ring->variable(i, j));
        return m;
    }
    auto ring = std::make_shared<FreeAlgebraRing>(n);
    Matrix m(ring, n);
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j)
            m.set(i, j, ring->letter(i, j));
    return m;
}

} // namespace edet
