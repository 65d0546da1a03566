#pragma once

#include "edet/matrix.hpp"

namespace edet {

/// The generic n x n matrix whose (i,j) entry is the indeterminate x_ij
/// (commutative) or the letter a_ij (free noncommutative). Orders are
/// capped (4 commutative, 3 free) because the engines expand n-th powers
/// of n-term sums over ~n*n! subdiagonals; beyond the cap the expansions
/// outgrow desk scale.
Matrix free_symbolic_matrix(int n, bool commutative);

} // namespace edet
