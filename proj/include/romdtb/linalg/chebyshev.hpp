#pragma once

#include <cstddef>
#include <vector>

#include "romdtb/linalg/blocked_matrix.hpp"
#include "romdtb/linalg/matrix.hpp"

namespace romdtb {

/// X_0 = B, X_1 = P B, X_{k+1} = 2 P X_k - X_{k-1}, for k < count.
/// Non-finite values are left in place for the caller to report.
std::vector<Matrix> chebyshev_sequence(const Matrix& p, const Matrix& b, std::size_t count);

/// Same recursion; skips the zero blocks of a structured P.
std::vector<Matrix> chebyshev_sequence(const BlockedMatrix& p, const Matrix& b, std::size_t count);

/// P X honoring the block pattern of P.
Matrix structured_multiply(const BlockedMatrix& p, const Matrix& x);

}  // namespace romdtb
