#pragma once

#include <cstddef>

#include "romdtb/linalg/blocked_matrix.hpp"
#include "romdtb/linalg/matrix.hpp"

namespace romdtb {

/// Lower scalar Cholesky factor, A = L L^T. A non-positive pivot raises
/// BreakdownError carrying pivot_index / block_size.
Matrix cholesky_lower(const Matrix& a, std::size_t block_size = 1);

/// Upper block triangular R with M = R^T R. Within blocks this is the
/// scalar Cholesky factor, so R is the scalar factor read in blocks.
BlockedMatrix block_cholesky_full(const Matrix& m_mat, std::size_t m);
BlockedMatrix block_cholesky_full(const BlockedMatrix& m_mat);

/// Lower block bidiagonal L with T = L L^T for block tridiagonal SPD T.
BlockedMatrix block_cholesky_tridiag(const BlockedMatrix& t);

/// Solve L X = B for lower triangular L.
Matrix solve_lower(const Matrix& l, const Matrix& b);
/// Solve U X = B for upper triangular U.
Matrix solve_upper(const Matrix& u, const Matrix& b);
/// Solve U^T X = B for upper triangular U.
Matrix solve_upper_transpose(const Matrix& u, const Matrix& b);

}  // namespace romdtb
