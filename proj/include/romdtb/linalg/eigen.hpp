#pragma once

#include <functional>
#include <vector>

#include "romdtb/linalg/blocked_matrix.hpp"
#include "romdtb/linalg/matrix.hpp"

namespace romdtb {

/// Eigenpairs of a symmetric matrix, eigenvalues non-increasing.
/// Column j of eigenvectors belongs to eigenvalues[j].
struct SpectralDecomposition {
  std::vector<double> eigenvalues;
  Matrix eigenvectors;
};

/// Householder tridiagonalization followed by implicit QL.
/// Each eigenvector is signed so its largest-magnitude entry is positive
/// (lowest index wins ties). Throws ConvergenceError if QL stalls.
SpectralDecomposition sym_eig_desc(const Matrix& a);
SpectralDecomposition sym_eig_desc(const BlockedMatrix& a);

/// Z f(Lambda) Z^T for a decomposition.
Matrix spectral_function(const SpectralDecomposition& eig, const std::function<double(double)>& f);

/// Apply the sign convention to the columns of v in place.
void normalize_signs(Matrix& v);

}  // namespace romdtb
