#pragma once

#include <cstddef>

#include "romdtb/linalg/blocked_matrix.hpp"
#include "romdtb/linalg/matrix.hpp"

namespace romdtb {

/// Thin QR with orthonormal q (n x k) and upper triangular r (k x k),
/// diag(r) >= 0. Classical Gram-Schmidt applied twice per column.
struct ThinQr {
  Matrix q;
  Matrix r;
  double min_diag = 0.0;
};

ThinQr thin_qr(const Matrix& b);

struct LanczosResult {
  Matrix u;         // rows are the Lanczos vectors, T = U A U^T
  BlockedMatrix t;  // block tridiagonal, symmetric diagonal blocks
  Matrix r0;        // R factor of the starting block, so U B0 = [r0; 0; ...]
};

/// Block Lanczos with full reorthogonalization. A must be symmetric of
/// dimension p*m where m = B0.cols(). A candidate block whose smallest R
/// diagonal drops below 1e-12 ||A||_F raises DeflationError.
LanczosResult block_lanczos(const Matrix& a, const Matrix& b0);

}  // namespace romdtb
