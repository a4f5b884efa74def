#include "romdtb/linalg/cholesky.hpp"

#include <cmath>
#include <limits>
#include <string>

#include "romdtb/errors.hpp"

namespace romdtb {

namespace {

void require_square(const Matrix& a, const char* what) {
  if (a.rows() != a.cols()) throw ShapeError(std::string(what) + " needs a square matrix");
}

}  // namespace

Matrix cholesky_lower(const Matrix& a, std::size_t block_size) {
  require_square(a, "cholesky");
  if (block_size == 0) block_size = 1;
  const std::size_t n = a.rows();
  Matrix l(n, n);
  for (std::size_t j = 0; j < n; ++j) {
    double d = a(j, j);
    for (std::size_t k = 0; k < j; ++k) d -= l(j, k) * l(j, k);
    // a pivot at roundoff level of the original diagonal counts as zero
    const double floor = 8.0 * std::numeric_limits<double>::epsilon() * std::abs(a(j, j));
    if (!(d > floor)) throw BreakdownError("non-positive pivot " + std::to_string(d), j / block_size);
    const double ljj = std::sqrt(d);
    l(j, j) = ljj;
    for (std::size_t i = j + 1; i < n; ++i) {
      double s = a(i, j);
      for (std::size_t k = 0; k < j; ++k) s -= l(i, k) * l(j, k);
      l(i, j) = s / ljj;
    }
  }
  return l;
}

BlockedMatrix block_cholesky_full(const Matrix& m_mat, std::size_t m) {
  require_square(m_mat, "block cholesky");
  if (m == 0 || m_mat.rows() % m != 0) throw ShapeError("dimension is not a multiple of the block size");
  Matrix r = cholesky_lower(symmetrized(m_mat), m).transpose();
  return BlockedMatrix(std::move(r), m, Structure::kUpperBlockTriangular);
}

BlockedMatrix block_cholesky_full(const BlockedMatrix& m_mat) {
  return block_cholesky_full(m_mat.entries(), m_mat.block_size());
}

BlockedMatrix block_cholesky_tridiag(const BlockedMatrix& t) {
  const std::size_t m = t.block_size();
  const std::size_t p = t.num_blocks();
  if (pattern_violation(t.entries(), m, Structure::kBlockTridiagonal) != 0.0)
    throw ShapeError("block_cholesky_tridiag input is not block tridiagonal");

  Matrix l(t.dim(), t.dim());
  Matrix sub;  // L_{j,j-1}
  for (std::size_t j = 0; j < p; ++j) {
    Matrix pivot = t.block(j, j);
    if (j > 0) pivot -= matmul_nt(sub, sub);
    Matrix ljj;
    try {
      ljj = cholesky_lower(symmetrized(pivot), m);
    } catch (const BreakdownError& e) {
      throw BreakdownError("block tridiagonal cholesky: " + e.message(), j);
    }
    l.set_block(j * m, j * m, ljj);
    if (j + 1 < p) {
      // L_{j+1,j} = T_{j+1,j} L_jj^{-T}
      sub = solve_lower(ljj, t.block(j + 1, j).transpose()).transpose();
      l.set_block((j + 1) * m, j * m, sub);
    }
  }
  return BlockedMatrix(std::move(l), m, Structure::kLowerBlockBidiagonal);
}

Matrix solve_lower(const Matrix& l, const Matrix& b) {
  require_square(l, "solve_lower");
  if (l.rows() != b.rows()) throw ShapeError("solve_lower shape mismatch");
  const std::size_t n = l.rows();
  Matrix x = b;
  for (std::size_t c = 0; c < b.cols(); ++c) {
    for (std::size_t i = 0; i < n; ++i) {
      double s = x(i, c);
      for (std::size_t k = 0; k < i; ++k) s -= l(i, k) * x(k, c);
      x(i, c) = s / l(i, i);
    }
  }
  return x;
}

Matrix solve_upper(const Matrix& u, const Matrix& b) {
  require_square(u, "solve_upper");
  if (u.rows() != b.rows()) throw ShapeError("solve_upper shape mismatch");
  const std::size_t n = u.rows();
  Matrix x = b;
  for (std::size_t c = 0; c < b.cols(); ++c) {
    for (std::size_t i = n; i-- > 0;) {
      double s = x(i, c);
      for (std::size_t k = i + 1; k < n; ++k) s -= u(i, k) * x(k, c);
      x(i, c) = s / u(i, i);
    }
  }
  return x;
}

Matrix solve_upper_transpose(const Matrix& u, const Matrix& b) {
  require_square(u, "solve_upper_transpose");
  if (u.rows() != b.rows()) throw ShapeError("solve_upper_transpose shape mismatch");
  const std::size_t n = u.rows();
  Matrix x = b;
  for (std::size_t c = 0; c < b.cols(); ++c) {
    for (std::size_t i = 0; i < n; ++i) {
      double s = x(i, c);
      for (std::size_t k = 0; k < i; ++k) s -= u(k, i) * x(k, c);
      x(i, c) = s / u(i, i);
    }
  }
  return x;
}

}  // namespace romdtb
