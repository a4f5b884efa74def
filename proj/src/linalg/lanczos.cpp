#include "romdtb/linalg/lanczos.hpp"

#include <algorithm>
#include <cmath>
#include <limits>

#include "romdtb/errors.hpp"

namespace romdtb {

namespace {

constexpr double kDeflationTol = 1e-12;

// w -= Q(:, 0:ncols) * (Q(:, 0:ncols)^T w), done twice.
void project_out(const Matrix& q, std::size_t ncols, Matrix& w) {
  if (ncols == 0) return;
  const std::size_t n = q.rows();
  for (int pass = 0; pass < 2; ++pass) {
    Matrix coef(ncols, w.cols());
    for (std::size_t k = 0; k < n; ++k)
      for (std::size_t c = 0; c < ncols; ++c) {
        const double qkc = q(k, c);
        if (qkc == 0.0) continue;
        for (std::size_t j = 0; j < w.cols(); ++j) coef(c, j) += qkc * w(k, j);
      }
    for (std::size_t k = 0; k < n; ++k)
      for (std::size_t c = 0; c < ncols; ++c) {
        const double qkc = q(k, c);
        if (qkc == 0.0) continue;
        for (std::size_t j = 0; j < w.cols(); ++j) w(k, j) -= qkc * coef(c, j);
      }
  }
}

}  // namespace

ThinQr thin_qr(const Matrix& b) {
  const std::size_t n = b.rows();
  const std::size_t k = b.cols();
  ThinQr out{Matrix(n, k), Matrix(k, k), std::numeric_limits<double>::infinity()};
  for (std::size_t j = 0; j < k; ++j) {
    std::vector<double> v(n);
    for (std::size_t i = 0; i < n; ++i) v[i] = b(i, j);
    for (int pass = 0; pass < 2; ++pass) {
      for (std::size_t c = 0; c < j; ++c) {
        double dot = 0.0;
        for (std::size_t i = 0; i < n; ++i) dot += out.q(i, c) * v[i];
        out.r(c, j) += dot;
        for (std::size_t i = 0; i < n; ++i) v[i] -= dot * out.q(i, c);
      }
    }
    double norm = 0.0;
    for (double x : v) norm += x * x;
    norm = std::sqrt(norm);
    out.r(j, j) = norm;
    out.min_diag = std::min(out.min_diag, norm);
    if (norm > 0.0)
      for (std::size_t i = 0; i < n; ++i) out.q(i, j) = v[i] / norm;
  }
  if (k == 0) out.min_diag = 0.0;
  return out;
}

LanczosResult block_lanczos(const Matrix& a, const Matrix& b0) {
  const std::size_t n = a.rows();
  const std::size_t m = b0.cols();
  if (a.cols() != n || b0.rows() != n) throw ShapeError("block_lanczos shape mismatch");
  if (m == 0 || n % m != 0) throw ShapeError("operator dimension is not a multiple of the block width");
  const std::size_t p = n / m;
  const double anorm = frobenius_norm(a);

  ThinQr first = thin_qr(b0);
  if (!(first.min_diag > kDeflationTol * frobenius_norm(b0)))
    throw DeflationError("starting block is rank deficient", 0);

  Matrix q(n, n);  // columns are Lanczos vectors
  q.set_block(0, 0, first.q);
  Matrix t(n, n);
  Matrix prev_b;  // B_{j-1} = T_{j,j-1}

  for (std::size_t j = 0; j < p; ++j) {
    const Matrix qj = q.columns(j * m, m);
    Matrix w = matmul(a, qj);
    if (j > 0) w -= matmul_nt(q.columns((j - 1) * m, m), prev_b);
    Matrix aj = symmetrized(matmul_tn(qj, w));
    w -= matmul(qj, aj);
    t.set_block(j * m, j * m, aj);
    if (j + 1 == p) break;

    project_out(q, (j + 1) * m, w);
    ThinQr next = thin_qr(w);
    if (!(next.min_diag > kDeflationTol * anorm)) throw DeflationError("lanczos block lost rank", j + 1);
    q.set_block(0, (j + 1) * m, next.q);
    t.set_block((j + 1) * m, j * m, next.r);
    t.set_block(j * m, (j + 1) * m, next.r.transpose());
    prev_b = next.r;
  }

  return LanczosResult{q.transpose(), BlockedMatrix(std::move(t), m, Structure::kBlockTridiagonal),
                       std::move(first.r)};
}

}  // namespace romdtb
