#include "romdtb/linalg/chebyshev.hpp"

#include <functional>

#include "romdtb/errors.hpp"

namespace romdtb {

namespace {

std::vector<Matrix> recurse(const Matrix& b, std::size_t count, const std::function<Matrix(const Matrix&)>& apply) {
  std::vector<Matrix> out;
  out.reserve(count);
  if (count == 0) return out;
  out.push_back(b);
  if (count == 1) return out;
  out.push_back(apply(b));
  for (std::size_t k = 1; k + 1 < count; ++k) {
    Matrix next = apply(out[k]);
    next *= 2.0;
    next -= out[k - 1];
    out.push_back(std::move(next));
  }
  return out;
}

}  // namespace

std::vector<Matrix> chebyshev_sequence(const Matrix& p, const Matrix& b, std::size_t count) {
  if (p.rows() != p.cols() || p.cols() != b.rows()) throw ShapeError("chebyshev_sequence shape mismatch");
  return recurse(b, count, [&](const Matrix& x) { return matmul(p, x); });
}

Matrix structured_multiply(const BlockedMatrix& p, const Matrix& x) {
  if (p.dim() != x.rows()) throw ShapeError("structured_multiply shape mismatch");
  if (p.structure() == Structure::kFull || p.structure() == Structure::kSymmetric) return matmul(p.entries(), x);
  const std::size_t m = p.block_size();
  const std::size_t nb = p.num_blocks();
  const Matrix& e = p.entries();
  Matrix y(x.rows(), x.cols());
  for (std::size_t bi = 0; bi < nb; ++bi)
    for (std::size_t bj = 0; bj < nb; ++bj) {
      if (!in_pattern(p.structure(), bi, bj)) continue;
      for (std::size_t i = bi * m; i < (bi + 1) * m; ++i)
        for (std::size_t k = bj * m; k < (bj + 1) * m; ++k) {
          const double pik = e(i, k);
          if (pik == 0.0) continue;
          for (std::size_t c = 0; c < x.cols(); ++c) y(i, c) += pik * x(k, c);
        }
    }
  return y;
}

std::vector<Matrix> chebyshev_sequence(const BlockedMatrix& p, const Matrix& b, std::size_t count) {
  if (p.dim() != b.rows()) throw ShapeError("chebyshev_sequence shape mismatch");
  return recurse(b, count, [&](const Matrix& x) { return structured_multiply(p, x); });
}

}  // namespace romdtb
