#include "romdtb/dtb/perturbation.hpp"

#include "romdtb/errors.hpp"
#include "romdtb/linalg/chebyshev.hpp"

namespace romdtb {

namespace {

BlockedMatrix transposed(const BlockedMatrix& l) {
  return BlockedMatrix(l.entries().transpose(), l.block_size(), Structure::kUpperBlockTriangular);
}

// x += alpha * y
void axpy(Matrix& x, double alpha, const Matrix& y) { x.add_block(0, 0, y, alpha); }

}  // namespace

SnapshotSet first_order_snapshots(const BlockedMatrix& l, const Matrix& b, double tau, std::size_t count) {
  if (l.dim() != b.rows()) throw ShapeError("factor and initial block differ in dimension");
  const BlockedMatrix lt = transposed(l);
  SnapshotSet s;
  if (count == 0) return s;
  s.primary.reserve(count);
  s.dual.reserve(count);
  s.primary.push_back(b);
  s.dual.push_back(0.5 * tau * structured_multiply(lt, b));
  for (std::size_t k = 0; k + 1 < count; ++k) {
    Matrix next = s.primary[k];
    axpy(next, -tau, structured_multiply(l, s.dual[k]));
    Matrix dual = s.dual[k];
    axpy(dual, tau, structured_multiply(lt, next));
    s.primary.push_back(std::move(next));
    s.dual.push_back(std::move(dual));
  }
  return s;
}

std::vector<Matrix> perturbation_timestep(const BlockedMatrix& l0, const BlockedMatrix& lq, double tau,
                                          SnapshotSet& reference) {
  if (l0.dim() != lq.dim() || l0.block_size() != lq.block_size())
    throw ShapeError("reference and measured factors differ in shape (truncation ranks must match)");
  const std::size_t count = reference.primary.size();
  if (reference.dual.size() != count) throw ShapeError("reference snapshot set is inconsistent");
  if (count == 0) return {};

  const BlockedMatrix dl(lq.entries() - l0.entries(), l0.block_size(), Structure::kLowerBlockBidiagonal);
  const BlockedMatrix l0t = transposed(l0);
  const BlockedMatrix dlt = transposed(dl);

  const std::size_t rows = reference.primary[0].rows();
  const std::size_t cols = reference.primary[0].cols();
  std::vector<Matrix>& delta = reference.delta;
  std::vector<Matrix>& delta_dual = reference.delta_dual;
  delta.assign(1, Matrix(rows, cols));
  delta_dual.assign(1, 0.5 * tau * structured_multiply(dlt, reference.primary[0]));

  for (std::size_t k = 0; k + 1 < count; ++k) {
    Matrix next = delta[k];
    axpy(next, -tau, structured_multiply(l0, delta_dual[k]));
    axpy(next, -tau, structured_multiply(dl, reference.dual[k]));
    Matrix dual = delta_dual[k];
    axpy(dual, tau, structured_multiply(l0t, next));
    axpy(dual, tau, structured_multiply(dlt, reference.primary[k + 1]));
    delta.push_back(std::move(next));
    delta_dual.push_back(std::move(dual));
  }
  return delta;
}

}  // namespace romdtb
