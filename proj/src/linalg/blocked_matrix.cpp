#include "romdtb/linalg/blocked_matrix.hpp"

#include <algorithm>
#include <cmath>
#include <string>

#include "romdtb/errors.hpp"

namespace romdtb {

std::string_view to_string(Structure s) noexcept {
  switch (s) {
    case Structure::kFull: return "full";
    case Structure::kSymmetric: return "symmetric";
    case Structure::kBlockTridiagonal: return "block-tridiagonal";
    case Structure::kLowerBlockBidiagonal: return "lower-block-bidiagonal";
    case Structure::kUpperBlockTriangular: return "upper-block-triangular";
  }
  return "unknown";
}

bool in_pattern(Structure s, std::size_t bi, std::size_t bj) noexcept {
  switch (s) {
    case Structure::kFull:
    case Structure::kSymmetric: return true;
    case Structure::kBlockTridiagonal: return (bi > bj ? bi - bj : bj - bi) <= 1;
    case Structure::kLowerBlockBidiagonal: return bi == bj || bi == bj + 1;
    case Structure::kUpperBlockTriangular: return bj >= bi;
  }
  return true;
}

namespace {

void check_shape(const Matrix& a, std::size_t m) {
  if (m == 0) throw ShapeError("block size must be positive");
  if (a.rows() != a.cols()) throw ShapeError("blocked matrix must be square");
  if (a.rows() % m != 0)
    throw ShapeError("dimension " + std::to_string(a.rows()) + " is not a multiple of block size " +
                     std::to_string(m));
}

}  // namespace

double pattern_violation(const Matrix& a, std::size_t m, Structure s) {
  double worst = 0.0;
  for (std::size_t i = 0; i < a.rows(); ++i)
    for (std::size_t j = 0; j < a.cols(); ++j)
      if (!in_pattern(s, i / m, j / m)) worst = std::max(worst, std::abs(a(i, j)));
  return worst;
}

BlockedMatrix::BlockedMatrix(Matrix entries, std::size_t block_size, Structure structure)
    : entries_(std::move(entries)), block_size_(block_size), structure_(structure) {
  check_shape(entries_, block_size_);
  if (structure_ == Structure::kSymmetric) {
    entries_ = symmetrized(entries_);
  } else if (structure_ != Structure::kFull) {
    const double v = romdtb::pattern_violation(entries_, block_size_, structure_);
    if (v != 0.0)
      throw ShapeError(std::string("entries outside the ") + std::string(to_string(structure_)) +
                       " pattern (max " + std::to_string(v) + ")");
  }
}

BlockedMatrix BlockedMatrix::project(Matrix entries, std::size_t block_size, Structure structure) {
  check_shape(entries, block_size);
  if (structure != Structure::kFull && structure != Structure::kSymmetric) {
    for (std::size_t i = 0; i < entries.rows(); ++i)
      for (std::size_t j = 0; j < entries.cols(); ++j)
        if (!in_pattern(structure, i / block_size, j / block_size)) entries(i, j) = 0.0;
  }
  return BlockedMatrix(std::move(entries), block_size, structure);
}

Matrix BlockedMatrix::block(std::size_t bi, std::size_t bj) const {
  return entries_.block(bi * block_size_, bj * block_size_, block_size_, block_size_);
}

double BlockedMatrix::pattern_violation() const {
  return romdtb::pattern_violation(entries_, block_size_, structure_);
}

}  // namespace romdtb
