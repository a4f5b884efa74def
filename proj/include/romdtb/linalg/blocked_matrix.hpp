#pragma once

#include <cstddef>
#include <string_view>

#include "romdtb/linalg/matrix.hpp"

namespace romdtb {

enum class Structure {
  kFull,
  kSymmetric,
  kBlockTridiagonal,
  kLowerBlockBidiagonal,
  kUpperBlockTriangular,
};

std::string_view to_string(Structure s) noexcept;

/// True when block (bi, bj) may hold nonzeros under structure s.
bool in_pattern(Structure s, std::size_t bi, std::size_t bj) noexcept;

/// Square matrix with an m x m block layout and a structure tag.
///
/// The constructor checks the tag: Symmetric input is symmetrized, pattern
/// tags require exact zeros outside the pattern. project() instead zeros
/// whatever lies outside the pattern.
class BlockedMatrix {
 public:
  BlockedMatrix() = default;
  BlockedMatrix(Matrix entries, std::size_t block_size, Structure structure = Structure::kFull);

  static BlockedMatrix project(Matrix entries, std::size_t block_size, Structure structure);

  std::size_t block_size() const noexcept { return block_size_; }
  std::size_t num_blocks() const noexcept { return block_size_ == 0 ? 0 : entries_.rows() / block_size_; }
  std::size_t dim() const noexcept { return entries_.rows(); }
  Structure structure() const noexcept { return structure_; }
  const Matrix& entries() const noexcept { return entries_; }

  Matrix block(std::size_t bi, std::size_t bj) const;

  /// Largest |entry| outside the structure's block pattern.
  double pattern_violation() const;

 private:
  Matrix entries_;
  std::size_t block_size_ = 0;
  Structure structure_ = Structure::kFull;
};

/// Largest |entry| of a outside the pattern of s for block size m.
double pattern_violation(const Matrix& a, std::size_t m, Structure s);

}  // namespace romdtb
