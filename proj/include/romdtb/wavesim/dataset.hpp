#pragma once

#include <cstddef>
#include <cstdint>
#include <string>
#include <vector>

#include "romdtb/linalg/matrix.hpp"

namespace romdtb {

enum class Physics : std::uint8_t { kAcoustic = 0, kElastic = 1 };

std::string to_string(Physics p);
Physics physics_from_string(const std::string& s);

struct NoiseDescriptor {
  double percent = 0.0;
  std::uint64_t seed = 0;
  double std_dev = 0.0;  // absolute noise level, 0 when noiseless
};

/// Array data D_0 .. D_{2n-1}, each m x m, sampled every tau.
class ArrayDataSet {
 public:
  ArrayDataSet() = default;
  ArrayDataSet(double tau, Physics physics, std::vector<Matrix> d);

  std::size_t m() const noexcept { return m_; }
  std::size_t n() const noexcept { return d_.size() / 2; }
  std::size_t count() const noexcept { return d_.size(); }
  double tau() const noexcept { return tau_; }
  Physics physics() const noexcept { return physics_; }

  const Matrix& operator[](std::size_t k) const { return d_[k]; }
  Matrix& operator[](std::size_t k) { return d_[k]; }
  const std::vector<Matrix>& matrices() const noexcept { return d_; }

  std::uint64_t geometry_hash = 0;
  NoiseDescriptor noise;

  double max_abs() const;
  /// Largest |D_k - D_k^T| over k.
  double asymmetry() const;
  void symmetrize();

  /// First 2*n_new records.
  ArrayDataSet head(std::size_t n_new) const;

 private:
  std::size_t m_ = 0;
  double tau_ = 0.0;
  Physics physics_ = Physics::kAcoustic;
  std::vector<Matrix> d_;
};

/// Elementwise A - B.
ArrayDataSet difference(const ArrayDataSet& a, const ArrayDataSet& b);

/// sqrt(sum_k ||A_k - B_k||^2 / sum_k ||B_k||^2).
double aggregate_misfit(const ArrayDataSet& a, const ArrayDataSet& b);

/// ||A - B|| / ||B - background||, aggregated over k.
double scattered_misfit(const ArrayDataSet& a, const ArrayDataSet& b, const ArrayDataSet& background);

void require_compatible(const ArrayDataSet& a, const ArrayDataSet& b);

}  // namespace romdtb
