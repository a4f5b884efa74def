#pragma once

#include <cmath>
#include <cstdint>
#include <random>
#include <vector>

#include "romdtb/linalg/matrix.hpp"
#include "romdtb/wavesim/presets.hpp"

namespace romdtb::test {

inline Matrix random_matrix(std::size_t r, std::size_t c, std::uint64_t seed) {
  std::mt19937_64 rng(seed);
  std::normal_distribution<double> g(0.0, 1.0);
  Matrix a(r, c);
  for (double& v : a.values()) v = g(rng);
  return a;
}

inline Matrix random_symmetric(std::size_t n, std::uint64_t seed) { return symmetrized(random_matrix(n, n, seed)); }

/// G G^T + shift I.
inline Matrix random_spd(std::size_t n, std::uint64_t seed, double shift = 1.0) {
  Matrix g = random_matrix(n, n, seed);
  Matrix a = matmul_nt(g, g);
  for (std::size_t i = 0; i < n; ++i) a(i, i) += shift;
  return symmetrized(a);
}

inline Matrix random_orthogonal(std::size_t n, std::uint64_t seed) {
  // Gram-Schmidt on a Gaussian matrix
  Matrix a = random_matrix(n, n, seed);
  for (std::size_t j = 0; j < n; ++j) {
    for (std::size_t c = 0; c < j; ++c) {
      double d = 0.0;
      for (std::size_t i = 0; i < n; ++i) d += a(i, c) * a(i, j);
      for (std::size_t i = 0; i < n; ++i) a(i, j) -= d * a(i, c);
    }
    double nrm = 0.0;
    for (std::size_t i = 0; i < n; ++i) nrm += a(i, j) * a(i, j);
    nrm = std::sqrt(nrm);
    for (std::size_t i = 0; i < n; ++i) a(i, j) /= nrm;
  }
  return a;
}

inline double orthogonality_defect(const Matrix& q_rows) {
  Matrix g = matmul_nt(q_rows, q_rows);
  for (std::size_t i = 0; i < g.rows(); ++i) g(i, i) -= 1.0;
  return max_abs(g);
}

/// Tiny acoustic problem that simulates in well under a second.
inline Preset tiny_acoustic(std::size_t m_a = 3, std::size_t n = 8, const char* name = "acoustic-two-inclusions") {
  PresetParams p = default_params(name);
  p.m_a = m_a;
  p.n = n;
  p.spacing = 0.1;
  p.h = 0.04;
  p.tau = 0.05;
  return make_preset(name, p);
}

/// Tiny elastic problem.
inline Preset tiny_elastic(std::size_t m_a = 2, std::size_t n = 6) {
  PresetParams p = default_params("elastic-two-inclusions");
  p.m_a = m_a;
  p.n = n;
  p.spacing = 0.1;
  p.h = 0.04;
  p.width = 0.05;
  p.tau = 0.04;
  return make_preset("elastic-two-inclusions", p);
}

}  // namespace romdtb::test
