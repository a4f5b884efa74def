#include <gtest/gtest.h>

#include <cmath>

#include "romdtb/dtb/perturbation.hpp"
#include "romdtb/dtb/pipeline.hpp"
#include "romdtb/errors.hpp"
#include "romdtb/linalg/chebyshev.hpp"
#include "romdtb/linalg/eigen.hpp"
#include "romdtb/rom/rom.hpp"
#include "romdtb/wavesim/born.hpp"
#include "romdtb/wavesim/noise.hpp"
#include "romdtb/wavesim/simulate.hpp"
#include "support.hpp"

using namespace romdtb;
using romdtb::test::random_matrix;
using romdtb::test::tiny_acoustic;

namespace {

BlockedMatrix bidiagonal(const Matrix& dense, std::size_t m) {
  return BlockedMatrix::project(dense, m, Structure::kLowerBlockBidiagonal);
}

Matrix lower_bidiag(std::size_t n, std::size_t m, std::uint64_t seed, double diag) {
  Matrix a = random_matrix(n, n, seed);
  for (std::size_t i = 0; i < n; ++i) a(i, i) = diag + std::abs(a(i, i));
  return bidiagonal(a, m).entries();
}

// T_k(I - tau^2/2 L L^T) b, dense.
std::vector<Matrix> primary(const Matrix& l, const Matrix& b, double tau, std::size_t count) {
  Matrix p = Matrix::identity(l.rows()) - 0.5 * tau * tau * matmul_nt(l, l);
  return chebyshev_sequence(p, b, count);
}

struct Problem {
  Preset preset;
  ArrayDataSet reference;
};

const Problem& problem() {
  static const Problem p = [] {
    Preset pr = tiny_acoustic(2, 10);
    ArrayDataSet ref = simulate_data(reference_of(pr.medium), pr.sensors, pr.options);
    return Problem{pr, ref};
  }();
  return p;
}

}  // namespace

TEST(Perturbation, SnapshotsMatchChebyshev) {
  const std::size_t n = 6;
  Matrix l = lower_bidiag(n, 2, 1, 2.0);
  Matrix b = random_matrix(n, 2, 2);
  const double tau = 0.3;
  SnapshotSet s = first_order_snapshots(bidiagonal(l, 2), b, tau, 7);
  std::vector<Matrix> ref = primary(l, b, tau, 7);
  for (std::size_t k = 0; k < 7; ++k) EXPECT_LT(relative_error(s.primary[k], ref[k]), 1e-12) << k;
}

TEST(Perturbation, ZeroForcingGivesZero) {
  Matrix l = lower_bidiag(6, 2, 3, 2.0);
  BlockedMatrix lb = bidiagonal(l, 2);
  SnapshotSet s = first_order_snapshots(lb, random_matrix(6, 2, 4), 0.3, 6);
  for (const Matrix& d : perturbation_timestep(lb, lb, 0.3, s)) EXPECT_EQ(max_abs(d), 0.0);
}

TEST(Perturbation, LinearInForcing) {
  Matrix l0 = lower_bidiag(6, 2, 5, 2.0);
  Matrix dl = bidiagonal(random_matrix(6, 6, 6), 2).entries();
  Matrix b = random_matrix(6, 2, 7);
  const double tau = 0.25, alpha = 3.0;
  BlockedMatrix b0 = bidiagonal(l0, 2);
  SnapshotSet s1 = first_order_snapshots(b0, b, tau, 8), s2 = s1;
  auto d1 = perturbation_timestep(b0, bidiagonal(l0 + dl, 2), tau, s1);
  auto d2 = perturbation_timestep(b0, bidiagonal(l0 + alpha * dl, 2), tau, s2);
  for (std::size_t k = 0; k < d1.size(); ++k) EXPECT_LT(relative_error(d2[k], alpha * d1[k]), 1e-13);
}

// m = 1, n = 3: compare with the central difference of the dense matrix
// function along L(e) = L0 + e (Lq - L0).
TEST(Perturbation, MatchesCentralDifferenceOfMatrixFunction) {
  const std::size_t n = 3;
  Matrix l0{{1.5, 0, 0}, {-0.4, 1.2, 0}, {0, -0.3, 1.1}};
  Matrix lq{{1.7, 0, 0}, {-0.2, 1.0, 0}, {0, -0.5, 1.4}};
  Matrix b(n, 1);
  b(0, 0) = 0.8;
  const double tau = 0.6, h = 1e-6;
  const std::size_t count = 6;
  SnapshotSet s = first_order_snapshots(bidiagonal(l0, 1), b, tau, count);
  auto delta = perturbation_timestep(bidiagonal(l0, 1), bidiagonal(lq, 1), tau, s);
  auto plus = primary(l0 + h * (lq - l0), b, tau, count);
  auto minus = primary(l0 - h * (lq - l0), b, tau, count);
  for (std::size_t k = 1; k < count; ++k) {
    Matrix fd = (1.0 / (2.0 * h)) * (plus[k] - minus[k]);
    EXPECT_LT(relative_error(delta[k], fd), 1e-6) << k;
  }
  EXPECT_EQ(max_abs(delta[0]), 0.0);
}

TEST(Dtb, IdentityAtZeroReflectivity) {
  const Problem& p = problem();
  DtbConfig cfg;
  cfg.reference = p.reference;
  DtbResult r = dtb_transform(p.reference, cfg);
  for (std::size_t k = 0; k < r.born.count(); ++k)
    EXPECT_LE(max_abs(r.born[k] - r.reference_rom_data[k]), 1e-12) << k;
  // same medium: equal propagator spectra
  std::vector<double> a = propagator_spectrum(r.measured_rom), b = propagator_spectrum(r.reference_rom);
  ASSERT_EQ(a.size(), b.size());
  for (std::size_t i = 0; i < a.size(); ++i) EXPECT_NEAR(a[i], b[i], 1e-8);
  EXPECT_EQ(r.provenance.timings.front().step, 1);
  EXPECT_EQ(r.provenance.timings.back().step, 7);
}

TEST(Dtb, FullRankReferenceDataInterpolate) {
  const Problem& p = problem();
  DtbConfig cfg;
  cfg.reference = p.reference;
  cfg.spec = TruncationSpec::rank(p.reference.n());
  DtbResult r = dtb_transform(p.reference, cfg);
  EXPECT_LT(aggregate_misfit(r.reference_rom_data, p.reference), 1e-8);
}

TEST(Dtb, AgreesWithUnregularizedAtFullRank) {
  const Problem& p = problem();
  ArrayDataSet d = simulate_data(with_scaled_reflectivity(p.preset.medium, 0.3), p.preset.sensors, p.preset.options);
  DtbConfig cfg;
  cfg.reference = p.reference;
  cfg.spec = TruncationSpec::rank(d.n());
  DtbResult a = dtb_transform(d, cfg);
  DtbResult b = dtb_unregularized(d, p.reference);
  EXPECT_FALSE(b.provenance.regularized);
  EXPECT_LT(aggregate_misfit(a.born, b.born), 1e-6);
}

TEST(Dtb, LinearizationErrorShrinksWithContrast) {
  const Problem& p = problem();
  DtbConfig cfg;
  cfg.reference = p.reference;
  double prev = 1e300;
  for (double eps : {0.4, 0.2, 0.1}) {
    Medium m = with_scaled_reflectivity(p.preset.medium, eps);
    ArrayDataSet d = simulate_data(m, p.preset.sensors, p.preset.options);
    BornOracle oracle = born_oracle(m, p.preset.sensors, p.preset.options);
    DtbResult r = dtb_transform(d, cfg);
    const double mis = scattered_misfit(r.born, oracle.born, oracle.background);
    EXPECT_LT(mis, prev) << eps;
    prev = mis;
  }
  EXPECT_LT(prev, 0.05);
}

TEST(Dtb, NoisyUnregularizedFails) {
  const Problem& p = problem();
  ArrayDataSet d = add_noise(p.reference, 10.0, 11);
  EXPECT_THROW(dtb_unregularized(d, p.reference), IndefiniteGramian);
}

TEST(Dtb, ErrorsCarryStep) {
  const Problem& p = problem();
  DtbConfig cfg;
  cfg.reference = p.reference.head(p.reference.n() - 1);
  try {
    dtb_transform(p.reference, cfg);
    FAIL();
  } catch (const ShapeError& e) {
    EXPECT_EQ(e.step(), 3);
    EXPECT_NE(std::string(e.what()).find("step 3"), std::string::npos);
  }
  cfg.reference = p.reference;
  cfg.spec = TruncationSpec::threshold(1e6);
  try {
    dtb_transform(p.reference, cfg);
    FAIL();
  } catch (const TruncationError& e) {
    EXPECT_EQ(e.step(), 2);
  }
}

TEST(Dtb, ReferenceRomUsesSpdSquareRoot) {
  const Problem& p = problem();
  GramPair g = assemble_gram_pair(p.reference);
  // a square rotated basis: Z^T M0 Z is full, not diagonal
  Truncation t = spectral_truncate(g, TruncationSpec::rank(p.reference.n()));
  Matrix z = matmul(t.z, romdtb::test::random_orthogonal(t.z.cols(), 5));
  Rom r0 = reference_rom(z, p.reference);
  EXPECT_EQ(r0.propagator.pattern_violation(), 0.0);
  std::vector<double> a = propagator_spectrum(r0), b = propagator_spectrum(rom_full(p.reference));
  for (std::size_t i = 0; i < a.size(); ++i) EXPECT_NEAR(a[i], b[i], 1e-8);
  EXPECT_THROW(reference_rom(Matrix(g.mass.dim(), 3), p.reference), ShapeError);
}

TEST(Dtb, ReferenceDataBoundedForHomogeneousMedium) {
  Preset p = tiny_acoustic(1, 10, "homogeneous-acoustic");
  ArrayDataSet d = simulate_data(p.medium, p.sensors, p.options);
  DtbConfig cfg;
  cfg.reference = d;
  DtbResult r = dtb_transform(d, cfg);
  const double d00 = r.reference_rom_data[0](0, 0);
  EXPECT_GT(d00, 0.0);
  for (const Matrix& x : r.reference_rom_data.matrices()) EXPECT_LE(std::abs(x(0, 0)), d00 * (1.0 + 1e-10));
  std::vector<double> sp = propagator_spectrum(r.reference_rom);
  EXPECT_LE(sp.front(), 1.0);
  EXPECT_GE(sp.back(), -1.0);
}
