#include <gtest/gtest.h>

#include <algorithm>
#include <cmath>
#include <numeric>

#include "romdtb/errors.hpp"
#include "romdtb/linalg/blocked_matrix.hpp"
#include "romdtb/linalg/chebyshev.hpp"
#include "romdtb/linalg/cholesky.hpp"
#include "romdtb/linalg/eigen.hpp"
#include "romdtb/linalg/kernels.hpp"
#include "romdtb/linalg/lanczos.hpp"
#include "support.hpp"

using namespace romdtb;
using romdtb::test::random_matrix;
using romdtb::test::random_spd;
using romdtb::test::random_symmetric;

namespace {

// Textbook triple loop, independent of the library kernels.
Matrix naive_product(const Matrix& a, const Matrix& b) {
  Matrix c(a.rows(), b.cols());
  for (std::size_t i = 0; i < a.rows(); ++i)
    for (std::size_t j = 0; j < b.cols(); ++j) {
      long double s = 0.0L;
      for (std::size_t k = 0; k < a.cols(); ++k) s += (long double)a(i, k) * b(k, j);
      c(i, j) = double(s);
    }
  return c;
}

// Cyclic Jacobi rotations, the reference eigensolver for the tests.
std::vector<double> jacobi_eigenvalues(Matrix a) {
  const std::size_t n = a.rows();
  const double scale = frobenius_norm(a);
  for (int sweep = 0; sweep < 100; ++sweep) {
    double off = 0.0;
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t j = 0; j < n; ++j)
        if (i != j) off += a(i, j) * a(i, j);
    if (std::sqrt(off) <= 1e-14 * scale) break;
    for (std::size_t p = 0; p < n; ++p)
      for (std::size_t q = p + 1; q < n; ++q) {
        if (a(p, q) == 0.0) continue;
        const double theta = (a(q, q) - a(p, p)) / (2.0 * a(p, q));
        const double t = (theta >= 0 ? 1.0 : -1.0) / (std::abs(theta) + std::sqrt(theta * theta + 1.0));
        const double c = 1.0 / std::sqrt(t * t + 1.0), s = t * c;
        for (std::size_t k = 0; k < n; ++k) {
          const double akp = a(k, p), akq = a(k, q);
          a(k, p) = c * akp - s * akq;
          a(k, q) = s * akp + c * akq;
        }
        for (std::size_t k = 0; k < n; ++k) {
          const double apk = a(p, k), aqk = a(q, k);
          a(p, k) = c * apk - s * aqk;
          a(q, k) = s * apk + c * aqk;
        }
      }
  }
  std::vector<double> ev(n);
  for (std::size_t i = 0; i < n; ++i) ev[i] = a(i, i);
  std::sort(ev.rbegin(), ev.rend());
  return ev;
}

kernels::CsrMatrix random_csr(std::size_t rows, std::size_t cols, std::uint64_t seed) {
  Matrix dense = random_matrix(rows, cols, seed);
  kernels::CsrMatrix a;
  a.rows = rows;
  a.cols = cols;
  a.row_ptr.push_back(0);
  for (std::size_t i = 0; i < rows; ++i) {
    for (std::size_t j = 0; j < cols; ++j)
      if ((i * 7 + j * 3) % 5 == 0) {
        a.col_idx.push_back(j);
        a.values.push_back(dense(i, j));
      }
    a.row_ptr.push_back(a.values.size());
  }
  return a;
}

}  // namespace

TEST(Kernels, GemmMatchesNaiveProduct) {
  Matrix a = random_matrix(37, 23, 1), b = random_matrix(23, 41, 2);
  EXPECT_LT(relative_error(matmul(a, b), naive_product(a, b)), 1e-14);
  EXPECT_LT(relative_error(matmul_tn(a.transpose(), b), naive_product(a, b)), 1e-14);
  EXPECT_LT(relative_error(matmul_nt(a, b.transpose()), naive_product(a, b)), 1e-14);
}

TEST(Kernels, SerialAndParallelGemmAreBitwiseEqual) {
  Matrix a = random_matrix(65, 70, 3), b = random_matrix(70, 33, 4);
  Matrix c1(65, 33), c2(65, 33);
  kernels::serial::gemm(65, 33, 70, a.data(), b.data(), c1.data());
  kernels::omp::gemm(65, 33, 70, a.data(), b.data(), c2.data());
  EXPECT_TRUE(c1 == c2);
}

TEST(Kernels, SerialAndParallelSpmvAreBitwiseEqual) {
  kernels::CsrMatrix a = random_csr(50, 40, 5);
  std::vector<double> x(40);
  std::iota(x.begin(), x.end(), 0.5);
  std::vector<double> y1(50, 1.0), y2(50, 1.0);
  kernels::serial::spmv(a, x, y1);
  kernels::omp::spmv(a, x, y2);
  EXPECT_EQ(y1, y2);
  kernels::serial::spmv_add(a, -0.3, x, y1);
  kernels::omp::spmv_add(a, -0.3, x, y2);
  EXPECT_EQ(y1, y2);
  // dense check
  std::vector<double> y3(50, 0.0);
  kernels::serial::spmv(a, x, y3);
  for (std::size_t i = 0; i < 50; ++i) {
    double s = 0.0;
    for (std::size_t p = a.row_ptr[i]; p < a.row_ptr[i + 1]; ++p) s += a.values[p] * x[a.col_idx[p]];
    EXPECT_NEAR(y3[i], s, 1e-12);
  }
}

TEST(Matrix, BlockAccessAndTranspose) {
  Matrix a{{1, 2, 3}, {4, 5, 6}};
  EXPECT_TRUE(a.transpose() == (Matrix{{1, 4}, {2, 5}, {3, 6}}));
  EXPECT_TRUE(a.block(0, 1, 2, 2) == (Matrix{{2, 3}, {5, 6}}));
  Matrix z(3, 3);
  z.set_block(1, 1, Matrix{{7, 8}, {9, 10}});
  EXPECT_EQ(z(2, 2), 10.0);
  EXPECT_EQ(asymmetry(Matrix{{1, 2}, {3, 4}}), 1.0);
}

TEST(BlockedMatrix, PatternChecks) {
  Matrix t(6, 6);
  t(0, 0) = t(2, 0) = t(0, 2) = 1.0;
  EXPECT_NO_THROW(BlockedMatrix(t, 2, Structure::kBlockTridiagonal));
  t(4, 0) = 1.0;
  EXPECT_THROW(BlockedMatrix(t, 2, Structure::kBlockTridiagonal), ValidationError);
  BlockedMatrix p = BlockedMatrix::project(t, 2, Structure::kBlockTridiagonal);
  EXPECT_EQ(p.pattern_violation(), 0.0);
  EXPECT_EQ(p.entries()(4, 0), 0.0);
  EXPECT_TRUE(in_pattern(Structure::kLowerBlockBidiagonal, 1, 0));
  EXPECT_FALSE(in_pattern(Structure::kLowerBlockBidiagonal, 0, 1));
  EXPECT_FALSE(in_pattern(Structure::kLowerBlockBidiagonal, 2, 0));
  EXPECT_THROW(BlockedMatrix(Matrix(5, 5), 2), ShapeError);
}

TEST(Eigen, MatchesJacobiOracle) {
  for (std::size_t n : {1u, 2u, 7u, 30u}) {
    Matrix a = random_symmetric(n, 10 + n);
    std::vector<double> ours = sym_eig_desc(a).eigenvalues;
    std::vector<double> ref = jacobi_eigenvalues(a);
    ASSERT_EQ(ours.size(), ref.size());
    for (std::size_t i = 0; i < n; ++i) EXPECT_NEAR(ours[i], ref[i], 1e-12 * frobenius_norm(a)) << n << " " << i;
  }
}

TEST(Eigen, DecompositionProperties) {
  Matrix a = random_symmetric(25, 77);
  SpectralDecomposition e = sym_eig_desc(a);
  EXPECT_TRUE(std::is_sorted(e.eigenvalues.rbegin(), e.eigenvalues.rend()));
  EXPECT_LT(romdtb::test::orthogonality_defect(e.eigenvectors.transpose()), 1e-12);
  Matrix rec = spectral_function(e, [](double x) { return x; });
  EXPECT_LT(relative_error(rec, a), 1e-13);
  // sign convention: largest-magnitude entry positive
  for (std::size_t j = 0; j < 25; ++j) {
    std::size_t best = 0;
    for (std::size_t i = 1; i < 25; ++i)
      if (std::abs(e.eigenvectors(i, j)) > std::abs(e.eigenvectors(best, j))) best = i;
    EXPECT_GT(e.eigenvectors(best, j), 0.0);
  }
  // A v = lambda v
  Matrix av = matmul(a, e.eigenvectors);
  for (std::size_t j = 0; j < 25; ++j)
    for (std::size_t i = 0; i < 25; ++i)
      EXPECT_NEAR(av(i, j), e.eigenvalues[j] * e.eigenvectors(i, j), 1e-12 * frobenius_norm(a));
}

TEST(Eigen, DiagonalAndRepeated) {
  std::vector<double> d{3.0, -1.0, 3.0, 0.0};
  SpectralDecomposition e = sym_eig_desc(Matrix::diagonal(d));
  EXPECT_EQ(e.eigenvalues, (std::vector<double>{3.0, 3.0, 0.0, -1.0}));
}

TEST(Cholesky, ScalarReconstruction) {
  Matrix a = random_spd(20, 3);
  Matrix l = cholesky_lower(a);
  EXPECT_LT(relative_error(matmul_nt(l, l), a), 1e-14);
  for (std::size_t i = 0; i < 20; ++i)
    for (std::size_t j = i + 1; j < 20; ++j) EXPECT_EQ(l(i, j), 0.0);
}

TEST(Cholesky, IndefiniteReportsBlock) {
  Matrix a = random_spd(8, 4);
  a(5, 5) = -100.0;
  try {
    cholesky_lower(a, 2);
    FAIL() << "expected breakdown";
  } catch (const BreakdownError& e) {
    EXPECT_EQ(e.block_index(), 2u);
  }
}

TEST(Cholesky, BlockFullUpperFactor) {
  Matrix a = random_spd(12, 5);
  BlockedMatrix r = block_cholesky_full(a, 3);
  EXPECT_EQ(r.structure(), Structure::kUpperBlockTriangular);
  EXPECT_LT(relative_error(matmul_tn(r.entries(), r.entries()), a), 1e-13);
}

TEST(Cholesky, BlockTridiagonalGivesExactBidiagonalFactor) {
  const std::size_t m = 3, p = 5, n = m * p;
  Matrix t(n, n);
  Matrix g = random_matrix(n, n, 9);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j)
      if (i / m <= j / m + 1 && j / m <= i / m + 1) t(i, j) = g(i, j) + g(j, i);
  for (std::size_t i = 0; i < n; ++i) t(i, i) += 20.0;
  BlockedMatrix tb(t, m, Structure::kBlockTridiagonal);
  BlockedMatrix l = block_cholesky_tridiag(tb);
  EXPECT_EQ(l.structure(), Structure::kLowerBlockBidiagonal);
  EXPECT_EQ(l.pattern_violation(), 0.0);
  EXPECT_LT(relative_error(matmul_nt(l.entries(), l.entries()), t), 1e-13);
}

TEST(Cholesky, TriangularSolves) {
  Matrix a = random_spd(9, 6);
  Matrix l = cholesky_lower(a);
  Matrix b = random_matrix(9, 4, 7);
  EXPECT_LT(relative_error(matmul(l, solve_lower(l, b)), b), 1e-13);
  Matrix u = l.transpose();
  EXPECT_LT(relative_error(matmul(u, solve_upper(u, b)), b), 1e-13);
  EXPECT_LT(relative_error(matmul_tn(u, solve_upper_transpose(u, b)), b), 1e-13);
}

TEST(Lanczos, ThinQrProperties) {
  Matrix b = random_matrix(20, 4, 11);
  ThinQr qr = thin_qr(b);
  EXPECT_LT(relative_error(matmul(qr.q, qr.r), b), 1e-14);
  EXPECT_LT(romdtb::test::orthogonality_defect(qr.q.transpose()), 1e-14);
  for (std::size_t i = 0; i < 4; ++i) {
    EXPECT_GE(qr.r(i, i), 0.0);
    for (std::size_t j = 0; j < i; ++j) EXPECT_EQ(qr.r(i, j), 0.0);
  }
}

TEST(Lanczos, BlockTridiagonalization) {
  const std::size_t m = 3, n = 18;
  Matrix a = random_symmetric(n, 21);
  Matrix b0 = random_matrix(n, m, 22);
  LanczosResult r = block_lanczos(a, b0);
  EXPECT_LT(romdtb::test::orthogonality_defect(r.u), 1e-12);
  EXPECT_EQ(r.t.pattern_violation(), 0.0);
  Matrix t = matmul(r.u, matmul_nt(a, r.u));
  EXPECT_LT(relative_error(r.t.entries(), t), 1e-12);
  Matrix ub = matmul(r.u, b0);
  EXPECT_LT(relative_error(ub.top_rows(m), r.r0), 1e-12);
  EXPECT_LT(max_abs(ub.block(m, 0, n - m, m)), 1e-12 * frobenius_norm(b0));
  for (std::size_t j = 0; j + 1 < n / m; ++j) {
    Matrix sub = r.t.block(j + 1, j);
    for (std::size_t i = 0; i < m; ++i) {
      EXPECT_GE(sub(i, i), 0.0);
      for (std::size_t k = i + 1; k < m; ++k) EXPECT_EQ(sub(k, i), 0.0);  // upper triangular R
    }
  }
}

// With m = 1 the recursion is scalar Lanczos; compare with a direct
// implementation of the three-term recurrence.
TEST(Lanczos, ScalarCaseMatchesThreeTermRecurrence) {
  const std::size_t n = 10;
  Matrix a = random_spd(n, 31);
  Matrix b0 = random_matrix(n, 1, 32);
  LanczosResult r = block_lanczos(a, b0);

  std::vector<double> alpha, beta;
  std::vector<std::vector<double>> qs;
  std::vector<double> q(n);
  double nb = 0.0;
  for (std::size_t i = 0; i < n; ++i) nb += b0(i, 0) * b0(i, 0);
  for (std::size_t i = 0; i < n; ++i) q[i] = b0(i, 0) / std::sqrt(nb);
  qs.push_back(q);
  for (std::size_t j = 0; j < n; ++j) {
    std::vector<double> w(n, 0.0);
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t k = 0; k < n; ++k) w[i] += a(i, k) * qs[j][k];
    double al = 0.0;
    for (std::size_t i = 0; i < n; ++i) al += w[i] * qs[j][i];
    alpha.push_back(al);
    if (j + 1 == n) break;
    for (int pass = 0; pass < 2; ++pass)
      for (const auto& v : qs) {
        double d = 0.0;
        for (std::size_t i = 0; i < n; ++i) d += w[i] * v[i];
        for (std::size_t i = 0; i < n; ++i) w[i] -= d * v[i];
      }
    double be = 0.0;
    for (double x : w) be += x * x;
    be = std::sqrt(be);
    beta.push_back(be);
    for (double& x : w) x /= be;
    qs.push_back(w);
  }
  for (std::size_t j = 0; j < n; ++j) EXPECT_NEAR(r.t.entries()(j, j), alpha[j], 1e-10);
  for (std::size_t j = 0; j + 1 < n; ++j) EXPECT_NEAR(r.t.entries()(j + 1, j), beta[j], 1e-10);
  EXPECT_NEAR(r.r0(0, 0), std::sqrt(nb), 1e-12);
}

TEST(Lanczos, InvariantSubspaceDeflates) {
  // A block diagonal, starting block inside the first diagonal block
  Matrix a(8, 8);
  Matrix s = random_symmetric(4, 41);
  a.set_block(0, 0, s);
  a.set_block(4, 4, random_symmetric(4, 42));
  Matrix b0(8, 2);
  b0(0, 0) = 1.0;
  b0(1, 1) = 1.0;
  b0(2, 0) = 0.5;
  EXPECT_THROW(block_lanczos(a, b0), DeflationError);
  EXPECT_THROW(block_lanczos(a, Matrix(8, 3)), ShapeError);
}

TEST(Chebyshev, MatchesCosineOfArccos) {
  const std::size_t n = 12;
  Matrix g = random_symmetric(n, 51);
  SpectralDecomposition e = sym_eig_desc(g);
  const double s = 0.99 / std::max(std::abs(e.eigenvalues.front()), std::abs(e.eigenvalues.back()));
  Matrix p = s * g;
  SpectralDecomposition ep = sym_eig_desc(p);
  Matrix b = random_matrix(n, 2, 52);
  std::vector<Matrix> seq = chebyshev_sequence(p, b, 9);
  ASSERT_EQ(seq.size(), 9u);
  for (std::size_t k = 0; k < 9; ++k) {
    Matrix tk = spectral_function(ep, [k](double x) { return std::cos(double(k) * std::acos(x)); });
    EXPECT_LT(relative_error(seq[k], matmul(tk, b)), 1e-11) << k;
  }
}

TEST(Chebyshev, StructuredMatchesDense) {
  const std::size_t m = 2, n = 10;
  Matrix t(n, n);
  Matrix g = random_matrix(n, n, 61);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j)
      if (i / m <= j / m + 1 && j / m <= i / m + 1) t(i, j) = 0.2 * (g(i, j) + g(j, i));
  BlockedMatrix tb(t, m, Structure::kBlockTridiagonal);
  Matrix b = random_matrix(n, m, 62);
  std::vector<Matrix> a1 = chebyshev_sequence(t, b, 7), a2 = chebyshev_sequence(tb, b, 7);
  for (std::size_t k = 0; k < 7; ++k) EXPECT_LT(relative_error(a2[k], a1[k]), 1e-13);
}
