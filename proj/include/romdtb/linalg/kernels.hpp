#pragma once

// Inner-loop kernels in two flavors: a plain serial reference used by the
// tests and the benchmarks, and an OpenMP version used by the library.
// Both versions keep the per-output summation order identical, so their
// results are bit-for-bit equal regardless of the thread count.

#include <cstddef>
#include <span>
#include <vector>

namespace romdtb::kernels {

/// Compressed sparse row matrix.
struct CsrMatrix {
  std::size_t rows = 0;
  std::size_t cols = 0;
  std::vector<std::size_t> row_ptr;
  std::vector<std::size_t> col_idx;
  std::vector<double> values;

  std::size_t nnz() const noexcept { return values.size(); }
};

namespace serial {

/// C(m x n) = A(m x k) * B(k x n), all row-major.
void gemm(std::size_t m, std::size_t n, std::size_t k, const double* a, const double* b, double* c);

/// y = A x
void spmv(const CsrMatrix& a, std::span<const double> x, std::span<double> y);

/// y += alpha * A x
void spmv_add(const CsrMatrix& a, double alpha, std::span<const double> x, std::span<double> y);

}  // namespace serial

namespace omp {

void gemm(std::size_t m, std::size_t n, std::size_t k, const double* a, const double* b, double* c);
void spmv(const CsrMatrix& a, std::span<const double> x, std::span<double> y);
void spmv_add(const CsrMatrix& a, double alpha, std::span<const double> x, std::span<double> y);

}  // namespace omp

}  // namespace romdtb::kernels
