#include "romdtb/wavesim/operators.hpp"

#include <algorithm>
#include <cmath>
#include <map>

#include "romdtb/errors.hpp"

namespace romdtb {

namespace {

// Row-by-row builder for a pair of CSR matrices sharing one pattern.
class PairBuilder {
 public:
  PairBuilder(std::size_t rows, std::size_t cols) : rows_(rows), cols_(cols), entries_(rows) {}

  void add(std::size_t row, std::size_t col, double base, double pot) {
    auto& e = entries_[row][col];
    e.first += base;
    e.second += pot;
  }

  void finish(kernels::CsrMatrix& base, kernels::CsrMatrix& pot) const {
    for (kernels::CsrMatrix* m : {&base, &pot}) {
      m->rows = rows_;
      m->cols = cols_;
      m->row_ptr.assign(1, 0);
      m->col_idx.clear();
      m->values.clear();
    }
    for (std::size_t r = 0; r < rows_; ++r) {
      for (const auto& [col, v] : entries_[r]) {
        base.col_idx.push_back(col);
        base.values.push_back(v.first);
        pot.col_idx.push_back(col);
        pot.values.push_back(v.second);
      }
      base.row_ptr.push_back(base.col_idx.size());
      pot.row_ptr.push_back(pot.col_idx.size());
    }
  }

 private:
  std::size_t rows_, cols_;
  std::vector<std::map<std::size_t, std::pair<double, double>>> entries_;
};

// Field value at doubled coordinates (x2, z2); odd coordinates average
// the neighbouring nodes, indices clamp to the grid.
double sample(const Grid& g, const std::vector<double>& f, long x2, long z2) {
  auto clampx = [&](long i) { return std::size_t(std::clamp<long>(i, 0, long(g.nx) - 1)); };
  auto clampz = [&](long j) { return std::size_t(std::clamp<long>(j, 0, long(g.nz) - 1)); };
  const long x0 = (x2 >= 0 ? x2 : x2 - 1) / 2;
  const long z0 = (z2 >= 0 ? z2 : z2 - 1) / 2;
  const long x1 = (x2 % 2 != 0) ? x0 + 1 : x0;
  const long z1 = (z2 % 2 != 0) ? z0 + 1 : z0;
  return 0.25 * (f[g.index(clampx(x0), clampz(z0))] + f[g.index(clampx(x1), clampz(z0))] +
                 f[g.index(clampx(x0), clampz(z1))] + f[g.index(clampx(x1), clampz(z1))]);
}

struct Endpoint {
  bool present;
  std::size_t col;
  double c;  // speed at the endpoint
  double q;  // reflectivity at the endpoint
};

// One difference term (1/h)[a+ P+ - a- P-] of L^T written into the
// per-row weights. sign = +1 for the acoustic potential, -1 for elastic.
struct Term {
  std::size_t col;
  double base;
  double pot;
};

std::vector<Term> difference_terms(const Endpoint& plus, const Endpoint& minus, double c_mid, double h, double sign) {
  std::vector<Term> out;
  double qp = plus.q, qm = minus.q;
  if (!plus.present) qp = qm;
  if (!minus.present) qm = qp;
  const double dq = qp - qm;
  const double pot = sign * 0.25 * c_mid * dq / h;
  if (plus.present) out.push_back({plus.col, std::sqrt(c_mid * plus.c) / h, pot});
  if (minus.present) out.push_back({minus.col, -std::sqrt(c_mid * minus.c) / h, pot});
  return out;
}

}  // namespace

FieldLayout FieldLayout::make(Physics p, const Grid& g) {
  FieldLayout f;
  f.physics = p;
  f.grid = g;
  if (p == Physics::kAcoustic) {
    f.primary_dim = g.nx * g.nz;
    f.dual_dim = (g.nx + 1) * g.nz + g.nx * g.nz;
  } else {
    f.primary_dim = (g.nx - 1) * g.nz + g.nx * g.nz;
    f.dual_dim = 2 * g.nx * g.nz + (g.nx - 1) * (g.nz - 1);
  }
  return f;
}

kernels::CsrMatrix csr_transpose(const kernels::CsrMatrix& a) {
  kernels::CsrMatrix t;
  t.rows = a.cols;
  t.cols = a.rows;
  t.row_ptr.assign(a.cols + 1, 0);
  for (std::size_t c : a.col_idx) ++t.row_ptr[c + 1];
  for (std::size_t i = 0; i < a.cols; ++i) t.row_ptr[i + 1] += t.row_ptr[i];
  t.col_idx.resize(a.nnz());
  t.values.resize(a.nnz());
  std::vector<std::size_t> next(t.row_ptr.begin(), t.row_ptr.end() - 1);
  for (std::size_t r = 0; r < a.rows; ++r)
    for (std::size_t p = a.row_ptr[r]; p < a.row_ptr[r + 1]; ++p) {
      const std::size_t dst = next[a.col_idx[p]]++;
      t.col_idx[dst] = r;
      t.values[dst] = a.values[p];
    }
  return t;
}

kernels::CsrMatrix csr_add(const kernels::CsrMatrix& a, const kernels::CsrMatrix& b) {
  if (a.rows != b.rows || a.cols != b.cols || a.col_idx != b.col_idx || a.row_ptr != b.row_ptr)
    throw ShapeError("csr_add needs matching sparsity patterns");
  kernels::CsrMatrix c = a;
  for (std::size_t i = 0; i < c.values.size(); ++i) c.values[i] += b.values[i];
  return c;
}

void DiscreteWaveOperator::apply_l(std::span<const double> dual, std::span<double> primary) const {
  kernels::omp::spmv(l, dual, primary);
}

void DiscreteWaveOperator::apply_lt(std::span<const double> primary, std::span<double> dual) const {
  kernels::omp::spmv(lt, primary, dual);
}

DiscreteWaveOperator assemble_acoustic(const Grid& g, const std::vector<double>& c, const std::vector<double>& q) {
  g.validate();
  if (c.size() != g.size() || q.size() != g.size()) throw ShapeError("acoustic coefficient fields do not match the grid");
  DiscreteWaveOperator op;
  op.layout = FieldLayout::make(Physics::kAcoustic, g);
  PairBuilder builder(op.layout.dual_dim, op.layout.primary_dim);

  auto node = [&](long ix, long iz) -> Endpoint {
    if (ix < 0 || iz < 0 || ix >= long(g.nx) || iz >= long(g.nz)) return {false, 0, 0.0, 0.0};
    const std::size_t k = g.index(std::size_t(ix), std::size_t(iz));
    return {true, k, c[k], q[k]};
  };
  auto emit = [&](std::size_t row, const Endpoint& plus, const Endpoint& minus, double h) {
    const double c_mid = plus.present && minus.present ? 0.5 * (plus.c + minus.c) : (plus.present ? plus.c : minus.c);
    for (const Term& t : difference_terms(plus, minus, c_mid, h, +1.0)) builder.add(row, t.col, t.base, t.pot);
  };

  for (std::size_t iz = 0; iz < g.nz; ++iz)
    for (std::size_t i = 0; i <= g.nx; ++i)
      emit(iz * (g.nx + 1) + i, node(long(i), long(iz)), node(long(i) - 1, long(iz)), g.hx);
  const std::size_t zoff = (g.nx + 1) * g.nz;
  for (std::size_t iz = 0; iz < g.nz; ++iz)
    for (std::size_t ix = 0; ix < g.nx; ++ix)
      emit(zoff + iz * g.nx + ix, node(long(ix), long(iz) + 1), node(long(ix), long(iz)), g.hz);

  builder.finish(op.lt_base, op.lt_potential);
  op.lt = csr_add(op.lt_base, op.lt_potential);
  op.l = csr_transpose(op.lt);
  return op;
}

DiscreteWaveOperator assemble_elastic(const Grid& g, const std::vector<double>& cp, const std::vector<double>& gamma,
                                      const std::vector<double>& q) {
  g.validate();
  if (cp.size() != g.size() || gamma.size() != g.size() || q.size() != g.size())
    throw ShapeError("elastic coefficient fields do not match the grid");
  DiscreteWaveOperator op;
  op.layout = FieldLayout::make(Physics::kElastic, g);
  const FieldLayout& lay = op.layout;
  PairBuilder builder(lay.dual_dim, lay.primary_dim);

  // primary endpoints, doubled coordinates
  auto v1 = [&](long i, long j) -> Endpoint {  // at (i + 1/2, j + 1/2)
    if (i < 0 || j < 0 || i >= long(g.nx) - 1 || j >= long(g.nz)) return {false, 0, 0.0, 0.0};
    return {true, lay.v1_index(std::size_t(i), std::size_t(j)), sample(g, cp, 2 * i + 1, 2 * j + 1),
            sample(g, q, 2 * i + 1, 2 * j + 1)};
  };
  auto v2 = [&](long i, long j) -> Endpoint {  // at (i, j)
    if (i < 0 || j < 0 || i >= long(g.nx) || j >= long(g.nz)) return {false, 0, 0.0, 0.0};
    return {true, lay.v2_index(std::size_t(i), std::size_t(j)), sample(g, cp, 2 * i, 2 * j),
            sample(g, q, 2 * i, 2 * j)};
  };

  const std::size_t nn = g.nx * g.nz;
  for (std::size_t j = 0; j < g.nz; ++j)
    for (std::size_t i = 0; i < g.nx; ++i) {
      // normal stresses at (i, j + 1/2)
      const long x2 = 2 * long(i), z2 = 2 * long(j) + 1;
      const double c_mid = sample(g, cp, x2, z2);
      const double gm = sample(g, gamma, x2, z2);
      const double s1 = std::sqrt(2.0 * (1.0 - gm));
      const double s2 = std::sqrt(2.0 * gm);
      const double a = 0.5 * (s1 + s2);
      const double b = 0.5 * (s1 - s2);
      const auto w11 = difference_terms(v1(long(i), long(j)), v1(long(i) - 1, long(j)), c_mid, g.hx, -1.0);
      const auto w22 = difference_terms(v2(long(i), long(j) + 1), v2(long(i), long(j)), c_mid, g.hz, -1.0);
      const std::size_t r11 = j * g.nx + i;
      const std::size_t r22 = nn + r11;
      for (const Term& t : w11) {
        builder.add(r11, t.col, a * t.base, a * t.pot);
        builder.add(r22, t.col, b * t.base, b * t.pot);
      }
      for (const Term& t : w22) {
        builder.add(r11, t.col, b * t.base, b * t.pot);
        builder.add(r22, t.col, a * t.base, a * t.pot);
      }
    }
  for (std::size_t j = 1; j < g.nz; ++j)
    for (std::size_t i = 0; i + 1 < g.nx; ++i) {
      // shear stress at (i + 1/2, j)
      const long x2 = 2 * long(i) + 1, z2 = 2 * long(j);
      const double c_mid = sample(g, cp, x2, z2);
      const double sg = std::sqrt(sample(g, gamma, x2, z2));
      const std::size_t r = 2 * nn + (j - 1) * (g.nx - 1) + i;
      for (const Term& t : difference_terms(v1(long(i), long(j)), v1(long(i), long(j) - 1), c_mid, g.hz, -1.0))
        builder.add(r, t.col, sg * t.base, sg * t.pot);
      for (const Term& t : difference_terms(v2(long(i) + 1, long(j)), v2(long(i), long(j)), c_mid, g.hx, -1.0))
        builder.add(r, t.col, sg * t.base, sg * t.pot);
    }

  builder.finish(op.lt_base, op.lt_potential);
  op.lt = csr_add(op.lt_base, op.lt_potential);
  op.l = csr_transpose(op.lt);
  return op;
}

DiscreteWaveOperator assemble_operators(const Medium& medium) {
  validate(medium);
  if (const auto* a = std::get_if<AcousticMedium>(&medium)) return assemble_acoustic(a->grid, a->c, a->q());
  const auto& e = std::get<ElasticMedium>(medium);
  return assemble_elastic(e.grid, e.cp, e.gamma(), e.q());
}

double estimate_lambda_max(const DiscreteWaveOperator& op, int iterations) {
  const std::size_t n = op.layout.primary_dim;
  std::vector<double> x(n), y(op.layout.dual_dim), z(n);
  // deterministic, non-smooth start vector
  for (std::size_t i = 0; i < n; ++i) x[i] = 1.0 + 0.5 * std::sin(0.7 * double(i)) * ((i % 2) ? 1.0 : -1.0);
  double lambda = 0.0;
  for (int it = 0; it < iterations; ++it) {
    double nx = 0.0;
    for (double v : x) nx += v * v;
    nx = std::sqrt(nx);
    if (nx == 0.0) return 0.0;
    for (double& v : x) v /= nx;
    op.apply_lt(x, y);
    op.apply_l(y, z);
    double dot = 0.0;
    for (std::size_t i = 0; i < n; ++i) dot += x[i] * z[i];
    lambda = dot;
    x.swap(z);
  }
  return lambda;
}

}  // namespace romdtb
