#include "romdtb/wavesim/simulate.hpp"

#include <omp.h>

#include <algorithm>
#include <cmath>
#include <exception>
#include <functional>
#include <string>

#include "romdtb/errors.hpp"

namespace romdtb {

namespace {

struct SparseColumn {
  std::vector<std::size_t> idx;
  std::vector<double> val;

  double dot(const std::vector<double>& x) const {
    double s = 0.0;
    for (std::size_t i = 0; i < idx.size(); ++i) s += val[i] * x[idx[i]];
    return s;
  }
};

std::vector<SparseColumn> sparse_columns(const Matrix& b) {
  std::vector<SparseColumn> cols(b.cols());
  for (std::size_t i = 0; i < b.rows(); ++i)
    for (std::size_t c = 0; c < b.cols(); ++c)
      if (b(i, c) != 0.0) {
        cols[c].idx.push_back(i);
        cols[c].val.push_back(b(i, c));
      }
  return cols;
}

std::uint64_t hash_geometry(const Grid& g, const SensorGeometry& s, Physics p) {
  std::uint64_t h = 1469598103934665603ull;
  auto mix = [&](double v) {
    const std::uint64_t bits = std::hash<double>{}(v);
    h ^= bits;
    h *= 1099511628211ull;
  };
  mix(double(g.nx));
  mix(double(g.nz));
  mix(g.hx);
  mix(g.hz);
  mix(s.width);
  mix(double(p));
  for (double x : s.positions) mix(x);
  return h;
}

}  // namespace

int default_substeps(const Grid& g, double max_speed, double tau, double cfl_ratio) {
  const double h = std::min(g.hx, g.hz);
  const double dt_max = cfl_ratio * h / max_speed;
  return std::max(1, int(std::ceil(tau / dt_max - 1e-9)));
}

Padding required_padding(const Grid& g, const SensorGeometry& sensors, double max_speed, double tau, std::size_t n,
                         double margin_cells) {
  const double need = max_speed * double(n) * tau + 4.0 * sensors.width + margin_cells * std::max(g.hx, g.hz);
  const auto [lo, hi] = std::minmax_element(sensors.positions.begin(), sensors.positions.end());
  // walls sit one node beyond the outermost nodes
  const double left = *lo + g.hx;
  const double right = g.width() - *hi + g.hx;
  const double bottom = double(g.nz) * g.hz;
  auto cells = [](double missing, double h) -> std::size_t {
    return missing > 0.0 ? std::size_t(std::ceil(missing / h)) : 0;
  };
  return Padding{cells(need - left, g.hx), cells(need - right, g.hx), cells(need - bottom, g.hz)};
}

SimulationResult simulate(const Medium& medium_in, const SensorGeometry& sensors, const SimulationOptions& opt) {
  validate(medium_in);
  if (opt.n == 0) throw ValidationError("n must be positive");
  if (!(opt.tau > 0.0)) throw ValidationError("tau must be positive");
  if (!(opt.cfl_ratio > 0.0)) throw ValidationError("cfl ratio must be positive");

  const Grid& g0 = grid_of(medium_in);
  const double cmax = max_speed(medium_in);
  // check the geometry on the user grid before padding
  build_sensor_basis(sensors, FieldLayout::make(physics_of(medium_in), g0));

  Padding pad;
  if (opt.pad) pad = required_padding(g0, sensors, cmax, opt.tau, opt.n, opt.pad_margin_cells);
  const Medium medium = opt.pad ? romdtb::pad(medium_in, pad.left, pad.right, pad.bottom) : medium_in;
  const Grid& g = grid_of(medium);

  const DiscreteWaveOperator op = assemble_operators(medium);
  SensorBasis basis = build_sensor_basis(sensors, op.layout, double(pad.left) * g.hx);

  const int substeps = opt.substeps > 0 ? opt.substeps : default_substeps(g, cmax, opt.tau, opt.cfl_ratio);
  const double dt = opt.tau / double(substeps);
  const double lambda = estimate_lambda_max(op);
  // leapfrog is stable for dt^2 lambda_max < 4; keep a small margin for
  // the power-iteration underestimate
  if (dt * std::sqrt(lambda * 1.02) >= 2.0) {
    const int suggest = int(std::ceil(opt.tau * std::sqrt(lambda * 1.02) / 2.0 * 1.05)) + 1;
    throw StabilityError("time step " + std::to_string(dt) + " violates the stability limit", suggest);
  }

  const std::size_t m = basis.m();
  const std::size_t count = 2 * opt.n;
  const std::size_t np = op.layout.primary_dim;
  const std::size_t nd = op.layout.dual_dim;
  const std::vector<SparseColumn> cols = sparse_columns(basis.b);

  std::vector<Matrix> d(count, Matrix(m, m));
  std::optional<FineSnapshotMatrix> fine;
  if (opt.keep_snapshots) fine = FineSnapshotMatrix{std::vector<Matrix>(count, Matrix(np, m))};

  const int threads = opt.jobs > 0 ? opt.jobs : omp_get_max_threads();
  std::exception_ptr failure;
#pragma omp parallel for schedule(dynamic, 1) num_threads(threads)
  for (long s_long = 0; s_long < long(m); ++s_long) {
    const std::size_t s = std::size_t(s_long);
    try {
      std::vector<double> p(np, 0.0), ph(nd, 0.0), tmp_p(np), tmp_d(nd);
      for (std::size_t i = 0; i < cols[s].idx.size(); ++i) p[cols[s].idx[i]] = cols[s].val[i];
      kernels::serial::spmv(op.lt, p, ph);
      for (double& v : ph) v *= 0.5 * dt;

      auto record = [&](std::size_t k) {
        for (std::size_t r = 0; r < m; ++r) d[k](r, s) = cols[r].dot(p);
        if (fine)
          for (std::size_t i = 0; i < np; ++i) fine->snapshots[k](i, s) = p[i];
      };
      record(0);
      for (std::size_t k = 1; k < count; ++k) {
        for (int sub = 0; sub < substeps; ++sub) {
          kernels::serial::spmv_add(op.l, -dt, ph, p);
          kernels::serial::spmv_add(op.lt, dt, p, ph);
        }
        record(k);
        for (std::size_t r = 0; r < m; ++r)
          if (!std::isfinite(d[k](r, s)))
            throw StabilityError("field blew up at record " + std::to_string(k), substeps * 2);
      }
    } catch (...) {
#pragma omp critical
      if (!failure) failure = std::current_exception();
    }
  }
  if (failure) std::rethrow_exception(failure);

  SimulationResult res{ArrayDataSet(opt.tau, physics_of(medium), std::move(d)),
                       std::move(fine),
                       std::move(basis),
                       g,
                       pad.left,
                       pad.right,
                       pad.bottom,
                       substeps,
                       0.0};
  res.raw_asymmetry = res.data.asymmetry();
  if (opt.symmetrize) res.data.symmetrize();
  res.data.geometry_hash = hash_geometry(g0, sensors, physics_of(medium));
  return res;
}

ArrayDataSet simulate_data(const Medium& medium, const SensorGeometry& sensors, const SimulationOptions& options) {
  SimulationOptions o = options;
  o.keep_snapshots = false;
  return simulate(medium, sensors, o).data;
}

}  // namespace romdtb
