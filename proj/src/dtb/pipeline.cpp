#include "romdtb/dtb/pipeline.hpp"

#include <chrono>
#include <cmath>

#include "romdtb/errors.hpp"
#include "romdtb/linalg/eigen.hpp"
#include "romdtb/rom/gramian.hpp"

namespace romdtb {

namespace {

template <typename F>
auto timed_step(DtbProvenance& prov, int step, const char* name, F&& fn) {
  const auto t0 = std::chrono::steady_clock::now();
  auto record = [&] {
    const double dt = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
    prov.timings.push_back({step, name, dt});
  };
  try {
    if constexpr (std::is_void_v<decltype(fn())>) {
      fn();
      record();
    } else {
      auto r = fn();
      record();
      return r;
    }
  } catch (Error& e) {
    if (!e.step()) e.set_step(step);
    throw;
  }
}

std::vector<Matrix> born_output(const Rom& rom0, const std::vector<Matrix>& ref_data, const std::vector<Matrix>& delta) {
  std::vector<Matrix> out;
  out.reserve(ref_data.size());
  for (std::size_t k = 0; k < ref_data.size(); ++k) {
    Matrix dk = ref_data[k] + matmul_tn(rom0.b, delta[k]);
    if (!all_finite(dk)) throw NumericalError("non-finite Born output at record " + std::to_string(k));
    out.push_back(symmetrized(dk));
  }
  return out;
}

// b^T T_k(P0) b using the reference primary snapshots.
std::vector<Matrix> reference_data(const Matrix& b, const SnapshotSet& snaps) {
  std::vector<Matrix> out;
  out.reserve(snaps.primary.size());
  for (const Matrix& p : snaps.primary) out.push_back(symmetrized(matmul_tn(b, p)));
  return out;
}

}  // namespace

Rom reference_rom(const Matrix& z, const ArrayDataSet& d0) { return reference_rom(z, assemble_gram_pair(d0), d0.tau()); }

Rom reference_rom(const Matrix& z, const GramPair& g0, double tau) {
  const std::size_t m = g0.m;
  if (z.rows() != g0.mass.dim() || z.cols() % m != 0) throw ShapeError("truncation basis does not fit the reference data");
  Matrix s2 = symmetrized(matmul_tn(z, matmul(g0.mass.entries(), z)));
  Matrix scal = symmetrized(matmul_tn(z, matmul(g0.stiffness.entries(), z)));
  SpectralDecomposition eig = sym_eig_desc(s2);
  const double top = eig.eigenvalues.front();
  const double low = eig.eigenvalues.back();
  if (!(low > 1e-14 * std::abs(top)))
    throw TruncationError("projected reference Gramian is not positive definite (smallest eigenvalue " +
                          std::to_string(low) + "); raise the truncation threshold");
  Matrix sfrak = spectral_function(eig, [](double v) { return std::sqrt(v); });
  Matrix sfrak_inv = spectral_function(eig, [](double v) { return 1.0 / std::sqrt(v); });
  Matrix e1 = z.top_rows(m).transpose();
  return rom_projected(sfrak, sfrak_inv, scal, e1, tau);
}

DtbResult dtb_transform(const ArrayDataSet& measured, const DtbConfig& config) {
  DtbProvenance prov;
  const ArrayDataSet& ref = config.reference;
  try {
    require_compatible(measured, ref);
  } catch (Error& e) {
    e.set_step(3);
    throw;
  }
  const double tau = measured.tau();
  const std::size_t count = measured.count();
  prov.n = measured.n();

  GramPair g = timed_step(prov, 1, "gramians", [&] { return assemble_gram_pair(measured); });
  Truncation trunc = timed_step(prov, 2, "truncation", [&] { return spectral_truncate(g, config.spec); });
  GramPair g0 = timed_step(prov, 3, "reference gramians", [&] { return assemble_gram_pair(ref); });
  prov.spectrum = trunc.eig.eigenvalues;

  const bool may_reduce = config.reduce_rank_on_breakdown && config.spec.is_automatic();
  while (true) {
    try {
      Rom rom0 = timed_step(prov, 4, "projection", [&] { return reference_rom(trunc.z, g0, tau); });
      Rom romq = timed_step(prov, 5, "lanczos and factors", [&] {
        Rom r = rom_regularized(trunc, tau);
        attach_factor(r);
        return r;
      });
      timed_step(prov, 5, "reference factor", [&] { attach_factor(rom0); });

      SnapshotSet snaps = timed_step(prov, 6, "reference data",
                                     [&] { return first_order_snapshots(*rom0.factor, romq.b, tau, count); });
      std::vector<Matrix> d0 = reference_data(romq.b, snaps);

      std::vector<Matrix> born = timed_step(prov, 7, "perturbation", [&] {
        std::vector<Matrix> delta = perturbation_timestep(*rom0.factor, *romq.factor, tau, snaps);
        return born_output(romq, d0, delta);
      });

      prov.theta = trunc.theta;
      prov.blocks = trunc.blocks;
      prov.tail_mass = trunc.tail_mass;
      ArrayDataSet out(tau, measured.physics(), std::move(born));
      out.geometry_hash = measured.geometry_hash;
      ArrayDataSet ref_out(tau, measured.physics(), std::move(d0));
      ref_out.geometry_hash = measured.geometry_hash;
      return DtbResult{std::move(out), std::move(ref_out), std::move(romq), std::move(rom0), std::move(prov)};
    } catch (const NumericalError&) {
      if (!may_reduce || trunc.blocks <= 1) throw;
      const std::size_t blocks = trunc.blocks - 1;
      trunc = truncate_at(g, std::move(trunc.eig), blocks, trunc.theta);
      ++prov.rank_reductions;
    }
  }
}

DtbResult dtb_unregularized(const ArrayDataSet& measured, const ArrayDataSet& reference) {
  DtbProvenance prov;
  prov.regularized = false;
  try {
    require_compatible(measured, reference);
  } catch (Error& e) {
    e.set_step(3);
    throw;
  }
  const double tau = measured.tau();
  const std::size_t count = measured.count();
  prov.n = measured.n();
  prov.blocks = measured.n();

  GramPair g = timed_step(prov, 1, "gramians", [&] { return assemble_gram_pair(measured); });
  GramPair g0 = timed_step(prov, 3, "reference gramians", [&] { return assemble_gram_pair(reference); });
  Rom romq = timed_step(prov, 5, "measured rom", [&] {
    Rom r = rom_full(g, tau);
    attach_factor(r);
    return r;
  });
  Rom rom0 = timed_step(prov, 5, "reference rom", [&] {
    Rom r = rom_full(g0, tau);
    attach_factor(r);
    return r;
  });
  SnapshotSet snaps =
      timed_step(prov, 6, "reference data", [&] { return first_order_snapshots(*rom0.factor, romq.b, tau, count); });
  std::vector<Matrix> d0 = reference_data(romq.b, snaps);
  std::vector<Matrix> born = timed_step(prov, 7, "perturbation", [&] {
    std::vector<Matrix> delta = perturbation_timestep(*rom0.factor, *romq.factor, tau, snaps);
    return born_output(romq, d0, delta);
  });
  ArrayDataSet out(tau, measured.physics(), std::move(born));
  ArrayDataSet ref_out(tau, measured.physics(), std::move(d0));
  return DtbResult{std::move(out), std::move(ref_out), std::move(romq), std::move(rom0), std::move(prov)};
}

}  // namespace romdtb
