#include "romdtb/rom/rom.hpp"

#include <cmath>

#include "romdtb/errors.hpp"
#include "romdtb/linalg/chebyshev.hpp"
#include "romdtb/linalg/cholesky.hpp"
#include "romdtb/linalg/eigen.hpp"
#include "romdtb/linalg/lanczos.hpp"

namespace romdtb {

Rom rom_full(const ArrayDataSet& d) { return rom_full(assemble_gram_pair(d), d.tau()); }

Rom rom_full(const GramPair& g, double tau) {
  const std::size_t m = g.m;
  BlockedMatrix r;
  try {
    r = block_cholesky_full(g.mass);
  } catch (const BreakdownError& e) {
    throw IndefiniteGramian(
        "data Gramian is not positive definite at block " + std::to_string(e.block_index()) +
            "; use the regularized (truncated) path",
        e.block_index());
  }
  const Matrix& rm = r.entries();
  // P = R^{-T} S R^{-1}
  Matrix x = solve_upper_transpose(rm, g.stiffness.entries());
  Matrix p = solve_upper_transpose(rm, x.transpose()).transpose();

  Rom rom;
  rom.kind = RomKind::kFull;
  rom.tau = tau;
  rom.propagator = BlockedMatrix::project(symmetrized(p), m, Structure::kBlockTridiagonal);
  rom.b = rm.columns(0, m);
  rom.blocks = g.n;
  return rom;
}

Rom rom_projected(const Matrix& sfrak, const Matrix& sfrak_inv, const Matrix& scal, const Matrix& e1, double tau) {
  const std::size_t m = e1.cols();
  Matrix a = symmetrized(matmul(sfrak_inv, matmul(scal, sfrak_inv)));
  Matrix b0 = matmul(sfrak, e1);
  LanczosResult lz = block_lanczos(a, b0);

  Rom rom;
  rom.kind = RomKind::kRegularized;
  rom.tau = tau;
  rom.propagator = std::move(lz.t);
  rom.b = Matrix(a.rows(), m);
  rom.b.set_block(0, 0, lz.r0);
  rom.blocks = a.rows() / m;
  rom.basis_u = std::move(lz.u);
  return rom;
}

Rom rom_regularized(const ArrayDataSet& d, const TruncationSpec& spec) {
  GramPair g = assemble_gram_pair(d);
  return rom_regularized(spectral_truncate(g, spec), d.tau());
}

Rom rom_regularized(const Truncation& t, double tau) {
  const std::size_t zm = t.sigma2.size();
  std::vector<double> s(zm), s_inv(zm);
  for (std::size_t i = 0; i < zm; ++i) {
    s[i] = std::sqrt(t.sigma2[i]);
    s_inv[i] = 1.0 / s[i];
  }
  Rom rom = rom_projected(Matrix::diagonal(s), Matrix::diagonal(s_inv), t.scal, t.e1, tau);
  rom.theta = t.theta;
  rom.tail_mass = t.tail_mass;
  return rom;
}

BlockedMatrix stiffness_form(const Rom& rom) {
  Matrix a = Matrix::identity(rom.dim()) - rom.propagator.entries();
  a *= 2.0 / (rom.tau * rom.tau);
  return BlockedMatrix(std::move(a), rom.m(), Structure::kBlockTridiagonal);
}

BlockedMatrix propagator_factor(const Rom& rom) {
  if (!(rom.tau > 0.0)) throw ValidationError("ROM sampling interval must be positive");
  return block_cholesky_tridiag(stiffness_form(rom));
}

void attach_factor(Rom& rom) { rom.factor = propagator_factor(rom); }

std::vector<Matrix> rom_synthesize(const Rom& rom, std::size_t count) {
  std::vector<Matrix> snaps = chebyshev_sequence(rom.propagator, rom.b, count);
  std::vector<Matrix> out;
  out.reserve(count);
  for (const Matrix& x : snaps) out.push_back(symmetrized(matmul_tn(rom.b, x)));
  return out;
}

ArrayDataSet rom_synthesize_data(const Rom& rom, std::size_t count, Physics physics) {
  std::vector<Matrix> d = rom_synthesize(rom, count);
  for (const Matrix& dk : d)
    if (!all_finite(dk)) throw NumericalError("ROM data synthesis produced non-finite values");
  return ArrayDataSet(rom.tau, physics, std::move(d));
}

std::vector<double> propagator_spectrum(const Rom& rom) { return sym_eig_desc(rom.propagator).eigenvalues; }

}  // namespace romdtb
