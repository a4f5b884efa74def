#include "romdtb/wavesim/medium.hpp"

#include <algorithm>
#include <cmath>
#include <string>

#include "romdtb/errors.hpp"

namespace romdtb {

namespace {

void check_field(const Grid& g, const std::vector<double>& f, const char* name) {
  if (f.size() != g.size())
    throw ValidationError(std::string("field ") + name + " has " + std::to_string(f.size()) + " values, grid has " +
                          std::to_string(g.size()));
  for (double v : f)
    if (!std::isfinite(v) || !(v > 0.0)) throw ValidationError(std::string("field ") + name + " must be positive and finite");
}

std::vector<double> log_ratio(const std::vector<double>& s, double ref) {
  std::vector<double> q(s.size());
  for (std::size_t i = 0; i < s.size(); ++i) q[i] = std::log(s[i] / ref);
  return q;
}

std::vector<double> scaled_impedance(const std::vector<double>& s, double ref, double eps) {
  std::vector<double> out(s.size());
  for (std::size_t i = 0; i < s.size(); ++i) out[i] = ref * std::exp(eps * std::log(s[i] / ref));
  return out;
}

std::vector<double> pad_field(const Grid& g, const std::vector<double>& f, std::size_t left, std::size_t right,
                              std::size_t bottom) {
  const std::size_t nx = g.nx + left + right;
  const std::size_t nz = g.nz + bottom;
  std::vector<double> out(nx * nz);
  for (std::size_t iz = 0; iz < nz; ++iz) {
    const std::size_t sz = std::min(iz, g.nz - 1);
    for (std::size_t ix = 0; ix < nx; ++ix) {
      const std::size_t sx = std::clamp<long>(long(ix) - long(left), 0, long(g.nx) - 1);
      out[iz * nx + ix] = f[sz * g.nx + sx];
    }
  }
  return out;
}

}  // namespace

AcousticMedium AcousticMedium::homogeneous(const Grid& g, double c, double sigma) {
  return AcousticMedium{g, std::vector<double>(g.size(), c), std::vector<double>(g.size(), sigma), sigma};
}

std::vector<double> AcousticMedium::q() const { return log_ratio(sigma, sigma_ref); }

double AcousticMedium::max_speed() const { return *std::max_element(c.begin(), c.end()); }

void AcousticMedium::validate() const {
  grid.validate();
  check_field(grid, c, "c");
  check_field(grid, sigma, "sigma");
  if (!(sigma_ref > 0.0)) throw ValidationError("sigma_ref must be positive");
}

AcousticMedium AcousticMedium::with_scaled_reflectivity(double eps) const {
  AcousticMedium out = *this;
  out.sigma = scaled_impedance(sigma, sigma_ref, eps);
  return out;
}

ElasticMedium ElasticMedium::homogeneous(const Grid& g, double cp, double cs, double sigma_p) {
  return ElasticMedium{g, std::vector<double>(g.size(), cp), std::vector<double>(g.size(), cs),
                       std::vector<double>(g.size(), sigma_p), sigma_p};
}

std::vector<double> ElasticMedium::q() const { return log_ratio(sigma_p, sigma_ref); }

std::vector<double> ElasticMedium::gamma() const {
  std::vector<double> g(cp.size());
  for (std::size_t i = 0; i < cp.size(); ++i) g[i] = (cs[i] / cp[i]) * (cs[i] / cp[i]);
  return g;
}

double ElasticMedium::max_speed() const { return *std::max_element(cp.begin(), cp.end()); }

void ElasticMedium::validate() const {
  grid.validate();
  check_field(grid, cp, "cp");
  check_field(grid, cs, "cs");
  check_field(grid, sigma_p, "sigma_p");
  if (!(sigma_ref > 0.0)) throw ValidationError("sigma_ref must be positive");
  for (std::size_t i = 0; i < cp.size(); ++i)
    if (!(cs[i] < cp[i])) throw ValidationError("elastic medium needs 0 < gamma = (cs/cp)^2 < 1 everywhere");
}

ElasticMedium ElasticMedium::with_scaled_reflectivity(double eps) const {
  ElasticMedium out = *this;
  out.sigma_p = scaled_impedance(sigma_p, sigma_ref, eps);
  return out;
}

const Grid& grid_of(const Medium& m) {
  return std::visit([](const auto& x) -> const Grid& { return x.grid; }, m);
}

Physics physics_of(const Medium& m) {
  return std::holds_alternative<ElasticMedium>(m) ? Physics::kElastic : Physics::kAcoustic;
}

double max_speed(const Medium& m) {
  return std::visit([](const auto& x) { return x.max_speed(); }, m);
}

void validate(const Medium& m) {
  std::visit([](const auto& x) { x.validate(); }, m);
}

Medium with_scaled_reflectivity(const Medium& m, double eps) {
  return std::visit([eps](const auto& x) -> Medium { return x.with_scaled_reflectivity(eps); }, m);
}

Medium reference_of(const Medium& m) { return with_scaled_reflectivity(m, 0.0); }

Medium pad(const Medium& m, std::size_t left, std::size_t right, std::size_t bottom) {
  const Grid& g = grid_of(m);
  Grid ng{g.nx + left + right, g.nz + bottom, g.hx, g.hz};
  auto pf = [&](const std::vector<double>& f) { return pad_field(g, f, left, right, bottom); };
  if (const auto* a = std::get_if<AcousticMedium>(&m)) return AcousticMedium{ng, pf(a->c), pf(a->sigma), a->sigma_ref};
  const auto& e = std::get<ElasticMedium>(m);
  return ElasticMedium{ng, pf(e.cp), pf(e.cs), pf(e.sigma_p), e.sigma_ref};
}

}  // namespace romdtb
