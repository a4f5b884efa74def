#include "romdtb/wavesim/presets.hpp"

#include <cmath>

#include "romdtb/errors.hpp"

namespace romdtb {

namespace {

struct Inclusion {
  double x0, z0;     // left end, depth at the left end
  double length;     // horizontal extent
  double slope;      // dz / dx
  double thickness;
  double q;          // reflectivity inside
};

// Impedance field sigma_ref * exp(q) with thin tilted inclusions.
std::vector<double> impedance(const Grid& g, double sigma_ref, const std::vector<Inclusion>& incl, double scale) {
  std::vector<double> s(g.size(), sigma_ref);
  for (std::size_t iz = 0; iz < g.nz; ++iz)
    for (std::size_t ix = 0; ix < g.nx; ++ix) {
      const double x = double(ix) * g.hx, z = double(iz) * g.hz;
      double q = 0.0;
      for (const Inclusion& in : incl) {
        if (x < in.x0 || x > in.x0 + in.length) continue;
        const double zc = in.z0 + in.slope * (x - in.x0);
        if (std::abs(z - zc) <= 0.5 * in.thickness) q += in.q;
      }
      s[g.index(ix, iz)] = sigma_ref * std::exp(scale * q);
    }
  return s;
}

Grid preset_grid(const PresetParams& p, double depth) {
  const double aperture = double(p.m_a - 1) * p.spacing;
  const double margin = 0.25;
  Grid g;
  g.hx = g.hz = p.h;
  g.nx = std::size_t(std::ceil((aperture + 2.0 * margin) / p.h)) + 1;
  g.nz = std::size_t(std::ceil(depth / p.h)) + 1;
  return g;
}

SimulationOptions preset_options(const PresetParams& p) {
  SimulationOptions o;
  o.tau = p.tau;
  o.n = p.n;
  o.substeps = p.substeps;
  return o;
}

void check_params(const PresetParams& p) {
  if (p.m_a == 0) throw ValidationError("m_a must be positive");
  if (p.n == 0) throw ValidationError("n must be positive");
  if (!(p.tau > 0.0)) throw ValidationError("tau must be positive");
  if (!(p.spacing > 0.0) || !(p.h > 0.0) || !(p.speed > 0.0)) throw ValidationError("preset lengths must be positive");
}

}  // namespace

std::vector<std::string> preset_names() {
  return {"acoustic-two-inclusions", "elastic-two-inclusions", "homogeneous-acoustic"};
}

PresetParams default_params(const std::string& name) {
  PresetParams p;
  if (name == "elastic-two-inclusions") {
    p.m_a = 8;
    p.spacing = 0.06;
    p.h = 0.015;
    p.tau = 0.017;  // resolves the P band of the width-0.03 sensors
    p.n = 60;
    p.speed = 1.0;
  } else if (name != "acoustic-two-inclusions" && name != "homogeneous-acoustic") {
    throw ValidationError("unknown preset '" + name + "'");
  }
  return p;
}

Preset make_preset(const std::string& name) { return make_preset(name, default_params(name)); }

Preset make_preset(const std::string& name, const PresetParams& p) {
  check_params(p);
  Preset out;
  out.name = name;
  out.options = preset_options(p);
  const double depth = 1.2;
  const Grid g = preset_grid(p, depth);
  const double xc = 0.5 * g.width();
  const double aperture = double(p.m_a - 1) * p.spacing;
  out.sensors = SensorGeometry::uniform(p.m_a, p.spacing, xc, p.width);

  // two thin inclusions below the array, the deeper one tilted
  const std::vector<Inclusion> incl{
      {xc - 0.45 * aperture - 0.1, 0.45, 0.6 * aperture + 0.2, 0.0, 2.0 * p.h, std::log(1.8)},
      {xc - 0.3 * aperture, 0.85, 0.9 * aperture + 0.2, 0.12, 2.0 * p.h, std::log(2.2)},
  };

  if (name == "acoustic-two-inclusions" || name == "homogeneous-acoustic") {
    AcousticMedium m = AcousticMedium::homogeneous(g, p.speed, 1.0);
    if (name == "acoustic-two-inclusions") m.sigma = impedance(g, 1.0, incl, p.contrast);
    out.medium = m;
  } else if (name == "elastic-two-inclusions") {
    ElasticMedium m = ElasticMedium::homogeneous(g, 2.0 * p.speed, p.speed, 1.0);
    m.sigma_p = impedance(g, 1.0, incl, p.contrast);
    out.medium = m;
  } else {
    throw ValidationError("unknown preset '" + name + "'");
  }
  return out;
}

}  // namespace romdtb
