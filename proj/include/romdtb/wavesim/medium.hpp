#pragma once

#include <cstddef>
#include <variant>
#include <vector>

#include "romdtb/wavesim/dataset.hpp"
#include "romdtb/wavesim/grid.hpp"

namespace romdtb {

/// Acoustic medium on a node grid: wave speed c and impedance sigma.
/// The reflectivity is q = ln(sigma / sigma_ref).
struct AcousticMedium {
  Grid grid;
  std::vector<double> c;
  std::vector<double> sigma;
  double sigma_ref = 1.0;

  static AcousticMedium homogeneous(const Grid& g, double c, double sigma);

  std::vector<double> q() const;
  double max_speed() const;
  void validate() const;

  /// Same speeds, sigma = sigma_ref * exp(eps * q).
  AcousticMedium with_scaled_reflectivity(double eps) const;
  AcousticMedium reference() const { return with_scaled_reflectivity(0.0); }
};

/// Elastic medium: P and S speeds and P impedance. gamma = (cs/cp)^2,
/// q = ln(sigma_p / sigma_ref).
struct ElasticMedium {
  Grid grid;
  std::vector<double> cp;
  std::vector<double> cs;
  std::vector<double> sigma_p;
  double sigma_ref = 1.0;

  static ElasticMedium homogeneous(const Grid& g, double cp, double cs, double sigma_p);

  std::vector<double> q() const;
  std::vector<double> gamma() const;
  double max_speed() const;
  void validate() const;

  ElasticMedium with_scaled_reflectivity(double eps) const;
  ElasticMedium reference() const { return with_scaled_reflectivity(0.0); }
};

using Medium = std::variant<AcousticMedium, ElasticMedium>;

const Grid& grid_of(const Medium& m);
Physics physics_of(const Medium& m);
double max_speed(const Medium& m);
void validate(const Medium& m);
Medium with_scaled_reflectivity(const Medium& m, double eps);
Medium reference_of(const Medium& m);

/// Grow the grid by the given number of nodes on the left, right and
/// bottom, replicating edge values.
Medium pad(const Medium& m, std::size_t left, std::size_t right, std::size_t bottom);

}  // namespace romdtb
