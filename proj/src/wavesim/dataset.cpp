#include "romdtb/wavesim/dataset.hpp"

#include <algorithm>
#include <cmath>

#include "romdtb/errors.hpp"

namespace romdtb {

std::string to_string(Physics p) { return p == Physics::kElastic ? "elastic" : "acoustic"; }

Physics physics_from_string(const std::string& s) {
  if (s == "acoustic") return Physics::kAcoustic;
  if (s == "elastic") return Physics::kElastic;
  throw ValidationError("unknown physics '" + s + "' (expected acoustic or elastic)");
}

ArrayDataSet::ArrayDataSet(double tau, Physics physics, std::vector<Matrix> d)
    : tau_(tau), physics_(physics), d_(std::move(d)) {
  if (d_.empty() || d_.size() % 2 != 0) throw ShapeError("array data needs an even, nonzero number of records");
  if (!(tau_ > 0.0)) throw ValidationError("sampling interval tau must be positive");
  m_ = d_[0].rows();
  if (m_ == 0) throw ShapeError("array data needs at least one channel");
  for (const Matrix& dk : d_)
    if (dk.rows() != m_ || dk.cols() != m_) throw ShapeError("array data records must all be m x m");
}

double ArrayDataSet::max_abs() const {
  double s = 0.0;
  for (const Matrix& dk : d_) s = std::max(s, romdtb::max_abs(dk));
  return s;
}

double ArrayDataSet::asymmetry() const {
  double s = 0.0;
  for (const Matrix& dk : d_) s = std::max(s, romdtb::asymmetry(dk));
  return s;
}

void ArrayDataSet::symmetrize() {
  for (Matrix& dk : d_) dk = symmetrized(dk);
}

ArrayDataSet ArrayDataSet::head(std::size_t n_new) const {
  if (n_new == 0 || n_new > n()) throw ShapeError("head: n out of range");
  ArrayDataSet out(tau_, physics_, std::vector<Matrix>(d_.begin(), d_.begin() + 2 * n_new));
  out.geometry_hash = geometry_hash;
  out.noise = noise;
  return out;
}

void require_compatible(const ArrayDataSet& a, const ArrayDataSet& b) {
  if (a.m() != b.m() || a.count() != b.count())
    throw ShapeError("datasets differ in shape (m " + std::to_string(a.m()) + " vs " + std::to_string(b.m()) +
                     ", records " + std::to_string(a.count()) + " vs " + std::to_string(b.count()) + ")");
  if (std::abs(a.tau() - b.tau()) > 1e-12 * std::max(a.tau(), b.tau()))
    throw ShapeError("datasets differ in sampling interval");
}

ArrayDataSet difference(const ArrayDataSet& a, const ArrayDataSet& b) {
  require_compatible(a, b);
  std::vector<Matrix> d;
  d.reserve(a.count());
  for (std::size_t k = 0; k < a.count(); ++k) d.push_back(a[k] - b[k]);
  return ArrayDataSet(a.tau(), a.physics(), std::move(d));
}

double aggregate_misfit(const ArrayDataSet& a, const ArrayDataSet& b) {
  require_compatible(a, b);
  double num = 0.0, den = 0.0;
  for (std::size_t k = 0; k < a.count(); ++k) {
    num += std::pow(frobenius_norm(a[k] - b[k]), 2);
    den += std::pow(frobenius_norm(b[k]), 2);
  }
  return den > 0.0 ? std::sqrt(num / den) : std::sqrt(num);
}

double scattered_misfit(const ArrayDataSet& a, const ArrayDataSet& b, const ArrayDataSet& background) {
  require_compatible(a, b);
  require_compatible(b, background);
  double num = 0.0, den = 0.0;
  for (std::size_t k = 0; k < a.count(); ++k) {
    num += std::pow(frobenius_norm(a[k] - b[k]), 2);
    den += std::pow(frobenius_norm(b[k] - background[k]), 2);
  }
  return den > 0.0 ? std::sqrt(num / den) : std::sqrt(num);
}

}  // namespace romdtb
