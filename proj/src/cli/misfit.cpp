#include "romdtb/cli/misfit.hpp"

#include <cmath>
#include <iomanip>
#include <ostream>

namespace romdtb::cli {

MisfitReport compute_misfit(const ArrayDataSet& a, const ArrayDataSet& b) {
  require_compatible(a, b);
  MisfitReport r;
  r.per_k.reserve(a.count());
  double num = 0.0, den = 0.0;
  for (std::size_t k = 0; k < a.count(); ++k) {
    const Matrix diff = a[k] - b[k];
    const double e = frobenius_norm(diff);
    const double nb = frobenius_norm(b[k]);
    r.per_k.push_back(nb > 0.0 ? e / nb : e);
    r.max_entry_error = std::max(r.max_entry_error, max_abs(diff));
    num += e * e;
    den += nb * nb;
  }
  r.aggregate = den > 0.0 ? std::sqrt(num / den) : std::sqrt(num);
  return r;
}

nlohmann::json to_json(const MisfitReport& r) {
  nlohmann::json j;
  j["aggregate"] = r.aggregate;
  j["max_entry_error"] = r.max_entry_error;
  j["per_k"] = r.per_k;
  j["tail_mass"] = r.tail_mass ? nlohmann::json(*r.tail_mass) : nlohmann::json(nullptr);
  return j;
}

void write_misfit_csv(std::ostream& out, const MisfitReport& r) {
  out << "k,relative_misfit\n" << std::setprecision(17);
  for (std::size_t k = 0; k < r.per_k.size(); ++k) out << k << ',' << r.per_k[k] << '\n';
}

}  // namespace romdtb::cli
