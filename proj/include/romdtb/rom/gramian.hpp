#pragma once

#include <cstddef>

#include "romdtb/linalg/blocked_matrix.hpp"
#include "romdtb/wavesim/dataset.hpp"

namespace romdtb {

struct GramPair {
  BlockedMatrix mass;       // M, nm x nm
  BlockedMatrix stiffness;  // S, nm x nm
  std::size_t m = 0;
  std::size_t n = 0;
};

/// M_ij = (D_{i+j-2} + D_{|i-j|}) / 2, 1-based block indices.
BlockedMatrix assemble_mass(const ArrayDataSet& d);
/// S_ij = (D_{i+j-1} + D_{|j-i+1|} + D_{|j-i-1|} + D_{|j+i-3|}) / 4.
BlockedMatrix assemble_stiffness(const ArrayDataSet& d);

GramPair assemble_gram_pair(const ArrayDataSet& d);

}  // namespace romdtb
