#include "romdtb/wavesim/grid.hpp"

#include "romdtb/errors.hpp"

namespace romdtb {

void Grid::validate() const {
  if (nx < 2 || nz < 2) throw ValidationError("grid needs at least 2 x 2 nodes");
  if (!(hx > 0.0) || !(hz > 0.0)) throw ValidationError("grid spacings must be positive");
}

}  // namespace romdtb
