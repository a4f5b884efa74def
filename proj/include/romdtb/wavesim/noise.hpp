#pragma once

#include <cstdint>

#include "romdtb/wavesim/dataset.hpp"

namespace romdtb {

/// Adds i.i.d. Gaussian noise with std (percent/100) * max_k max_rs |D_k|
/// to every entry, then symmetrizes each D_k. Seeded and reproducible.
ArrayDataSet add_noise(const ArrayDataSet& d, double percent, std::uint64_t seed);

}  // namespace romdtb
