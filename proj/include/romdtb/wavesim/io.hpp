#pragma once

#include <cstddef>
#include <filesystem>
#include <iosfwd>
#include <map>
#include <string>
#include <vector>

#include "romdtb/wavesim/dataset.hpp"
#include "romdtb/wavesim/medium.hpp"

namespace romdtb {

/// ADF1: magic "ADF1", u32 m, u32 twice_n, f64 tau, u8 physics, then
/// twice_n*m*m little-endian f64 values, k-major then row-major.
void write_adf1(std::ostream& out, const ArrayDataSet& d);
ArrayDataSet read_adf1(std::istream& in);
void write_adf1(const std::filesystem::path& path, const ArrayDataSet& d);
ArrayDataSet read_adf1(const std::filesystem::path& path);

/// Medium file: text header ending in "end_header", then one block of
/// nx*nz little-endian f64 values per listed field (rows along depth).
///
///   ROMDTB-MEDIUM 1
///   physics acoustic|elastic
///   nx <int>
///   nz <int>
///   hx <real>
///   hz <real>
///   sigma_ref <real>
///   fields c sigma            (acoustic) | cp cs sigma_p (elastic)
///   end_header
void write_medium(const std::filesystem::path& path, const Medium& m);
Medium read_medium(const std::filesystem::path& path);
void write_medium(std::ostream& out, const Medium& m);
Medium read_medium(std::istream& in);

/// Gather for one source: header row, then one row per k with one column
/// per receiver channel. scale[r] multiplies column r (empty: all 1).
void write_gather_csv(std::ostream& out, const ArrayDataSet& d, std::size_t source,
                      const std::vector<double>& scale = {});

/// Gramian eigenvalues as "index,sigma2" rows.
void write_spectrum_csv(std::ostream& out, const std::vector<double>& eigenvalues);

}  // namespace romdtb
