#include "romdtb/rom/gramian.hpp"

#include <cstdlib>

#include "romdtb/errors.hpp"

namespace romdtb {

namespace {

std::size_t iabs(long v) { return static_cast<std::size_t>(std::labs(v)); }

}  // namespace

BlockedMatrix assemble_mass(const ArrayDataSet& d) {
  const std::size_t m = d.m();
  const std::size_t n = d.n();
  if (d.count() < 2 * n - 1 || n == 0) throw ShapeError("mass assembly needs at least 2n-1 records");
  Matrix out(n * m, n * m);
  for (std::size_t a = 0; a < n; ++a)
    for (std::size_t b = a; b < n; ++b) {
      Matrix blk = d[a + b] + d[iabs(long(a) - long(b))];
      blk *= 0.5;
      out.set_block(a * m, b * m, blk);
      if (a != b) out.set_block(b * m, a * m, blk.transpose());
    }
  return BlockedMatrix(std::move(out), m, Structure::kSymmetric);
}

BlockedMatrix assemble_stiffness(const ArrayDataSet& d) {
  const std::size_t m = d.m();
  const std::size_t n = d.n();
  if (d.count() < 2 * n || n == 0) throw ShapeError("stiffness assembly needs 2n records");
  Matrix out(n * m, n * m);
  for (std::size_t a = 0; a < n; ++a)
    for (std::size_t b = a; b < n; ++b) {
      const long i = long(a) + 1, j = long(b) + 1;
      Matrix blk = d[iabs(i + j - 1)] + d[iabs(j - i + 1)];
      blk += d[iabs(j - i - 1)];
      blk += d[iabs(j + i - 3)];
      blk *= 0.25;
      out.set_block(a * m, b * m, blk);
      if (a != b) out.set_block(b * m, a * m, blk.transpose());
    }
  return BlockedMatrix(std::move(out), m, Structure::kSymmetric);
}

GramPair assemble_gram_pair(const ArrayDataSet& d) {
  return GramPair{assemble_mass(d), assemble_stiffness(d), d.m(), d.n()};
}

}  // namespace romdtb
