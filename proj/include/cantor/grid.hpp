#pragma once

#include <cstdint>
#include <vector>

#include "cantor/geometry.hpp"

namespace cantor {

// Path through the four-map corner IFS: digit d picks the child with
// horizontal offset (d & 1) and vertical offset (d >> 1), each offset being
// 2/3 of the current side; the side shrinks by 1/3 per step. An address of
// length L names one square at level L + 1 (the root is level 1).
struct Address {
  std::vector<uint8_t> digits;

  int level() const { return static_cast<int>(digits.size()) + 1; }
};

GridSquare square_for_address(const GridSquare& root, const Address& addr);

// Exact tally of the 4^(level-1) corner-IFS squares of one level against a
// region. inside + straddle + outside == total always.
struct CoverageCount {
  int level = 1;
  mpz_class total, inside, straddle, outside;

  Rational inside_fraction() const { return Rational(inside, total); }
};

bool operator==(const CoverageCount& a, const CoverageCount& b);

struct CountOptions {
  int max_level = 14;     // engine cap; 4^13 leaf squares, reached only on the straddle frontier
  bool parallel = false;  // partition the root's four children across threads
};

// Pruned exact count: a square proven inside (or outside) contributes its
// whole subtree without further descent, so only the straddle frontier is
// ever expanded. Identical to exhaustive enumeration by construction.
CoverageCount count_coverage(const GridSquare& root, const Region& region, int level,
                             const CountOptions& options = {});

// Exhaustive enumeration of every address, no pruning. Oracle for
// count_coverage; capped because it visits all 4^(level-1) squares.
CoverageCount brute_force_coverage(const GridSquare& root, const Region& region, int level,
                                   int cap = 8);

}  // namespace cantor
