#include "cantor/grid.hpp"

#include <future>
#include <stdexcept>

namespace cantor {

namespace {

mpz_class pow4(int e) {
  mpz_class r;
  mpz_ui_pow_ui(r.get_mpz_t(), 4, static_cast<unsigned long>(e));
  return r;
}

GridSquare child_square(const GridSquare& sq, int digit) {
  const Rational step = sq.side * Rational(2, 3);
  const Rational side = sq.side / 3;
  Rational x = sq.x0;
  Rational y = sq.y0;
  if (digit & 1) x += step;
  if (digit & 2) y += step;
  return GridSquare{std::move(x), std::move(y), side};
}

struct Tally {
  mpz_class inside, straddle, outside;

  void add(const Tally& o) {
    inside += o.inside;
    straddle += o.straddle;
    outside += o.outside;
  }
};

void count_rec(const GridSquare& sq, const Region& region, int level_now, int target, Tally& t) {
  switch (classify_square(sq, region)) {
    case Classification::kInside:
      t.inside += pow4(target - level_now);
      return;
    case Classification::kOutside:
      t.outside += pow4(target - level_now);
      return;
    case Classification::kStraddles:
      break;
  }
  if (level_now == target) {
    t.straddle += 1;
    return;
  }
  for (int d = 0; d < 4; ++d) count_rec(child_square(sq, d), region, level_now + 1, target, t);
}

}  // namespace

GridSquare square_for_address(const GridSquare& root, const Address& addr) {
  validate(root);
  GridSquare sq = root;
  for (uint8_t d : addr.digits) {
    if (d > 3) throw std::invalid_argument("Address: digit out of range");
    sq = child_square(sq, d);
  }
  return sq;
}

bool operator==(const CoverageCount& a, const CoverageCount& b) {
  return a.level == b.level && a.total == b.total && a.inside == b.inside &&
         a.straddle == b.straddle && a.outside == b.outside;
}

CoverageCount count_coverage(const GridSquare& root, const Region& region, int level,
                             const CountOptions& options) {
  validate(root);
  validate(region);
  if (level < 1) throw std::invalid_argument("count_coverage: level must be >= 1");
  if (level > options.max_level)
    throw std::invalid_argument("count_coverage: level exceeds cap " +
                                std::to_string(options.max_level));

  Tally t;
  const Classification c = classify_square(root, region);
  if (c == Classification::kInside) {
    t.inside = pow4(level - 1);
  } else if (c == Classification::kOutside) {
    t.outside = pow4(level - 1);
  } else if (level == 1) {
    t.straddle = 1;
  } else if (options.parallel) {
    // The four children are independent; exact integer addition makes the
    // merged result identical to the sequential one.
    std::future<Tally> parts[4];
    for (int d = 0; d < 4; ++d) {
      parts[d] = std::async(std::launch::async, [&, d] {
        Tally part;
        count_rec(child_square(root, d), region, 2, level, part);
        return part;
      });
    }
    for (auto& part : parts) t.add(part.get());
  } else {
    for (int d = 0; d < 4; ++d) count_rec(child_square(root, d), region, 2, level, t);
  }

  CoverageCount out;
  out.level = level;
  out.total = pow4(level - 1);
  out.inside = std::move(t.inside);
  out.straddle = std::move(t.straddle);
  out.outside = std::move(t.outside);
  return out;
}

CoverageCount brute_force_coverage(const GridSquare& root, const Region& region, int level,
                                   int cap) {
  validate(root);
  validate(region);
  if (level < 1) throw std::invalid_argument("brute_force_coverage: level must be >= 1");
  if (level > cap)
    throw std::invalid_argument("brute_force_coverage: level exceeds cap " + std::to_string(cap));

  CoverageCount out;
  out.level = level;
  out.total = pow4(level - 1);

  Address addr;
  addr.digits.assign(static_cast<size_t>(level - 1), 0);
  while (true) {
    switch (classify_square(square_for_address(root, addr), region)) {
      case Classification::kInside: out.inside += 1; break;
      case Classification::kOutside: out.outside += 1; break;
      case Classification::kStraddles: out.straddle += 1; break;
    }
    // odometer increment over {0,1,2,3}^(level-1)
    size_t i = addr.digits.size();
    while (i > 0 && addr.digits[i - 1] == 3) addr.digits[--i] = 0;
    if (i == 0) break;
    ++addr.digits[i - 1];
  }
  return out;
}

}  // namespace cantor
