#pragma once

#include <array>
#include <vector>

#include "apollon/enumeration.hpp"
#include "apollon/numerics.hpp"

namespace apollon {

// A circle as the formal fraction (x_dot, y_dot)/bend: center is
// (x_dot/bend, y_dot/bend), radius 1/|bend|.
struct CircleSymbol {
  Rat x_dot, y_dot;
  Int bend;

  Rat center_x() const { return x_dot / Rat(bend); }
  Rat center_y() const { return y_dot / Rat(bend); }
};

bool operator==(const CircleSymbol& a, const CircleSymbol& b);
bool operator!=(const CircleSymbol& a, const CircleSymbol& b);
// orders by (bend, x_dot, y_dot)
bool operator<(const CircleSymbol& a, const CircleSymbol& b);

// Four pairwise tangent circles, 1-indexed through at().
struct DescartesConfig {
  std::array<CircleSymbol, 4> circles;

  const CircleSymbol& at(int i) const { return circles.at(static_cast<size_t>(i) - 1); }
};

// Exact tangency: (b1*x2 - b2*x1)^2 + (b1*y2 - b2*y1)^2 = (b1 + b2)^2.
// The same identity covers internal tangency with the enclosing circle via
// its negative bend. Two copies of one circle are not tangent.
bool tangent(const CircleSymbol& c1, const CircleSymbol& c2);

// Descartes relation on the bends plus pairwise tangency.
bool valid_config(const DescartesConfig& config);

// The five principal circles B0..B4 in the coordinate system centered at the
// enclosing circle. Throws StripUnsupported for B = 0.
std::array<CircleSymbol, 5> principal_symbols(const GasketKey& key);

// Replaces circle i (1..4) by its Boyd-dual: each of bend, x_dot, y_dot maps
// to twice the sum of the other three minus itself.
DescartesConfig reflect(const DescartesConfig& config, int i);

struct Packing {
  GasketKey key;
  Int max_bend;
  std::vector<CircleSymbol> circles;     // sorted, deduplicated
  std::vector<DescartesConfig> configs;  // sorted by canonical circle order
};

// Breadth-first closure of the two root configurations (B0,B1,B2,B3) and
// (B0,B1,B2,B4) under reflect, pruning reflections whose new bend exceeds
// max_bend. Requires max_bend >= B+k+n+2mu; throws StripUnsupported for B=0.
Packing generate(const GasketKey& key, const Int& max_bend);

}  // namespace apollon
