#pragma once

#include <utility>

#include "apollon/numerics.hpp"

namespace apollon {

// Bends of four pairwise tangent circles; an enclosing circle carries a
// negative bend.
struct BendQuadruple {
  Int a, b, c, d;

  bool valid() const;
};

// 2(a^2+b^2+c^2+d^2) = (a+b+c+d)^2, exactly.
bool descartes_holds(const Int& a, const Int& b, const Int& c, const Int& d);

// The second solution d' = 2(a+b+c) - d of the Descartes relation for the
// fixed tangent triple (a,b,c). Throws InvalidQuadruple if (a,b,c,d) does not
// satisfy the relation.
Int boyd_dual(const Int& a, const Int& b, const Int& c, const Int& d);

// Both integer bends tangent to the mutually tangent triple (a,b,c),
// ascending. Throws NegativeDiscriminant if ab+bc+ca < 0 and NotIntegral if
// it is not a perfect square.
std::pair<Int, Int> fourth_bends(const Int& a, const Int& b, const Int& c);

}  // namespace apollon
