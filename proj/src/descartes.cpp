#include "apollon/descartes.hpp"

#include "apollon/errors.hpp"

namespace apollon {

bool BendQuadruple::valid() const { return descartes_holds(a, b, c, d); }

bool descartes_holds(const Int& a, const Int& b, const Int& c, const Int& d) {
  const Int s = a + b + c + d;
  return 2 * (a * a + b * b + c * c + d * d) == s * s;
}

Int boyd_dual(const Int& a, const Int& b, const Int& c, const Int& d) {
  if (!descartes_holds(a, b, c, d)) {
    throw InvalidQuadruple("bends (" + a.get_str() + "," + b.get_str() + "," + c.get_str() +
                           "," + d.get_str() + ") do not satisfy the Descartes relation");
  }
  return 2 * (a + b + c) - d;
}

std::pair<Int, Int> fourth_bends(const Int& a, const Int& b, const Int& c) {
  const Int disc = a * b + b * c + c * a;
  if (disc < 0) {
    throw NegativeDiscriminant("no tangent fourth circle: ab+bc+ca = " + disc.get_str());
  }
  const auto s = isqrt_exact(disc);
  if (!s) {
    throw NotIntegral("no integer fourth bend: ab+bc+ca = " + disc.get_str() +
                      " is not a perfect square");
  }
  const Int base = a + b + c;
  return {base - 2 * *s, base + 2 * *s};
}

}  // namespace apollon
