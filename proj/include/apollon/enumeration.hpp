#pragma once

#include <optional>
#include <string>
#include <vector>

#include "apollon/numerics.hpp"

namespace apollon {

enum class SymmetryClass { Strip, Window, Odd, Even, EvenStar, Skew };

// "strip", "window", "odd", "even", "even*", "skew"
std::string to_string(SymmetryClass s);

// Canonical identity of a gasket: B^2 + mu^2 = k*n with 3mu^2 <= B^2 and
// 2mu <= k <= n. The strip is (0,0,0,1).
struct GasketKey {
  Int B, mu, k, n;

  bool is_strip() const { return B == 0; }

  // geometry of the strip preimage; require B >= 1
  Rat rho() const;  // scaled strip width, k/B^2
  Rat h() const;    // scaled strip offset, 2mu/B^2
  Int m() const;    // integer offset numerator, 2mu

  friend bool operator==(const GasketKey& a, const GasketKey& b) {
    return a.B == b.B && a.mu == b.mu && a.k == b.k && a.n == b.n;
  }
};

// Description of the first violated key invariant, or nullopt if the key is
// valid. Reducible keys (gcd > 1) are valid; irreducibility is a property of
// what solve_master emits, not of the type.
std::optional<std::string> key_violation(const GasketKey& key);

// The five largest bends: b0 = -B and b1 <= b2 <= b3 <= b4.
struct BendQuintet {
  Int b0, b1, b2, b3, b4;

  friend bool operator==(const BendQuintet& a, const BendQuintet& b) {
    return a.b0 == b.b0 && a.b1 == b.b1 && a.b2 == b.b2 && a.b3 == b.b3 && a.b4 == b.b4;
  }
};

struct GasketRecord {
  GasketKey key;
  BendQuintet quintet;
  Rat shift;
  SymmetryClass symmetry;
  bool reducible = false;
};

// All irreducible keys with root bend B, ordered by mu ascending then k
// ascending. B = 0 yields exactly the strip key.
std::vector<GasketKey> solve_master(const Int& B);

// (-B, B+k, B+n, B+k+n-2mu, B+k+n+2mu)
BendQuintet quintet(const GasketKey& key);

// Inverse of quintet. Throws MasterEquationViolation when the five bends are
// not the quintet of any integral gasket.
GasketKey key_from_quintet(const BendQuintet& q);

// Total classification; precedence strip > window > odd > even > even* > skew.
SymmetryClass classify(const GasketKey& key);

// 2mu/k reduced, in [0,1]; 0 for the strip.
Rat shift_of(const GasketKey& key);

// Records for every irreducible key with root bend 0..B_max, in canonical
// (B, mu, k) order. With irreducible_only = false, also every multiple
// lambda >= 2 of each irreducible key with B >= 1 whose root bend stays
// within B_max, flagged reducible; multiples inherit shift and symmetry from
// the primitive. Strip multiples are not enumerated (there would be one per
// lambda with no bend bound to stop them).
//
// threads = 0 picks a hardware-based default; the result does not depend on
// the thread count.
std::vector<GasketRecord> enumerate_records(const Int& B_max, bool irreducible_only = true,
                                            unsigned threads = 0);

}  // namespace apollon
