#pragma once

#include <array>
#include <string>
#include <utility>

#include "apollon/enumeration.hpp"
#include "apollon/symbols.hpp"

namespace apollon {

// Sides of the scaled right triangle spanned by a tangent pair:
// delta^2 + gamma^2 = h^2 with h the bend sum.
struct TriangleTriple {
  Rat delta, gamma;
  Int h;

  friend bool operator==(const TriangleTriple& a, const TriangleTriple& b) {
    return a.delta == b.delta && a.gamma == b.gamma && a.h == b.h;
  }
};

// Fixed slot order of a frame: pairs (4,1) (4,2) (4,3) (1,2) (2,3) (3,1) of a
// DescartesConfig. Slot (i,j) holds delta = x_dot_i*b_j - x_dot_j*b_i and
// gamma likewise; reversing a pair negates delta and gamma and keeps h.
inline constexpr std::array<std::pair<int, int>, 6> kFrameSlots = {
    {{4, 1}, {4, 2}, {4, 3}, {1, 2}, {2, 3}, {3, 1}}};

struct Frame {
  std::array<TriangleTriple, 6> triples;

  friend bool operator==(const Frame& a, const Frame& b) { return a.triples == b.triples; }
};

// One Boyd reflection acts linearly on frames. delta_gamma acts on the delta
// vector and the gamma vector; h acts on the h vector. Both are involutions
// with entries in {-2,...,2}.
struct TransitionMatrix {
  int replaced = 0;
  std::array<std::array<int, 6>, 6> delta_gamma{};
  std::array<std::array<int, 6>, 6> h{};
};

// (b1*x2 - b2*x1, b1*y2 - b2*y1, b1 + b2); throws NotTangent when the
// Pythagorean identity fails.
TriangleTriple triple(const CircleSymbol& c1, const CircleSymbol& c2);

// The six triples of a configuration in kFrameSlots order.
Frame frame_of(const DescartesConfig& config);

// Frame of reflect(config, i), computed purely by integer linear combinations
// of the given frame. The config argument backs a cheap consistency check
// (slot h values must equal the config's pairwise bend sums).
Frame frame_transition(const Frame& frame, const DescartesConfig& config, int i);

// i in 1..4
const TransitionMatrix& transition_matrix_for(int i);

// The three matrices for replacing an inner circle (indices 2, 3, 4).
std::array<TransitionMatrix, 3> transition_matrices();

// True iff k divides 2B^2: then every triple in the gasket is integral.
// Throws StripUnsupported for B = 0.
bool integral_frames_predicate(const GasketKey& key);

// Plain-text reference dump of the three transition matrices: 6x6 integer
// grids, row-major, blocks separated by blank lines.
std::string matrix_reference_dump();

}  // namespace apollon
