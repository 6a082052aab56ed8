#include "apollon/frames.hpp"

#include <cstdlib>
#include <sstream>
#include <stdexcept>

#include "apollon/errors.hpp"

namespace apollon {

namespace {

// slot index and delta/gamma sign for the ordered pair (p,q)
std::pair<size_t, int> slot_of(int p, int q) {
  for (size_t s = 0; s < kFrameSlots.size(); ++s) {
    if (kFrameSlots[s].first == p && kFrameSlots[s].second == q) return {s, 1};
    if (kFrameSlots[s].first == q && kFrameSlots[s].second == p) return {s, -1};
  }
  throw std::logic_error("pair outside the frame slot table");
}

TransitionMatrix build_matrix(int replaced) {
  TransitionMatrix m;
  m.replaced = replaced;
  for (size_t row = 0; row < kFrameSlots.size(); ++row) {
    const auto [i, j] = kFrameSlots[row];
    if (i != replaced && j != replaced) {
      m.delta_gamma[row][row] = 1;
      m.h[row][row] = 1;
      continue;
    }
    // Replacing circle r rewrites slot (r,other) as minus itself plus twice
    // the slots pairing the two bystanders with the fixed endpoint.
    const int other = (i == replaced) ? j : i;
    int bystanders[2];
    int filled = 0;
    for (int t = 1; t <= 4; ++t) {
      if (t != replaced && t != other) bystanders[filled++] = t;
    }
    const auto add = [&](int coef, int p, int q) {
      const auto [col, sign] = slot_of(p, q);
      m.delta_gamma[row][col] += coef * sign;
      m.h[row][col] += coef;  // h is symmetric in the pair, no sign
    };
    add(-1, i, j);
    for (const int b : bystanders) {
      add(2, i == replaced ? b : i, j == replaced ? b : j);
    }
  }
  return m;
}

const std::array<TransitionMatrix, 4>& all_matrices() {
  static const std::array<TransitionMatrix, 4> matrices = {
      build_matrix(1), build_matrix(2), build_matrix(3), build_matrix(4)};
  return matrices;
}

}  // namespace

TriangleTriple triple(const CircleSymbol& c1, const CircleSymbol& c2) {
  TriangleTriple t{c2.x_dot * Rat(c1.bend) - c1.x_dot * Rat(c2.bend),
                   c2.y_dot * Rat(c1.bend) - c1.y_dot * Rat(c2.bend), c1.bend + c2.bend};
  const Rat h(t.h);
  if (t.delta * t.delta + t.gamma * t.gamma != h * h) {
    throw NotTangent("circle pair is not tangent, no triangle triple exists");
  }
  return t;
}

Frame frame_of(const DescartesConfig& config) {
  Frame frame;
  for (size_t s = 0; s < kFrameSlots.size(); ++s) {
    const auto [i, j] = kFrameSlots[s];
    // slot (i,j) carries delta/gamma oriented i before j
    frame.triples[s] = triple(config.at(j), config.at(i));
  }
  return frame;
}

Frame frame_transition(const Frame& frame, const DescartesConfig& config, int i) {
  if (i < 1 || i > 4) throw std::invalid_argument("reflection index must be in 1..4");
  for (size_t s = 0; s < kFrameSlots.size(); ++s) {
    const auto [p, q] = kFrameSlots[s];
    if (frame.triples[s].h != config.at(p).bend + config.at(q).bend) {
      throw std::invalid_argument("frame does not belong to the given configuration");
    }
  }
  const TransitionMatrix& m = transition_matrix_for(i);
  Frame out;
  for (size_t row = 0; row < 6; ++row) {
    Rat delta, gamma;
    Int h = 0;
    for (size_t col = 0; col < 6; ++col) {
      if (const int c = m.delta_gamma[row][col]; c != 0) {
        delta += Rat(c) * frame.triples[col].delta;
        gamma += Rat(c) * frame.triples[col].gamma;
      }
      if (const int c = m.h[row][col]; c != 0) h += c * frame.triples[col].h;
    }
    out.triples[row] = TriangleTriple{delta, gamma, h};
  }
  return out;
}

const TransitionMatrix& transition_matrix_for(int i) {
  if (i < 1 || i > 4) throw std::invalid_argument("reflection index must be in 1..4");
  return all_matrices()[static_cast<size_t>(i) - 1];
}

std::array<TransitionMatrix, 3> transition_matrices() {
  return {transition_matrix_for(2), transition_matrix_for(3), transition_matrix_for(4)};
}

bool integral_frames_predicate(const GasketKey& key) {
  if (const auto violation = key_violation(key)) throw std::invalid_argument(*violation);
  if (key.B == 0) throw StripUnsupported("the strip has no frames");
  const Int twice_b2 = 2 * key.B * key.B;
  return mpz_divisible_p(twice_b2.get_mpz_t(), key.k.get_mpz_t());
}

std::string matrix_reference_dump() {
  std::ostringstream out;
  bool first = true;
  for (const auto& m : transition_matrices()) {
    if (!first) out << "\n";
    first = false;
    for (const auto& row : m.delta_gamma) {
      for (size_t col = 0; col < row.size(); ++col) {
        if (col) out << " ";
        out << row[col];
      }
      out << "\n";
    }
  }
  return out.str();
}

}  // namespace apollon
