#include "apollon/symbols.hpp"

#include <algorithm>
#include <set>
#include <stdexcept>

#include "apollon/descartes.hpp"
#include "apollon/errors.hpp"

namespace apollon {

bool operator==(const CircleSymbol& a, const CircleSymbol& b) {
  return a.bend == b.bend && a.x_dot == b.x_dot && a.y_dot == b.y_dot;
}

bool operator!=(const CircleSymbol& a, const CircleSymbol& b) { return !(a == b); }

bool operator<(const CircleSymbol& a, const CircleSymbol& b) {
  if (a.bend != b.bend) return a.bend < b.bend;
  if (a.x_dot != b.x_dot) return a.x_dot < b.x_dot;
  return a.y_dot < b.y_dot;
}

bool tangent(const CircleSymbol& c1, const CircleSymbol& c2) {
  const Rat dx = c2.x_dot * Rat(c1.bend) - c1.x_dot * Rat(c2.bend);
  const Rat dy = c2.y_dot * Rat(c1.bend) - c1.y_dot * Rat(c2.bend);
  const Rat h = Rat(c1.bend + c2.bend);
  return dx * dx + dy * dy == h * h;
}

bool valid_config(const DescartesConfig& config) {
  const auto& c = config.circles;
  if (!descartes_holds(c[0].bend, c[1].bend, c[2].bend, c[3].bend)) return false;
  for (size_t i = 0; i < 4; ++i) {
    for (size_t j = i + 1; j < 4; ++j) {
      if (!tangent(c[i], c[j])) return false;
    }
  }
  return true;
}

std::array<CircleSymbol, 5> principal_symbols(const GasketKey& key) {
  if (const auto violation = key_violation(key)) throw std::invalid_argument(*violation);
  if (key.B == 0) throw StripUnsupported("the strip has no circle symbols");
  const Int &B = key.B, &mu = key.mu, &k = key.k, &n = key.n;
  const Int Bk = B * k;
  std::array<CircleSymbol, 5> symbols = {
      CircleSymbol{Rat(0), Rat(0), -B},
      CircleSymbol{Rat(-k, B), Rat(0), B + k},
      CircleSymbol{Rat(B * B - mu * mu, Bk), Rat(2 * mu, k), B + n},
      CircleSymbol{Rat(B * B - (k - mu) * (k - mu), Bk), Rat(-2 * (k - mu), k),
                   B + k + n - 2 * mu},
      CircleSymbol{Rat(B * B - (k + mu) * (k + mu), Bk), Rat(2 * (k + mu), k),
                   B + k + n + 2 * mu},
  };
  const DescartesConfig root{{symbols[0], symbols[1], symbols[2], symbols[3]}};
  const DescartesConfig sibling{{symbols[0], symbols[1], symbols[2], symbols[4]}};
  if (!valid_config(root) || !valid_config(sibling)) {
    throw std::logic_error("principal symbols failed their tangency postcondition");
  }
  return symbols;
}

DescartesConfig reflect(const DescartesConfig& config, int i) {
  if (i < 1 || i > 4) throw std::invalid_argument("reflection index must be in 1..4");
  const size_t r = static_cast<size_t>(i) - 1;
  Int bend_sum = 0;
  Rat x_sum, y_sum;
  for (size_t j = 0; j < 4; ++j) {
    if (j == r) continue;
    bend_sum += config.circles[j].bend;
    x_sum += config.circles[j].x_dot;
    y_sum += config.circles[j].y_dot;
  }
  DescartesConfig out = config;
  const CircleSymbol& old = config.circles[r];
  out.circles[r] = CircleSymbol{Rat(2) * x_sum - old.x_dot, Rat(2) * y_sum - old.y_dot,
                                2 * bend_sum - old.bend};
  return out;
}

namespace {

std::array<CircleSymbol, 4> canonical(const DescartesConfig& config) {
  std::array<CircleSymbol, 4> key = config.circles;
  std::sort(key.begin(), key.end());
  return key;
}

}  // namespace

Packing generate(const GasketKey& key, const Int& max_bend) {
  const auto symbols = principal_symbols(key);  // validates the key, rejects the strip
  const Int& top = symbols[4].bend;
  if (max_bend < top) {
    throw std::invalid_argument("max bend must be at least the largest principal bend " +
                                top.get_str());
  }

  std::set<CircleSymbol> circles;
  std::set<std::array<CircleSymbol, 4>> seen;
  std::vector<DescartesConfig> configs;

  const DescartesConfig root{{symbols[0], symbols[1], symbols[2], symbols[3]}};
  const DescartesConfig sibling{{symbols[0], symbols[1], symbols[2], symbols[4]}};
  std::vector<DescartesConfig> frontier;
  for (const auto& config : {root, sibling}) {
    if (seen.insert(canonical(config)).second) {
      configs.push_back(config);
      frontier.push_back(config);
      for (const auto& c : config.circles) circles.insert(c);
    }
  }

  while (!frontier.empty()) {
    // discovered configs keyed by their new circle for a deterministic sweep
    std::vector<std::pair<CircleSymbol, DescartesConfig>> discovered;
    for (const auto& config : frontier) {
      for (int i = 1; i <= 4; ++i) {
        DescartesConfig next = reflect(config, i);
        const CircleSymbol& fresh = next.circles[static_cast<size_t>(i) - 1];
        if (fresh.bend > max_bend) continue;
        if (!seen.insert(canonical(next)).second) continue;
        circles.insert(fresh);
        configs.push_back(next);
        discovered.emplace_back(fresh, std::move(next));
      }
    }
    std::sort(discovered.begin(), discovered.end(),
              [](const auto& a, const auto& b) { return a.first < b.first; });
    frontier.clear();
    frontier.reserve(discovered.size());
    for (auto& entry : discovered) frontier.push_back(std::move(entry.second));
  }

  Packing packing{key, max_bend, {circles.begin(), circles.end()}, std::move(configs)};
  std::sort(packing.configs.begin(), packing.configs.end(),
            [](const DescartesConfig& a, const DescartesConfig& b) {
              return canonical(a) < canonical(b);
            });
  return packing;
}

}  // namespace apollon
