#include "apollon/enumeration.hpp"

#include <algorithm>
#include <atomic>
#include <stdexcept>
#include <thread>

#include "apollon/descartes.hpp"
#include "apollon/errors.hpp"

namespace apollon {

std::string to_string(SymmetryClass s) {
  switch (s) {
    case SymmetryClass::Strip: return "strip";
    case SymmetryClass::Window: return "window";
    case SymmetryClass::Odd: return "odd";
    case SymmetryClass::Even: return "even";
    case SymmetryClass::EvenStar: return "even*";
    case SymmetryClass::Skew: return "skew";
  }
  throw std::logic_error("unreachable symmetry class");
}

Rat GasketKey::rho() const {
  if (B == 0) throw StripUnsupported("the strip has no strip preimage geometry");
  return Rat(k, B * B);
}

Rat GasketKey::h() const {
  if (B == 0) throw StripUnsupported("the strip has no strip preimage geometry");
  return Rat(2 * mu, B * B);
}

Int GasketKey::m() const { return 2 * mu; }

std::optional<std::string> key_violation(const GasketKey& key) {
  if (key.B < 0 || key.mu < 0 || key.k < 0 || key.n < 0) {
    return "key components must be nonnegative";
  }
  if (key.B == 0) {
    if (key.mu != 0 || key.k != 0) return "B = 0 forces mu = 0 and k = 0";
    if (key.n < 1) return "the strip key needs n >= 1";
    return std::nullopt;
  }
  const Int lhs = key.B * key.B + key.mu * key.mu;
  const Int rhs = key.k * key.n;
  if (lhs != rhs) {
    return "master equation violated: B^2 + mu^2 = " + lhs.get_str() + " but k*n = " +
           rhs.get_str();
  }
  if (3 * key.mu * key.mu > key.B * key.B) return "constraint violated: 3*mu^2 > B^2";
  if (2 * key.mu > key.k) return "constraint violated: k < 2*mu";
  if (key.k > key.n) return "constraint violated: k > n";
  return std::nullopt;
}

std::vector<GasketKey> solve_master(const Int& B) {
  if (B < 0) throw std::invalid_argument("root bend must be nonnegative");
  if (B == 0) return {GasketKey{0, 0, 0, 1}};
  std::vector<GasketKey> keys;
  const Int B2 = B * B;
  for (Int mu = 0; 3 * mu * mu <= B2; ++mu) {
    const Int N = B2 + mu * mu;
    for (Int k = std::max(Int(1), Int(2 * mu)); k * k <= N; ++k) {
      if (!mpz_divisible_p(N.get_mpz_t(), k.get_mpz_t())) continue;
      const Int n = N / k;
      if (gcd3(B, k, n) != 1) continue;
      keys.push_back(GasketKey{B, mu, k, n});
    }
  }
  return keys;
}

BendQuintet quintet(const GasketKey& key) {
  const Int base = key.B + key.k + key.n;
  return BendQuintet{-key.B, key.B + key.k, key.B + key.n, base - 2 * key.mu,
                     base + 2 * key.mu};
}

GasketKey key_from_quintet(const BendQuintet& q) {
  if (!mpz_divisible_ui_p(Int(q.b4 - q.b3).get_mpz_t(), 4)) {
    throw MasterEquationViolation("b4 - b3 = " + Int(q.b4 - q.b3).get_str() +
                                  " is not divisible by 4");
  }
  if (q.b3 + q.b4 != 2 * (q.b0 + q.b1 + q.b2)) {
    throw MasterEquationViolation("duality sum violated: b3 + b4 = " + Int(q.b3 + q.b4).get_str() +
                                  " but 2(b0+b1+b2) = " + Int(2 * (q.b0 + q.b1 + q.b2)).get_str());
  }
  const GasketKey key{-q.b0, (q.b4 - q.b3) / 4, q.b1 + q.b0, q.b2 + q.b0};
  if (const auto violation = key_violation(key)) throw MasterEquationViolation(*violation);
  return key;
}

SymmetryClass classify(const GasketKey& key) {
  if (const auto violation = key_violation(key)) throw std::invalid_argument(*violation);
  if (key.B == 0) return SymmetryClass::Strip;
  if (key.B == 1 && key.mu == 0 && key.k == 1 && key.n == 1) return SymmetryClass::Window;
  if (key.mu == 0) return SymmetryClass::Odd;
  if (2 * key.mu == key.k) return SymmetryClass::Even;
  if (key.k == key.n) return SymmetryClass::EvenStar;
  return SymmetryClass::Skew;
}

Rat shift_of(const GasketKey& key) {
  if (key.B == 0) return Rat(0);
  return Rat(2 * key.mu, key.k);
}

namespace {

GasketRecord record_for(const GasketKey& key) {
  return GasketRecord{key, quintet(key), shift_of(key), classify(key), false};
}

bool record_order(const GasketRecord& a, const GasketRecord& b) {
  if (a.key.B != b.key.B) return a.key.B < b.key.B;
  if (a.key.mu != b.key.mu) return a.key.mu < b.key.mu;
  return a.key.k < b.key.k;
}

}  // namespace

std::vector<GasketRecord> enumerate_records(const Int& B_max, bool irreducible_only,
                                            unsigned threads) {
  if (B_max < 0) throw std::invalid_argument("max bend must be nonnegative");
  if (!B_max.fits_ulong_p()) throw std::invalid_argument("max bend out of supported range");
  const unsigned long bmax = B_max.get_ui();

  std::vector<std::vector<GasketRecord>> slots(bmax + 1);
  unsigned workers = threads;
  if (workers == 0) {
    workers = std::thread::hardware_concurrency();
    if (workers == 0) workers = 1;
  }
  workers = static_cast<unsigned>(std::min<unsigned long>(workers, bmax + 1));

  std::atomic<unsigned long> cursor{0};
  const auto work = [&] {
    for (unsigned long b; (b = cursor.fetch_add(1)) <= bmax;) {
      std::vector<GasketRecord> recs;
      for (const auto& key : solve_master(Int(b))) recs.push_back(record_for(key));
      slots[b] = std::move(recs);
    }
  };
  if (workers <= 1) {
    work();
  } else {
    std::vector<std::thread> pool;
    pool.reserve(workers);
    for (unsigned t = 0; t < workers; ++t) pool.emplace_back(work);
    for (auto& th : pool) th.join();
  }

  std::vector<GasketRecord> out;
  for (auto& slot : slots) out.insert(out.end(), slot.begin(), slot.end());

  if (!irreducible_only) {
    std::vector<GasketRecord> multiples;
    for (const auto& rec : out) {
      if (rec.key.B < 1) continue;
      for (Int lambda = 2; lambda * rec.key.B <= B_max; ++lambda) {
        GasketRecord scaled = rec;
        scaled.key = GasketKey{lambda * rec.key.B, lambda * rec.key.mu, lambda * rec.key.k,
                               lambda * rec.key.n};
        scaled.quintet = BendQuintet{lambda * rec.quintet.b0, lambda * rec.quintet.b1,
                                     lambda * rec.quintet.b2, lambda * rec.quintet.b3,
                                     lambda * rec.quintet.b4};
        scaled.reducible = true;
        multiples.push_back(std::move(scaled));
      }
    }
    out.insert(out.end(), multiples.begin(), multiples.end());
    std::sort(out.begin(), out.end(), record_order);
  }
  return out;
}

}  // namespace apollon
