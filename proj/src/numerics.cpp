#include "apollon/numerics.hpp"

#include <stdexcept>

namespace apollon {

namespace {

Int pow10(long e) {
  Int t;
  mpz_ui_pow_ui(t.get_mpz_t(), 10, static_cast<unsigned long>(e));
  return t;
}

}  // namespace

Rat::Rat(const Int& num, const Int& den) {
  if (den == 0) throw std::invalid_argument("rational with zero denominator");
  q_ = mpq_class(num, den);
  q_.canonicalize();
}

Rat operator/(const Rat& a, const Rat& b) {
  if (b.q_ == 0) throw std::invalid_argument("rational division by zero");
  return Rat::wrap(mpq_class(a.q_ / b.q_));
}

std::string Rat::to_string() const {
  if (q_.get_den() == 1) return q_.get_num().get_str();
  return q_.get_num().get_str() + "/" + q_.get_den().get_str();
}

std::optional<Int> isqrt_exact(const Int& v) {
  if (v < 0) throw std::invalid_argument("isqrt_exact of a negative value");
  Int root, rem;
  mpz_sqrtrem(root.get_mpz_t(), rem.get_mpz_t(), v.get_mpz_t());
  if (rem != 0) return std::nullopt;
  return root;
}

Int gcd3(const Int& a, const Int& b, const Int& c) {
  Int g;
  mpz_gcd(g.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
  mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), c.get_mpz_t());
  return g;
}

std::string to_decimal(const Rat& r, int significant_digits) {
  if (significant_digits < 1) throw std::invalid_argument("need at least one significant digit");
  Int p = r.num();
  if (p == 0) return "0";
  const Int q = r.den();
  const bool negative = p < 0;
  const Int a = abs(p);

  // exponent E with 10^(E-1) <= a/q < 10^E, by exact comparison
  auto against_pow = [&](long e) {
    if (e >= 0) return cmp(a, Int(q * pow10(e)));
    return cmp(Int(a * pow10(-e)), q);
  };
  long E = 0;
  while (against_pow(E) >= 0) ++E;
  while (against_pow(E - 1) < 0) --E;

  // mantissa in [10^(d-1), 10^d), rounded half to even
  const long shift = significant_digits - E;
  const Int numer = shift >= 0 ? Int(a * pow10(shift)) : a;
  const Int denom = shift >= 0 ? q : Int(q * pow10(-shift));
  Int m = numer / denom;
  const Int rem = numer - m * denom;
  const Int twice = 2 * rem;
  if (twice > denom || (twice == denom && mpz_odd_p(m.get_mpz_t()))) ++m;
  if (m == pow10(significant_digits)) {
    m = pow10(significant_digits - 1);
    ++E;
  }

  const std::string digits = m.get_str();
  std::string out;
  if (E >= static_cast<long>(digits.size())) {
    out = digits + std::string(static_cast<size_t>(E) - digits.size(), '0');
  } else if (E >= 1) {
    out = digits.substr(0, static_cast<size_t>(E)) + "." + digits.substr(static_cast<size_t>(E));
  } else {
    out = "0." + std::string(static_cast<size_t>(-E), '0') + digits;
  }
  if (out.find('.') != std::string::npos) {
    const auto last = out.find_last_not_of('0');
    out.erase(out[last] == '.' ? last : last + 1);
  }
  return negative ? "-" + out : out;
}

}  // namespace apollon
