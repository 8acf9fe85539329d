#pragma once

// Exact bivariate polynomials in q and t with nonnegative 64-bit coefficients.

#include <compare>
#include <cstdint>
#include <map>
#include <stdexcept>
#include <string>

#include "coxstat/error.hpp"

namespace coxstat {

/// Exponent pair, ordered by t first and then q (the canonical term order).
struct Exponent {
  unsigned q = 0;
  unsigned t = 0;

  friend bool operator==(const Exponent&, const Exponent&) = default;
  friend std::strong_ordering operator<=>(const Exponent& a, const Exponent& b) {
    if (auto c = a.t <=> b.t; c != 0) return c;
    return a.q <=> b.q;
  }
};

namespace detail {

inline std::uint64_t checked_add(std::uint64_t a, std::uint64_t b) {
  std::uint64_t r;
  if (__builtin_add_overflow(a, b, &r)) throw std::overflow_error("polynomial coefficient overflow");
  return r;
}

inline std::uint64_t checked_mul(std::uint64_t a, std::uint64_t b) {
  std::uint64_t r;
  if (__builtin_mul_overflow(a, b, &r)) throw std::overflow_error("polynomial coefficient overflow");
  return r;
}

}  // namespace detail

class BivariatePolynomial {
 public:
  using Terms = std::map<Exponent, std::uint64_t>;

  BivariatePolynomial() = default;

  static BivariatePolynomial monomial(unsigned q, unsigned t, std::uint64_t coefficient = 1) {
    BivariatePolynomial p;
    p.add_term(q, t, coefficient);
    return p;
  }

  static BivariatePolynomial one() { return monomial(0, 0); }

  void add_term(unsigned q, unsigned t, std::uint64_t coefficient) {
    if (coefficient == 0) return;
    auto& slot = terms_[Exponent{q, t}];
    slot = detail::checked_add(slot, coefficient);
  }

  std::uint64_t coefficient(unsigned q, unsigned t) const {
    auto it = terms_.find(Exponent{q, t});
    return it == terms_.end() ? 0 : it->second;
  }

  const Terms& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }

  /// Value at q = t = 1.
  std::uint64_t total() const {
    std::uint64_t sum = 0;
    for (const auto& [e, c] : terms_) sum = detail::checked_add(sum, c);
    return sum;
  }

  /// Specialization t -> 1.
  BivariatePolynomial eval_t1() const {
    BivariatePolynomial out;
    for (const auto& [e, c] : terms_) out.add_term(e.q, 0, c);
    return out;
  }

  BivariatePolynomial& operator+=(const BivariatePolynomial& other) {
    for (const auto& [e, c] : other.terms_) add_term(e.q, e.t, c);
    return *this;
  }

  friend BivariatePolynomial operator+(BivariatePolynomial a, const BivariatePolynomial& b) {
    a += b;
    return a;
  }

  friend BivariatePolynomial operator*(const BivariatePolynomial& a, const BivariatePolynomial& b) {
    BivariatePolynomial out;
    for (const auto& [ea, ca] : a.terms_) {
      for (const auto& [eb, cb] : b.terms_) {
        out.add_term(ea.q + eb.q, ea.t + eb.t, detail::checked_mul(ca, cb));
      }
    }
    return out;
  }

  BivariatePolynomial& operator*=(const BivariatePolynomial& other) { return *this = *this * other; }

  friend bool operator==(const BivariatePolynomial&, const BivariatePolynomial&) = default;

  /// Terms in (t, q) order, e.g. "1 + 2*q*t + q^2*t". The zero polynomial is "0".
  std::string to_string() const {
    if (terms_.empty()) return "0";
    std::string out;
    for (const auto& [e, c] : terms_) {
      if (!out.empty()) out += " + ";
      std::string body;
      auto factor = [&body](const char* var, unsigned exp) {
        if (exp == 0) return;
        if (!body.empty()) body += '*';
        body += var;
        if (exp > 1) body += '^' + std::to_string(exp);
      };
      factor("q", e.q);
      factor("t", e.t);
      if (body.empty()) {
        out += std::to_string(c);
      } else if (c == 1) {
        out += body;
      } else {
        out += std::to_string(c) + '*' + body;
      }
    }
    return out;
  }

 private:
  Terms terms_;
};

/// [m]_q = 1 + q + ... + q^(m-1)
inline BivariatePolynomial q_int(int m) {
  if (m < 1) throw DomainError("q-integer [m]_q needs m >= 1");
  BivariatePolynomial p;
  for (int k = 0; k < m; ++k) p.add_term(static_cast<unsigned>(k), 0, 1);
  return p;
}

/// t (t + q) (t + q + q^2) ... (t + q + ... + q^(n-1))
inline BivariatePolynomial gf_type_a(int n) {
  if (n < 1) throw DomainError("type-A generating function needs n >= 1");
  BivariatePolynomial out = BivariatePolynomial::one();
  for (int i = 1; i <= n; ++i) {
    BivariatePolynomial factor = BivariatePolynomial::monomial(0, 1);
    for (int k = 1; k < i; ++k) factor.add_term(static_cast<unsigned>(k), 0, 1);
    out *= factor;
  }
  return out;
}

/// prod_{i=1..n} (1 + t [2i]_q - t), with the -t folded in:
/// each factor is 1 + t (q + q^2 + ... + q^(2i-1)).
inline BivariatePolynomial gf_type_b(int n) {
  if (n < 1) throw DomainError("type-B generating function needs n >= 1");
  BivariatePolynomial out = BivariatePolynomial::one();
  for (int i = 1; i <= n; ++i) {
    BivariatePolynomial factor = BivariatePolynomial::one();
    for (int k = 1; k < 2 * i; ++k) factor.add_term(static_cast<unsigned>(k), 1, 1);
    out *= factor;
  }
  return out;
}

/// prod_{r=1..n-1} (1 + q^r t + q t [2r]_q)
inline BivariatePolynomial gf_type_d_bivariate(int n) {
  if (n < 2) throw DomainError("type-D bivariate generating function needs n >= 2");
  BivariatePolynomial out = BivariatePolynomial::one();
  for (int r = 1; r < n; ++r) {
    BivariatePolynomial factor = BivariatePolynomial::one();
    factor.add_term(static_cast<unsigned>(r), 1, 1);
    factor += BivariatePolynomial::monomial(1, 1) * q_int(2 * r);
    out *= factor;
  }
  return out;
}

/// [n]_q prod_{r=1..n-1} [2r]_q
inline BivariatePolynomial gf_type_d_univariate(int n) {
  if (n < 1) throw DomainError("type-D univariate generating function needs n >= 1");
  BivariatePolynomial out = q_int(n);
  for (int r = 1; r < n; ++r) out *= q_int(2 * r);
  return out;
}

}  // namespace coxstat
