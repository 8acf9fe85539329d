#pragma once

// Type D: signed permutations with an even number of minus signs.

#include <algorithm>
#include <cstdlib>
#include <span>
#include <string>
#include <vector>

#include "coxstat/code.hpp"
#include "coxstat/error.hpp"
#include "coxstat/perm_b.hpp"

namespace coxstat {

inline bool is_d_member(const SignedPermutation& s) { return s.negatives() % 2 == 0; }

/// An element of D_n. Parity is checked once, here.
class DElement {
 public:
  explicit DElement(SignedPermutation s) : s_(std::move(s)) {
    if (!is_d_member(s_)) {
      throw DomainError("signed permutation has an odd number of minus signs; not in D_" +
                        std::to_string(s_.n()));
    }
  }

  explicit DElement(std::vector<int> images) : DElement(SignedPermutation(std::move(images))) {}

  static DElement identity(int n) { return DElement(SignedPermutation::identity(n)); }

  const SignedPermutation& perm() const { return s_; }
  int n() const { return s_.n(); }
  int operator()(int x) const { return s_(x); }
  std::span<const int> images() const { return s_.images(); }

  friend bool operator==(const DElement&, const DElement&) = default;
  friend auto operator<=>(const DElement&, const DElement&) = default;

 private:
  SignedPermutation s_;
};

/// A generator in T^D.
///
///   1 <= |i| < j   t_ij, the type-B transposition (i, j)
///   i = -j, j > 1  t_{jbar j} = (jbar, j)(1bar, 1), negating j and 1
///   i = j          identity marker (appears only in F-codes)
class GeneratorTD {
 public:
  GeneratorTD(int i, int j) : i_(i), j_(j) {
    const bool plain = i != 0 && std::abs(i) < j;
    const bool double_flip = i == -j && j > 1;
    if (!plain && !double_flip && i != j) {
      throw DomainError("t_(" + std::to_string(i) + "," + std::to_string(j) + ") is not in T^D");
    }
  }

  int i() const { return i_; }
  int j() const { return j_; }
  bool is_identity() const { return i_ == j_; }

  /// j - i - 2[i < 0], shared by sor_D and sor'_D.
  int weight() const { return j_ - i_ - (i_ < 0 ? 2 : 0); }

  friend bool operator==(const GeneratorTD&, const GeneratorTD&) = default;

 private:
  int i_;
  int j_;
};

/// Generators with 1 < j_1 < ... < j_m <= n.
struct FactorizationD {
  std::vector<GeneratorTD> factors;
};

namespace detail {

inline void right_multiply(std::vector<int>& w, const GeneratorTD& t) {
  if (t.is_identity()) return;
  if (t.i() == -t.j()) {
    w[t.j() - 1] = -w[t.j() - 1];
    w[0] = -w[0];
  } else {
    right_multiply(w, t.i(), t.j());
  }
}

inline int find_place(std::span<const int> w, int letter) {
  for (std::size_t p = 0; p < w.size(); ++p) {
    if (std::abs(w[p]) == letter) return static_cast<int>(p) + 1;
  }
  return 0;
}

}  // namespace detail

/// Left-to-right product of generators; identity markers are skipped.
inline DElement product(std::span<const GeneratorTD> factors, int n) {
  std::vector<int> w(n);
  for (int i = 0; i < n; ++i) w[i] = i + 1;
  for (const auto& t : factors) {
    if (t.j() > n) throw DomainError("generator does not fit degree " + std::to_string(n));
    detail::right_multiply(w, t);
  }
  return DElement(std::move(w));
}

inline DElement product(const FactorizationD& f, int n) { return product(f.factors, n); }

/// |{i<j : s_i > s_j}| + |{i<j : -s_i > s_j}|
inline int inv_D(const DElement& s) {
  const auto w = s.images();
  int count = 0;
  for (std::size_t i = 0; i < w.size(); ++i) {
    for (std::size_t j = i + 1; j < w.size(); ++j) {
      if (w[i] > w[j]) ++count;
      if (-w[i] > w[j]) ++count;
    }
  }
  return count;
}

/// Sum of j - i - 2[i < 0] over the type-B selection-sort factorization.
inline int sor_D(const DElement& s) {
  int total = 0;
  for (const auto& t : selection_sort_factorization(s.perm()).factors) {
    total += t.j() - t.a() - (t.a() < 0 ? 2 : 0);
  }
  return total;
}

/// Unique T^D factorization with increasing j, found by fixing n, ..., 2.
inline FactorizationD cosort_factorization(const DElement& s) {
  std::vector<int> w(s.images().begin(), s.images().end());
  FactorizationD out;
  for (int j = s.n(); j >= 2; --j) {
    if (w[j - 1] == j) continue;
    const int p = detail::find_place(w, j);
    const GeneratorTD t(w[p - 1] > 0 ? p : -p, j);
    out.factors.push_back(t);
    detail::right_multiply(w, t);
  }
  std::reverse(out.factors.begin(), out.factors.end());
  return out;
}

inline int sor_D_prime(const DElement& s) {
  int total = 0;
  for (const auto& t : cosort_factorization(s).factors) total += t.weight();
  return total;
}

/// Peel n, n-1, ..., 2. A positive letter i at place p gives e_i = p and is
/// deleted; a barred letter at place p gives e_i = -p, is deleted, and the
/// sign of the new first letter flips.
inline CodeD ecode_encode(const DElement& s) {
  std::vector<int> w(s.images().begin(), s.images().end());
  std::vector<int> e(s.n());
  for (int i = s.n(); i >= 2; --i) {
    const int p = detail::find_place(w, i);
    const bool barred = w[p - 1] < 0;
    e[i - 1] = barred ? -p : p;
    w.erase(w.begin() + (p - 1));
    if (barred) w.front() = -w.front();
  }
  e[0] = 1;
  return CodeD(std::move(e));
}

inline DElement ecode_decode(const CodeD& c) {
  std::vector<int> w{1};
  w.reserve(c.n());
  for (int i = 2; i <= c.n(); ++i) {
    const int e = c[i];
    if (e > 0) {
      w.insert(w.begin() + (e - 1), i);
    } else {
      w.front() = -w.front();
      w.insert(w.begin() + (-e - 1), -i);
    }
  }
  return DElement(std::move(w));
}

/// For i = n..2, move i home by one generator t_{f_i i} (right
/// multiplication), so that s = t_{f_1 1} t_{f_2 2} ... t_{f_n n}.
inline CodeD fcode_encode(const DElement& s) {
  std::vector<int> w(s.images().begin(), s.images().end());
  std::vector<int> f(s.n());
  for (int i = s.n(); i >= 2; --i) {
    const int p = detail::find_place(w, i);
    f[i - 1] = w[p - 1] > 0 ? p : -p;
    detail::right_multiply(w, GeneratorTD(f[i - 1], i));
  }
  f[0] = 1;
  return CodeD(std::move(f));
}

inline DElement fcode_decode(const CodeD& c) {
  std::vector<int> w(c.n());
  for (int i = 0; i < c.n(); ++i) w[i] = i + 1;
  for (int i = 2; i <= c.n(); ++i) detail::right_multiply(w, GeneratorTD(c[i], i));
  return DElement(std::move(w));
}

/// |{i : s_i > |s_j| for some j > i}| + number of barred letters other than 1.
inline int nmin_D(const DElement& s) {
  const auto w = s.images();
  int count = 0;
  for (std::size_t i = 0; i < w.size(); ++i) {
    for (std::size_t j = i + 1; j < w.size(); ++j) {
      if (w[i] > std::abs(w[j])) {
        ++count;
        break;
      }
    }
    if (w[i] < -1) ++count;
  }
  return count;
}

/// Minimal number of T^D generators expressing s, read off the F-code as
/// n - |{r : f_r = r}|.
inline int l_tilde_D(const DElement& s) {
  const CodeD f = fcode_encode(s);
  int fixed = 0;
  for (int r = 1; r <= f.n(); ++r) {
    if (f[r] == r) ++fixed;
  }
  return s.n() - fixed;
}

/// rho = (F-code)^-1 o E-code. Carries (inv_D, nmin_D) to (sor_D, l~'_D).
inline DElement rho(const DElement& s) { return fcode_decode(ecode_encode(s)); }

inline DElement rho_inverse(const DElement& s) { return ecode_decode(fcode_encode(s)); }

}  // namespace coxstat
