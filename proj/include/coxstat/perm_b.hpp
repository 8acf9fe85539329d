#pragma once

// Type B: signed permutations of [n]. A bar is a minus sign, everywhere.
//
// sigma(-i) = -sigma(i) is implied; only sigma(1)..sigma(n) are stored.

#include <algorithm>
#include <cstdlib>
#include <span>
#include <string>
#include <vector>

#include "coxstat/code.hpp"
#include "coxstat/error.hpp"
#include "coxstat/perm_a.hpp"

namespace coxstat {

class SignedPermutation {
 public:
  SignedPermutation() = default;

  /// Validates that the absolute values of `images` form a permutation of [n].
  explicit SignedPermutation(std::vector<int> images) : images_(std::move(images)) {
    const int n = static_cast<int>(images_.size());
    if (n == 0) throw DomainError("signed permutation must have degree >= 1");
    std::vector<bool> seen(n + 1, false);
    for (int v : images_) {
      const int a = std::abs(v);
      if (a < 1 || a > n) {
        throw DomainError("value " + std::to_string(v) + " is not in [-" + std::to_string(n) +
                          "," + std::to_string(n) + "]\\{0}");
      }
      if (seen[a]) throw DomainError("value " + std::to_string(a) + " repeats");
      seen[a] = true;
    }
  }

  static SignedPermutation identity(int n) {
    std::vector<int> w(n);
    for (int i = 0; i < n; ++i) w[i] = i + 1;
    return SignedPermutation(std::move(w));
  }

  int n() const { return static_cast<int>(images_.size()); }

  /// Action on +-[n].
  int operator()(int x) const { return x > 0 ? images_[x - 1] : -images_[-x - 1]; }

  std::span<const int> images() const { return images_; }

  /// N(sigma): number of negative entries.
  int negatives() const {
    return static_cast<int>(std::count_if(images_.begin(), images_.end(), [](int v) { return v < 0; }));
  }

  friend bool operator==(const SignedPermutation&, const SignedPermutation&) = default;
  friend auto operator<=>(const SignedPermutation&, const SignedPermutation&) = default;

 private:
  std::vector<int> images_;
};

inline SignedPermutation to_signed(const Permutation& s) {
  return SignedPermutation(std::vector<int>(s.images().begin(), s.images().end()));
}

/// Throws if any entry is barred.
inline Permutation to_unsigned(const SignedPermutation& s) {
  return Permutation(std::vector<int>(s.images().begin(), s.images().end()));
}

/// A reflection in T^B, or the identity marker (j j).
///
///   1 <= a < j      (a, j):   a <-> j and -a <-> -j
///   -j < a <= -1    (|a|bar, j): -|a| <-> j and |a| <-> -j
///   a = -j          (jbar, j): j <-> -j
///   a = j           identity
class TranspositionB {
 public:
  TranspositionB(int a, int j) : a_(a), j_(j) {
    if (j < 1 || a == 0 || a > j || a < -j) {
      throw DomainError("(" + std::to_string(a) + "," + std::to_string(j) +
                        ") is not a type-B transposition");
    }
  }

  int a() const { return a_; }
  int j() const { return j_; }
  bool is_identity() const { return a_ == j_; }

  /// j - a - [a < 0]
  int weight() const { return j_ - a_ - (a_ < 0 ? 1 : 0); }

  friend bool operator==(const TranspositionB&, const TranspositionB&) = default;

 private:
  int a_;
  int j_;
};

/// Factors in increasing j; identity markers never appear.
struct FactorizationB {
  std::vector<TranspositionB> factors;
};

struct SignedCycle {
  std::vector<int> values;  ///< canonical cycle of |sigma|, minimum first
  IntSet barred;            ///< values v with -v in the one-line notation
  bool balanced = true;     ///< even number of barred values
};

struct SignedCycleDecomposition {
  std::vector<SignedCycle> cycles;

  int balanced_count() const {
    return static_cast<int>(std::count_if(cycles.begin(), cycles.end(),
                                          [](const SignedCycle& c) { return c.balanced; }));
  }

  /// Cyc_B: the minimal absolute value of each balanced cycle.
  IntSet balanced_minima() const {
    IntSet out;
    for (const auto& c : cycles) {
      if (c.balanced) out.push_back(c.values.front());
    }
    return out;
  }
};

namespace detail {

/// w <- w * t, acting on the one-line word in place.
inline void right_multiply(std::vector<int>& w, int a, int j) {
  if (a == j) return;
  if (a > 0) {
    std::swap(w[a - 1], w[j - 1]);
  } else if (a == -j) {
    w[j - 1] = -w[j - 1];
  } else {
    const int i = -a;
    const int at_i = w[i - 1];
    w[i - 1] = -w[j - 1];
    w[j - 1] = -at_i;
  }
}

}  // namespace detail

inline SignedPermutation compose(const SignedPermutation& p, const SignedPermutation& s) {
  if (p.n() != s.n()) throw DomainError("degree mismatch in compose");
  std::vector<int> w(p.n());
  for (int i = 1; i <= p.n(); ++i) w[i - 1] = p(s(i));
  return SignedPermutation(std::move(w));
}

inline SignedPermutation inverse(const SignedPermutation& s) {
  std::vector<int> w(s.n());
  for (int i = 1; i <= s.n(); ++i) {
    const int v = s(i);
    w[std::abs(v) - 1] = v > 0 ? i : -i;
  }
  return SignedPermutation(std::move(w));
}

inline SignedPermutation as_permutation(const TranspositionB& t, int n) {
  if (t.j() > n) throw DomainError("transposition does not fit degree " + std::to_string(n));
  std::vector<int> w(n);
  for (int i = 0; i < n; ++i) w[i] = i + 1;
  detail::right_multiply(w, t.a(), t.j());
  return SignedPermutation(std::move(w));
}

/// s * t
inline SignedPermutation apply_transposition(const SignedPermutation& s, const TranspositionB& t) {
  if (t.j() > s.n()) throw DomainError("transposition does not fit degree " + std::to_string(s.n()));
  std::vector<int> w(s.images().begin(), s.images().end());
  detail::right_multiply(w, t.a(), t.j());
  return SignedPermutation(std::move(w));
}

/// Left-to-right product of the factors; identity markers are skipped.
inline SignedPermutation product(std::span<const TranspositionB> factors, int n) {
  std::vector<int> w(n);
  for (int i = 0; i < n; ++i) w[i] = i + 1;
  for (const auto& t : factors) {
    if (t.j() > n) throw DomainError("transposition does not fit degree " + std::to_string(n));
    detail::right_multiply(w, t.a(), t.j());
  }
  return SignedPermutation(std::move(w));
}

inline SignedPermutation product(const FactorizationB& f, int n) { return product(f.factors, n); }

/// |{i<j : s_i > s_j}| + |{i<=j : -s_i > s_j}|
inline int inv_B(const SignedPermutation& s) {
  const auto w = s.images();
  int count = 0;
  for (std::size_t i = 0; i < w.size(); ++i) {
    for (std::size_t j = i; j < w.size(); ++j) {
      if (j > i && w[i] > w[j]) ++count;
      if (-w[i] > w[j]) ++count;
    }
  }
  return count;
}

/// Straight selection sort of type B: for j = n..1 move j home by one
/// reflection. Returns the factors in increasing j.
inline FactorizationB selection_sort_factorization(const SignedPermutation& s) {
  std::vector<int> w(s.images().begin(), s.images().end());
  FactorizationB out;
  for (int j = s.n(); j >= 1; --j) {
    if (w[j - 1] == j) continue;
    int a = 0;
    for (int p = 1; p <= j; ++p) {
      if (w[p - 1] == j) a = p;
      if (w[p - 1] == -j) a = -p;
    }
    out.factors.emplace_back(a, j);
    detail::right_multiply(w, a, j);
  }
  std::reverse(out.factors.begin(), out.factors.end());
  return out;
}

inline int sor_B(const SignedPermutation& s) {
  int total = 0;
  for (const auto& t : selection_sort_factorization(s).factors) total += t.weight();
  return total;
}

inline SignedCycleDecomposition signed_cycle_decomposition(const SignedPermutation& s) {
  std::vector<bool> barred(s.n() + 1, false);
  for (int v : s.images()) {
    if (v < 0) barred[-v] = true;
  }
  SignedCycleDecomposition out;
  std::vector<bool> seen(s.n() + 1, false);
  for (int start = 1; start <= s.n(); ++start) {
    if (seen[start]) continue;
    SignedCycle cycle;
    for (int x = start; !seen[x]; x = std::abs(s(x))) {
      seen[x] = true;
      cycle.values.push_back(x);
      if (barred[x]) cycle.barred.push_back(x);
    }
    std::sort(cycle.barred.begin(), cycle.barred.end());
    cycle.balanced = cycle.barred.size() % 2 == 0;
    out.cycles.push_back(std::move(cycle));
  }
  return out;
}

inline int cyc_B(const SignedPermutation& s) { return signed_cycle_decomposition(s).balanced_count(); }

/// l'_B = n - cyc_B
inline int reflection_length_B(const SignedPermutation& s) { return s.n() - cyc_B(s); }

/// Lmap_B: places i with w_i > |w_j| for every j < i. Only positive letters
/// qualify, so that lr-max_B + nmax_B = n.
inline IntSet lmap_B_set(std::span<const int> w) {
  IntSet out;
  int running_max = 0;
  for (std::size_t i = 0; i < w.size(); ++i) {
    if (w[i] > running_max) out.push_back(static_cast<int>(i) + 1);
    running_max = std::max(running_max, std::abs(w[i]));
  }
  return out;
}

/// Rmil_B: letters w_i with 0 < w_i < |w_j| for every j > i.
inline IntSet rmil_B_set(std::span<const int> w) {
  IntSet out;
  int running_min = 0;
  bool have_min = false;
  for (std::size_t k = w.size(); k-- > 0;) {
    if (w[k] > 0 && (!have_min || w[k] < running_min)) out.push_back(w[k]);
    const int a = std::abs(w[k]);
    if (!have_min || a < running_min) running_min = a;
    have_min = true;
  }
  std::sort(out.begin(), out.end());
  return out;
}

inline IntSet lmap_B_set(const SignedPermutation& s) { return lmap_B_set(s.images()); }
inline IntSet rmil_B_set(const SignedPermutation& s) { return rmil_B_set(s.images()); }

struct StatsB {
  int nmin_B;
  int nmax_B;
  int rl_min_B;
  int lr_max_B;
  int negatives;
};

inline StatsB stats_B(const SignedPermutation& s) {
  const auto w = s.images();
  const int n = s.n();
  const int neg = s.negatives();
  int not_min = 0;
  int not_max = 0;
  for (int i = 0; i < n; ++i) {
    for (int j = i + 1; j < n; ++j) {
      if (w[i] > std::abs(w[j])) {
        ++not_min;
        break;
      }
    }
    for (int j = 0; j < i; ++j) {
      if (w[i] > 0 && w[i] < std::abs(w[j])) {
        ++not_max;
        break;
      }
    }
  }
  return StatsB{not_min + neg, not_max + neg, static_cast<int>(rmil_B_set(w).size()),
                static_cast<int>(lmap_B_set(w).size()), neg};
}

inline int nmin_B(const SignedPermutation& s) { return stats_B(s).nmin_B; }
inline int nmax_B(const SignedPermutation& s) { return stats_B(s).nmax_B; }

/// a_i = sign(s_i) * |{ j <= i : |s_j| <= |s_i| }|
inline CodeB lehmer_B_encode(const SignedPermutation& s) {
  std::vector<int> a(s.n());
  for (int i = 1; i <= s.n(); ++i) {
    const int here = std::abs(s(i));
    int count = 0;
    for (int j = 1; j <= i; ++j) {
      if (std::abs(s(j)) <= here) ++count;
    }
    a[i - 1] = s(i) > 0 ? count : -count;
  }
  return CodeB(std::move(a));
}

inline SignedPermutation lehmer_B_decode(const CodeB& c) {
  std::vector<int> w = detail::unrank_by_prefix_counts(c.entries());
  for (int i = 0; i < c.n(); ++i) {
    if (c[i + 1] < 0) w[i] = -w[i];
  }
  return SignedPermutation(std::move(w));
}

/// A-code_B s = Leh_B(s^-1).
inline CodeB acode_B_encode(const SignedPermutation& s) { return lehmer_B_encode(inverse(s)); }

/// Builds s by inserting 1, 2, ..., n: letter i carries the sign of a_i and
/// goes in front when |a_i| = 1, otherwise right after the (|a_i|-1)-th letter.
inline SignedPermutation acode_B_decode(const CodeB& c) {
  std::vector<int> w;
  w.reserve(c.n());
  for (int i = 1; i <= c.n(); ++i) {
    const int a = c[i];
    const int slot = std::abs(a) - 1;
    w.insert(w.begin() + slot, a > 0 ? i : -i);
  }
  return SignedPermutation(std::move(w));
}

/// b_i = s^-k(i) for the least k >= 1 with |s^-k(i)| <= i.
inline CodeB bcode_B_encode(const SignedPermutation& s) {
  const SignedPermutation back = inverse(s);
  std::vector<int> b(s.n());
  for (int i = 1; i <= s.n(); ++i) {
    int x = back(i);
    while (std::abs(x) > i) x = back(x);
    b[i - 1] = x;
  }
  return CodeB(std::move(b));
}

/// s = (b_1, 1)(b_2, 2)...(b_n, n)
inline SignedPermutation bcode_B_decode(const CodeB& c) {
  std::vector<int> w(c.n());
  for (int i = 0; i < c.n(); ++i) w[i] = i + 1;
  for (int i = 1; i <= c.n(); ++i) detail::right_multiply(w, c[i], i);
  return SignedPermutation(std::move(w));
}

/// psi = (B-code_B)^-1 o A-code_B. Carries (inv_B, Lmap_B, Rmil_B) to
/// (sor_B, Lmap_B, Cyc_B).
inline SignedPermutation psi(const SignedPermutation& s) { return bcode_B_decode(acode_B_encode(s)); }

inline SignedPermutation psi_inverse(const SignedPermutation& s) {
  return acode_B_decode(bcode_B_encode(s));
}

}  // namespace coxstat
