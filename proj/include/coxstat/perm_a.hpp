#pragma once

// Type A: permutations of [n] in one-line notation.
//
// Products are read right to left, (p * s)(i) = p(s(i)). All positions and
// values are 1-based.

#include <algorithm>
#include <span>
#include <string>
#include <vector>

#include "coxstat/code.hpp"
#include "coxstat/error.hpp"

namespace coxstat {

class Permutation {
 public:
  Permutation() = default;

  /// Validates that `images` lists every value of [n] exactly once.
  explicit Permutation(std::vector<int> images) : images_(std::move(images)) {
    const int n = static_cast<int>(images_.size());
    if (n == 0) throw DomainError("permutation must have degree >= 1");
    std::vector<bool> seen(n + 1, false);
    for (int v : images_) {
      if (v < 1 || v > n) {
        throw DomainError("value " + std::to_string(v) + " is not in [1," +
                          std::to_string(n) + "]");
      }
      if (seen[v]) throw DomainError("value " + std::to_string(v) + " repeats");
      seen[v] = true;
    }
  }

  static Permutation identity(int n) {
    std::vector<int> w(n);
    for (int i = 0; i < n; ++i) w[i] = i + 1;
    return Permutation(std::move(w));
  }

  int n() const { return static_cast<int>(images_.size()); }
  int operator()(int i) const { return images_[i - 1]; }
  std::span<const int> images() const { return images_; }

  friend bool operator==(const Permutation&, const Permutation&) = default;
  friend auto operator<=>(const Permutation&, const Permutation&) = default;

 private:
  std::vector<int> images_;
};

struct Transposition {
  int i;
  int j;
  friend bool operator==(const Transposition&, const Transposition&) = default;
};

/// (i_1 j_1)(i_2 j_2)...(i_k j_k) with i_r < j_r and j strictly increasing.
struct FactorizationA {
  std::vector<Transposition> factors;
};

/// Cycles rotated to start at their minimum, sorted by minimum, fixed points
/// included. Cycle (a_1 ... a_k) means s(a_1) = a_2, ..., s(a_k) = a_1.
struct CycleDecompositionA {
  std::vector<std::vector<int>> cycles;

  int count() const { return static_cast<int>(cycles.size()); }

  /// Cyc: the set of cycle minima.
  IntSet minima() const {
    IntSet out;
    for (const auto& c : cycles) out.push_back(c.front());
    return out;
  }
};

inline Permutation compose(const Permutation& p, const Permutation& s) {
  if (p.n() != s.n()) throw DomainError("degree mismatch in compose");
  std::vector<int> w(p.n());
  for (int i = 1; i <= p.n(); ++i) w[i - 1] = p(s(i));
  return Permutation(std::move(w));
}

inline Permutation inverse(const Permutation& s) {
  std::vector<int> w(s.n());
  for (int i = 1; i <= s.n(); ++i) w[s(i) - 1] = i;
  return Permutation(std::move(w));
}

/// Number of pairs i < j with s_i > s_j.
inline int inv(const Permutation& s) {
  int count = 0;
  const auto w = s.images();
  for (std::size_t i = 0; i < w.size(); ++i) {
    for (std::size_t j = i + 1; j < w.size(); ++j) {
      if (w[i] > w[j]) ++count;
    }
  }
  return count;
}

inline CycleDecompositionA cycle_decomposition(const Permutation& s) {
  CycleDecompositionA out;
  std::vector<bool> seen(s.n() + 1, false);
  for (int start = 1; start <= s.n(); ++start) {
    if (seen[start]) continue;
    std::vector<int> cycle;
    for (int x = start; !seen[x]; x = s(x)) {
      seen[x] = true;
      cycle.push_back(x);
    }
    out.cycles.push_back(std::move(cycle));
  }
  return out;
}

inline int cyc(const Permutation& s) { return cycle_decomposition(s).count(); }

/// Minimal number of transpositions expressing s.
inline int reflection_length(const Permutation& s) { return s.n() - cyc(s); }

// Set-valued statistics on integer words. They apply to permutations and codes
// alike.

/// Rmil: letters x_i with x_j > x_i for every j > i.
inline IntSet rl_min_set(std::span<const int> w) {
  IntSet out;
  int running_min = 0;
  for (std::size_t k = w.size(); k-- > 0;) {
    if (k + 1 == w.size() || w[k] < running_min) {
      out.push_back(w[k]);
      running_min = w[k];
    }
  }
  std::sort(out.begin(), out.end());
  return out;
}

/// Lmap: places i with x_j < x_i for every j < i.
inline IntSet lmap_set(std::span<const int> w) {
  IntSet out;
  for (std::size_t i = 0; i < w.size(); ++i) {
    if (i == 0 || w[i] > w[out.back() - 1]) out.push_back(static_cast<int>(i) + 1);
  }
  return out;
}

inline IntSet rl_min_set(const Permutation& s) { return rl_min_set(s.images()); }
inline IntSet lmap_set(const Permutation& s) { return lmap_set(s.images()); }

inline int rl_min(const Permutation& s) { return static_cast<int>(rl_min_set(s).size()); }
inline int lr_max(const Permutation& s) { return static_cast<int>(lmap_set(s).size()); }
inline int nmin(const Permutation& s) { return s.n() - rl_min(s); }

/// Leh s: a_i = |{ j <= i : s_j <= s_i }|.
inline CodeA lehmer_encode(const Permutation& s) {
  std::vector<int> a(s.n());
  for (int i = 1; i <= s.n(); ++i) {
    int count = 0;
    for (int j = 1; j <= i; ++j) {
      if (s(j) <= s(i)) ++count;
    }
    a[i - 1] = count;
  }
  return CodeA(std::move(a));
}

inline Permutation lehmer_decode(const CodeA& c) {
  return Permutation(detail::unrank_by_prefix_counts(c.entries()));
}

/// A-code s = Leh(s^-1).
inline CodeA acode_encode(const Permutation& s) { return lehmer_encode(inverse(s)); }

inline Permutation acode_decode(const CodeA& c) { return inverse(lehmer_decode(c)); }

/// b_i = s^-k(i) for the least k >= 1 with s^-k(i) <= i: the nearest letter
/// not exceeding i met walking backwards around the cycle of i.
inline CodeA bcode_encode(const Permutation& s) {
  const Permutation back = inverse(s);
  std::vector<int> b(s.n());
  for (int i = 1; i <= s.n(); ++i) {
    int x = back(i);
    while (x > i) x = back(x);
    b[i - 1] = x;
  }
  return CodeA(std::move(b));
}

/// s = (b_1 1)(b_2 2)...(b_n n), where (i i) is the identity.
inline Permutation bcode_decode(const CodeA& c) {
  std::vector<int> w(c.n());
  for (int i = 0; i < c.n(); ++i) w[i] = i + 1;
  // Right multiplication by (b i) exchanges places b and i.
  for (int i = 1; i <= c.n(); ++i) std::swap(w[c[i] - 1], w[i - 1]);
  return Permutation(std::move(w));
}

/// Unique factorization with increasing j, found by fixing n, n-1, ..., 2 in
/// turn.
inline FactorizationA sort_factorization(const Permutation& s) {
  std::vector<int> w(s.images().begin(), s.images().end());
  std::vector<int> where(s.n() + 1);
  for (int p = 1; p <= s.n(); ++p) where[w[p - 1]] = p;
  FactorizationA out;
  for (int j = s.n(); j >= 2; --j) {
    if (w[j - 1] == j) continue;
    const int i = where[j];
    out.factors.push_back({i, j});
    const int moved = w[j - 1];
    std::swap(w[i - 1], w[j - 1]);
    where[moved] = i;
    where[j] = j;
  }
  std::reverse(out.factors.begin(), out.factors.end());
  return out;
}

inline int sor(const Permutation& s) {
  int total = 0;
  for (const auto& t : sort_factorization(s).factors) total += t.j - t.i;
  return total;
}

/// Left-to-right product of the factors.
inline Permutation product(const FactorizationA& f, int n) {
  std::vector<int> w(n);
  for (int i = 0; i < n; ++i) w[i] = i + 1;
  for (const auto& t : f.factors) std::swap(w[t.i - 1], w[t.j - 1]);
  return Permutation(std::move(w));
}

/// phi = (B-code)^-1 o A-code. Carries (inv, rl-min, Lmap) to (sor, cyc, Lmap).
inline Permutation phi(const Permutation& s) { return bcode_decode(acode_encode(s)); }

inline Permutation phi_inverse(const Permutation& s) { return acode_decode(bcode_encode(s)); }

}  // namespace coxstat
