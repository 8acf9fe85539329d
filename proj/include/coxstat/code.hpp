#pragma once

#include <algorithm>
#include <span>
#include <string>
#include <vector>

#include "coxstat/error.hpp"

namespace coxstat {

/// Sorted set of positive integers (places or letters).
using IntSet = std::vector<int>;

enum class CodeSpace {
  A,  ///< 1 <= c_i <= i
  B,  ///< c_i in [-i, i] \ {0}
  D,  ///< c_1 = 1, c_i in [-i, i] \ {0} for i >= 2
};

/// A bounded integer sequence c_1..c_n. Entries are 1-based on the outside.
template <CodeSpace Space>
class Code {
 public:
  Code() = default;

  explicit Code(std::vector<int> entries) : entries_(std::move(entries)) {
    if (entries_.empty()) throw DomainError("code must have at least one entry");
    for (int i = 1; i <= n(); ++i) {
      if (!admissible(i, entries_[i - 1])) {
        throw DomainError("code entry c_" + std::to_string(i) + " = " +
                          std::to_string(entries_[i - 1]) + " is out of range");
      }
    }
  }

  static constexpr bool admissible(int i, int value) {
    if constexpr (Space == CodeSpace::A) {
      return value >= 1 && value <= i;
    } else if constexpr (Space == CodeSpace::B) {
      return value != 0 && value >= -i && value <= i;
    } else {
      if (i == 1) return value == 1;
      return value != 0 && value >= -i && value <= i;
    }
  }

  /// Number of admissible values at place i.
  static constexpr int radix(int i) {
    if constexpr (Space == CodeSpace::A) {
      return i;
    } else if constexpr (Space == CodeSpace::B) {
      return 2 * i;
    } else {
      return i == 1 ? 1 : 2 * i;
    }
  }

  int n() const { return static_cast<int>(entries_.size()); }
  int operator[](int i) const { return entries_[i - 1]; }
  std::span<const int> entries() const { return entries_; }

  friend bool operator==(const Code&, const Code&) = default;

 private:
  std::vector<int> entries_;
};

using CodeA = Code<CodeSpace::A>;
using CodeB = Code<CodeSpace::B>;
using CodeD = Code<CodeSpace::D>;

/// Max c = { i : c_i = i }.
inline IntSet max_set(std::span<const int> code) {
  IntSet out;
  for (int i = 1; i <= static_cast<int>(code.size()); ++i) {
    if (code[i - 1] == i) out.push_back(i);
  }
  return out;
}

template <CodeSpace S>
IntSet max_set(const Code<S>& code) {
  return max_set(code.entries());
}

namespace detail {

/// Values v_1..v_n such that v_i is the |c_i|-th smallest of {v_1..v_i}.
/// Peels from the right: v_n is the |c_n|-th smallest of [n], and so on.
inline std::vector<int> unrank_by_prefix_counts(std::span<const int> code) {
  const int n = static_cast<int>(code.size());
  std::vector<int> pool(n);
  for (int v = 1; v <= n; ++v) pool[v - 1] = v;
  std::vector<int> values(n);
  for (int i = n; i >= 1; --i) {
    const int k = code[i - 1] < 0 ? -code[i - 1] : code[i - 1];
    values[i - 1] = pool[k - 1];
    pool.erase(pool.begin() + (k - 1));
  }
  return values;
}

}  // namespace detail

}  // namespace coxstat
