#pragma once

// Finite groups S_n, B_n, D_n and their rank/unrank enumeration.
//
// Every element is ranked through a mixed-radix code: the Lehmer code for
// S_n, the signed Lehmer code for B_n and the E-code for D_n. Rank order is
// lexicographic in the code with c_1 most significant, so any rank interval
// can be walked without touching the rest of the group.

#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "coxstat/code.hpp"
#include "coxstat/error.hpp"
#include "coxstat/perm_a.hpp"
#include "coxstat/perm_b.hpp"
#include "coxstat/perm_d.hpp"

namespace coxstat {

enum class Family { A, B, D };

inline std::string_view family_name(Family f) {
  switch (f) {
    case Family::A: return "A";
    case Family::B: return "B";
    case Family::D: return "D";
  }
  return "?";
}

inline std::optional<Family> parse_family(std::string_view s) {
  if (s == "A" || s == "a") return Family::A;
  if (s == "B" || s == "b") return Family::B;
  if (s == "D" || s == "d") return Family::D;
  return std::nullopt;
}

/// Largest degree the enumerator accepts per family.
constexpr int max_degree(Family f) { return f == Family::A ? 9 : 8; }

constexpr int min_degree(Family f) { return f == Family::D ? 2 : 1; }

struct GroupId {
  Family family = Family::A;
  int n = 1;

  friend bool operator==(const GroupId&, const GroupId&) = default;
};

inline std::string to_string(const GroupId& g) {
  const char* letter = g.family == Family::A ? "S" : (g.family == Family::B ? "B" : "D");
  return std::string(letter) + "_" + std::to_string(g.n);
}

/// Throws DomainError below the family's minimum degree and SizeError above
/// the enumeration limit.
inline void validate(const GroupId& g) {
  if (g.n < min_degree(g.family)) {
    throw DomainError(to_string(g) + " is not supported: n must be >= " +
                      std::to_string(min_degree(g.family)));
  }
  if (g.n > max_degree(g.family)) {
    throw SizeError(to_string(g) + " is too large to enumerate (limit n <= " +
                    std::to_string(max_degree(g.family)) + ")");
  }
}

template <CodeSpace S>
std::uint64_t code_space_size(int n) {
  std::uint64_t size = 1;
  for (int i = 1; i <= n; ++i) size *= static_cast<std::uint64_t>(Code<S>::radix(i));
  return size;
}

inline std::uint64_t group_order(const GroupId& g) {
  switch (g.family) {
    case Family::A: return code_space_size<CodeSpace::A>(g.n);
    case Family::B: return code_space_size<CodeSpace::B>(g.n);
    case Family::D: return code_space_size<CodeSpace::D>(g.n);
  }
  return 0;
}

namespace detail {

/// Digit in [0, radix) for an admissible value at place i.
template <CodeSpace S>
int code_digit(int i, int value) {
  if constexpr (S == CodeSpace::A) {
    return value - 1;
  } else {
    if (S == CodeSpace::D && i == 1) return 0;
    return value > 0 ? value - 1 : i - value - 1;
  }
}

template <CodeSpace S>
int code_value(int i, int digit) {
  if constexpr (S == CodeSpace::A) {
    return digit + 1;
  } else {
    if (S == CodeSpace::D && i == 1) return 1;
    return digit < i ? digit + 1 : -(digit - i + 1);
  }
}

}  // namespace detail

template <CodeSpace S>
std::uint64_t rank_code(const Code<S>& c) {
  std::uint64_t r = 0;
  for (int i = 1; i <= c.n(); ++i) {
    r = r * static_cast<std::uint64_t>(Code<S>::radix(i)) +
        static_cast<std::uint64_t>(detail::code_digit<S>(i, c[i]));
  }
  return r;
}

template <CodeSpace S>
Code<S> unrank_code(int n, std::uint64_t r) {
  std::vector<int> entries(n);
  for (int i = n; i >= 1; --i) {
    const auto radix = static_cast<std::uint64_t>(Code<S>::radix(i));
    entries[i - 1] = detail::code_value<S>(i, static_cast<int>(r % radix));
    r /= radix;
  }
  return Code<S>(std::move(entries));
}

class GroupEnumerator {
 public:
  explicit GroupEnumerator(GroupId g) : group_(g) {
    validate(g);
    size_ = group_order(g);
  }

  const GroupId& group() const { return group_; }
  std::uint64_t size() const { return size_; }

  SignedPermutation unrank(std::uint64_t r) const {
    switch (group_.family) {
      case Family::A:
        return to_signed(lehmer_decode(unrank_code<CodeSpace::A>(group_.n, r)));
      case Family::B:
        return lehmer_B_decode(unrank_code<CodeSpace::B>(group_.n, r));
      case Family::D:
        return ecode_decode(unrank_code<CodeSpace::D>(group_.n, r)).perm();
    }
    return {};
  }

  /// Throws DomainError if s is not an element of the group.
  std::uint64_t rank(const SignedPermutation& s) const {
    if (s.n() != group_.n) throw DomainError("element degree does not match " + to_string(group_));
    switch (group_.family) {
      case Family::A: return rank_code(lehmer_encode(to_unsigned(s)));
      case Family::B: return rank_code(lehmer_B_encode(s));
      case Family::D: return rank_code(ecode_encode(DElement(s)));
    }
    return 0;
  }

  /// Calls f(rank, element) for every rank in [first, last).
  template <class F>
  void for_each(std::uint64_t first, std::uint64_t last, F&& f) const {
    for (std::uint64_t r = first; r < last; ++r) f(r, unrank(r));
  }

  template <class F>
  void for_each(F&& f) const {
    for_each(0, size_, std::forward<F>(f));
  }

 private:
  GroupId group_;
  std::uint64_t size_ = 0;
};

}  // namespace coxstat
