#pragma once

// Breadth-first word lengths in Cayley graphs of S_n, B_n, D_n. Used as an
// independent oracle for the reflection-length and length statistics.

#include <cstdint>
#include <deque>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "coxstat/error.hpp"
#include "coxstat/group.hpp"

namespace coxstat {

enum class GeneratingSet {
  TA,  ///< all transpositions of S_n
  SA,  ///< adjacent transpositions of S_n
  TB,  ///< reflections of B_n
  SB,  ///< Coxeter generators (1bar 1), (1 2), ..., (n-1 n)
  TD,  ///< t_ij with |i| < j, plus t_{jbar j} = (jbar j)(1bar 1)
  SD,  ///< Coxeter generators (1bar 2), (1 2), ..., (n-1 n)
};

inline std::string_view generating_set_name(GeneratingSet s) {
  switch (s) {
    case GeneratingSet::TA: return "T^A";
    case GeneratingSet::SA: return "S^A";
    case GeneratingSet::TB: return "T^B";
    case GeneratingSet::SB: return "S^B";
    case GeneratingSet::TD: return "T^D";
    case GeneratingSet::SD: return "S^D";
  }
  return "?";
}

inline std::optional<GeneratingSet> parse_generating_set(std::string_view s) {
  if (s == "T^A" || s == "TA") return GeneratingSet::TA;
  if (s == "S^A" || s == "SA") return GeneratingSet::SA;
  if (s == "T^B" || s == "TB") return GeneratingSet::TB;
  if (s == "S^B" || s == "SB") return GeneratingSet::SB;
  if (s == "T^D" || s == "TD") return GeneratingSet::TD;
  if (s == "S^D" || s == "SD") return GeneratingSet::SD;
  return std::nullopt;
}

inline Family family_of(GeneratingSet s) {
  switch (s) {
    case GeneratingSet::TA:
    case GeneratingSet::SA: return Family::A;
    case GeneratingSet::TB:
    case GeneratingSet::SB: return Family::B;
    case GeneratingSet::TD:
    case GeneratingSet::SD: return Family::D;
  }
  return Family::A;
}

inline std::vector<SignedPermutation> generators(GeneratingSet set, int n) {
  std::vector<SignedPermutation> out;
  auto add = [&](int a, int j) { out.push_back(as_permutation(TranspositionB(a, j), n)); };
  switch (set) {
    case GeneratingSet::TA:
      for (int j = 2; j <= n; ++j)
        for (int i = 1; i < j; ++i) add(i, j);
      break;
    case GeneratingSet::SA:
      for (int i = 1; i < n; ++i) add(i, i + 1);
      break;
    case GeneratingSet::TB:
      for (int j = 1; j <= n; ++j) {
        for (int i = 1; i < j; ++i) add(i, j);
        for (int i = 1; i <= j; ++i) add(-i, j);
      }
      break;
    case GeneratingSet::SB:
      add(-1, 1);
      for (int i = 1; i < n; ++i) add(i, i + 1);
      break;
    case GeneratingSet::TD:
      for (int j = 2; j <= n; ++j) {
        for (int i = 1; i < j; ++i) {
          add(i, j);
          add(-i, j);
        }
        std::vector<int> w(n);
        for (int k = 0; k < n; ++k) w[k] = k + 1;
        w[0] = -1;
        w[j - 1] = -j;
        out.emplace_back(std::move(w));
      }
      break;
    case GeneratingSet::SD:
      if (n >= 2) add(-1, 2);
      for (int i = 1; i < n; ++i) add(i, i + 1);
      break;
  }
  return out;
}

/// Groups above this order are refused by the BFS oracle.
inline constexpr std::uint64_t kMaxCayleyOrder = 100000;

/// Distance from the identity to every group element, stored flat by rank.
class CayleyDistances {
 public:
  CayleyDistances(GroupId g, GeneratingSet set) : enumerator_(g), set_(set) {
    if (family_of(set) != g.family) {
      throw DomainError(std::string(generating_set_name(set)) + " does not generate " + to_string(g));
    }
    if (enumerator_.size() > kMaxCayleyOrder) {
      throw SizeError(to_string(g) + " has " + std::to_string(enumerator_.size()) +
                      " elements; the Cayley oracle stops at " + std::to_string(kMaxCayleyOrder));
    }
    const auto gens = generators(set, g.n);
    distance_.assign(enumerator_.size(), -1);
    std::deque<std::uint64_t> queue;
    const std::uint64_t origin = enumerator_.rank(SignedPermutation::identity(g.n));
    distance_[origin] = 0;
    queue.push_back(origin);
    while (!queue.empty()) {
      const std::uint64_t r = queue.front();
      queue.pop_front();
      const SignedPermutation w = enumerator_.unrank(r);
      for (const auto& t : gens) {
        const std::uint64_t next = enumerator_.rank(compose(w, t));
        if (distance_[next] < 0) {
          distance_[next] = distance_[r] + 1;
          queue.push_back(next);
        }
      }
    }
  }

  const GroupId& group() const { return enumerator_.group(); }
  GeneratingSet generating_set() const { return set_; }

  int distance(const SignedPermutation& target) const { return distance_[enumerator_.rank(target)]; }
  int distance_by_rank(std::uint64_t r) const { return distance_[r]; }

  /// -1 marks an element the generators never reached.
  const std::vector<int>& table() const { return distance_; }

 private:
  GroupEnumerator enumerator_;
  GeneratingSet set_;
  std::vector<int> distance_;
};

inline int cayley_distance(const GroupId& g, GeneratingSet set, const SignedPermutation& target) {
  return CayleyDistances(g, set).distance(target);
}

}  // namespace coxstat
