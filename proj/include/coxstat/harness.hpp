#pragma once

// Exhaustive joint distributions and transport checks over S_n, B_n, D_n.
//
// Every routine takes a worker count. Partial results are built over
// contiguous rank intervals and merged in interval order, so the output does
// not depend on the number of workers.

#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "coxstat/group.hpp"
#include "coxstat/parallel.hpp"
#include "coxstat/qpoly.hpp"
#include "coxstat/statistics.hpp"

namespace coxstat {

/// sum over the group of q^{s1} t^{s2}
inline BivariatePolynomial joint_distribution(const GroupId& g, Statistic s1, Statistic s2,
                                              int workers = 1) {
  require_defined(s1, g.family);
  require_defined(s2, g.family);
  const GroupEnumerator groups(g);
  return parallel_reduce<BivariatePolynomial>(
      groups.size(), workers,
      [&](std::uint64_t first, std::uint64_t last) {
        BivariatePolynomial part;
        groups.for_each(first, last, [&](std::uint64_t, const SignedPermutation& w) {
          part.add_term(static_cast<unsigned>(evaluate(s1, w)), static_cast<unsigned>(evaluate(s2, w)), 1);
        });
        return part;
      },
      [](BivariatePolynomial& acc, const BivariatePolynomial& part) { acc += part; });
}

/// sum over the group of q^{s}
inline BivariatePolynomial distribution(const GroupId& g, Statistic s, int workers = 1) {
  require_defined(s, g.family);
  const GroupEnumerator groups(g);
  return parallel_reduce<BivariatePolynomial>(
      groups.size(), workers,
      [&](std::uint64_t first, std::uint64_t last) {
        BivariatePolynomial part;
        groups.for_each(first, last, [&](std::uint64_t, const SignedPermutation& w) {
          part.add_term(static_cast<unsigned>(evaluate(s, w)), 0, 1);
        });
        return part;
      },
      [](BivariatePolynomial& acc, const BivariatePolynomial& part) { acc += part; });
}

using SetPair = std::pair<IntSet, IntSet>;

/// Multiset of ordered pairs of sets.
struct SetPairDistribution {
  std::map<SetPair, std::uint64_t> counts;

  std::uint64_t total() const {
    std::uint64_t sum = 0;
    for (const auto& [pair, c] : counts) sum += c;
    return sum;
  }

  void merge(const SetPairDistribution& other) {
    for (const auto& [pair, c] : other.counts) counts[pair] += c;
  }

  friend bool operator==(const SetPairDistribution&, const SetPairDistribution&) = default;
};

inline SetPairDistribution set_pair_distribution(const GroupId& g, SetStatistic s1, SetStatistic s2,
                                                 int workers = 1) {
  require_defined(s1, g.family);
  require_defined(s2, g.family);
  const GroupEnumerator groups(g);
  return parallel_reduce<SetPairDistribution>(
      groups.size(), workers,
      [&](std::uint64_t first, std::uint64_t last) {
        SetPairDistribution part;
        groups.for_each(first, last, [&](std::uint64_t, const SignedPermutation& w) {
          ++part.counts[SetPair{evaluate(s1, w), evaluate(s2, w)}];
        });
        return part;
      },
      [](SetPairDistribution& acc, const SetPairDistribution& part) { acc.merge(part); });
}

enum class Bijection { phi, psi, rho };

inline std::string_view bijection_name(Bijection b) {
  switch (b) {
    case Bijection::phi: return "phi";
    case Bijection::psi: return "psi";
    case Bijection::rho: return "rho";
  }
  return "?";
}

inline std::optional<Bijection> parse_bijection(std::string_view s) {
  if (s == "phi") return Bijection::phi;
  if (s == "psi") return Bijection::psi;
  if (s == "rho") return Bijection::rho;
  return std::nullopt;
}

inline Family family_of(Bijection b) {
  switch (b) {
    case Bijection::phi: return Family::A;
    case Bijection::psi: return Family::B;
    case Bijection::rho: return Family::D;
  }
  return Family::A;
}

inline SignedPermutation apply_bijection(Bijection b, const SignedPermutation& w, bool inverse = false) {
  switch (b) {
    case Bijection::phi: {
      const Permutation s = to_unsigned(w);
      return to_signed(inverse ? phi_inverse(s) : phi(s));
    }
    case Bijection::psi: return inverse ? psi_inverse(w) : psi(w);
    case Bijection::rho: {
      const DElement d(w);
      return (inverse ? rho_inverse(d) : rho(d)).perm();
    }
  }
  return w;
}

/// Statistic pairs a bijection carries from its source to its image:
/// source[k](sigma) must equal image[k](bijection(sigma)).
struct TransportClaim {
  std::vector<Statistic> source;
  std::vector<Statistic> image;
  std::vector<SetStatistic> source_sets;
  std::vector<SetStatistic> image_sets;
};

inline TransportClaim transport_claim(Bijection b) {
  switch (b) {
    case Bijection::phi:
      return {{Statistic::inv, Statistic::rl_min, Statistic::lr_max},
              {Statistic::sor, Statistic::cyc, Statistic::lr_max},
              {SetStatistic::Lmap},
              {SetStatistic::Lmap}};
    case Bijection::psi:
      return {{Statistic::inv_B, Statistic::nmin_B},
              {Statistic::sor_B, Statistic::reflection_length_B},
              {SetStatistic::Lmap_B, SetStatistic::Rmil_B},
              {SetStatistic::Lmap_B, SetStatistic::Cyc_B}};
    case Bijection::rho:
      return {{Statistic::inv_D, Statistic::nmin_D}, {Statistic::sor_D, Statistic::l_tilde_D}, {}, {}};
  }
  return {};
}

struct Counterexample {
  SignedPermutation source;
  SignedPermutation image;
  std::string reason;
};

struct TransportReport {
  Bijection bijection = Bijection::phi;
  GroupId group;
  bool passed = true;
  std::uint64_t checked = 0;
  std::optional<Counterexample> counterexample;
};

namespace detail {

inline std::string format_word(std::span<const int> w) {
  std::string out;
  for (int v : w) {
    if (!out.empty()) out += ' ';
    out += std::to_string(v);
  }
  return out;
}

inline std::string format_set(const IntSet& s) { return "{" + format_word(s) + "}"; }

/// Empty when the claim holds at w.
inline std::string transport_failure(Bijection b, const TransportClaim& claim, const SignedPermutation& w,
                                     const SignedPermutation& image) {
  for (std::size_t k = 0; k < claim.source.size(); ++k) {
    const int lhs = evaluate(claim.source[k], w);
    const int rhs = evaluate(claim.image[k], image);
    if (lhs != rhs) {
      return std::string(statistic_name(claim.source[k])) + " = " + std::to_string(lhs) + " but " +
             std::string(statistic_name(claim.image[k])) + " of image = " + std::to_string(rhs);
    }
  }
  for (std::size_t k = 0; k < claim.source_sets.size(); ++k) {
    const IntSet lhs = evaluate(claim.source_sets[k], w);
    const IntSet rhs = evaluate(claim.image_sets[k], image);
    if (lhs != rhs) {
      return std::string(statistic_name(claim.source_sets[k])) + " = " + format_set(lhs) + " but " +
             std::string(statistic_name(claim.image_sets[k])) + " of image = " + format_set(rhs);
    }
  }
  if (apply_bijection(b, image, /*inverse=*/true) != w) return "inverse map does not return the source";
  return {};
}

}  // namespace detail

/// Checks the transport claim at every element, that the inverse map undoes
/// the bijection, and that no image is hit twice. Failures are reported, not
/// thrown.
inline TransportReport verify_transport(const GroupId& g, Bijection b, int workers = 1) {
  if (family_of(b) != g.family) {
    throw DomainError(std::string(bijection_name(b)) + " acts on family " + std::string(family_name(family_of(b))) +
                      ", not " + std::string(family_name(g.family)));
  }
  const GroupEnumerator groups(g);
  const TransportClaim claim = transport_claim(b);

  struct Part {
    std::uint64_t checked = 0;
    std::vector<std::uint64_t> image_ranks;
    std::optional<Counterexample> first_failure;
  };

  Part all = parallel_reduce<Part>(
      groups.size(), workers,
      [&](std::uint64_t first, std::uint64_t last) {
        Part part;
        part.image_ranks.reserve(last - first);
        groups.for_each(first, last, [&](std::uint64_t, const SignedPermutation& w) {
          const SignedPermutation image = apply_bijection(b, w);
          ++part.checked;
          part.image_ranks.push_back(groups.rank(image));
          if (!part.first_failure) {
            std::string why = detail::transport_failure(b, claim, w, image);
            if (!why.empty()) part.first_failure = Counterexample{w, image, std::move(why)};
          }
        });
        return part;
      },
      [](Part& acc, Part&& part) {
        acc.checked += part.checked;
        acc.image_ranks.insert(acc.image_ranks.end(), part.image_ranks.begin(), part.image_ranks.end());
        if (!acc.first_failure) acc.first_failure = std::move(part.first_failure);
      });

  TransportReport report{b, g, true, all.checked, std::move(all.first_failure)};
  if (!report.counterexample) {
    std::vector<bool> hit(groups.size(), false);
    for (std::uint64_t r = 0; r < all.image_ranks.size(); ++r) {
      const std::uint64_t target = all.image_ranks[r];
      if (hit[target]) {
        const SignedPermutation w = groups.unrank(r);
        report.counterexample = Counterexample{w, groups.unrank(target), "image is hit twice"};
        break;
      }
      hit[target] = true;
    }
  }
  report.passed = !report.counterexample.has_value();
  return report;
}

}  // namespace coxstat
