#pragma once

// Name-addressable registry of the integer and set-valued statistics, so the
// harness and the command line can pick statistics at run time.

#include <algorithm>
#include <array>
#include <optional>
#include <string>
#include <string_view>

#include "coxstat/group.hpp"
#include "coxstat/perm_a.hpp"
#include "coxstat/perm_b.hpp"
#include "coxstat/perm_d.hpp"

namespace coxstat {

enum class Statistic {
  inv,
  sor,
  cyc,
  rl_min,
  lr_max,
  nmin,
  reflection_length,
  inv_B,
  sor_B,
  nmin_B,
  nmax_B,
  rl_min_B,
  lr_max_B,
  reflection_length_B,
  cyc_B,
  negatives,
  inv_D,
  sor_D,
  sor_D_prime,
  nmin_D,
  l_tilde_D,
};

enum class SetStatistic { Cyc, Lmap, Rmil, Cyc_B, Lmap_B, Rmil_B };

namespace detail {

constexpr unsigned family_bit(Family f) { return 1u << static_cast<unsigned>(f); }
constexpr unsigned kOnA = family_bit(Family::A);
constexpr unsigned kOnBD = family_bit(Family::B) | family_bit(Family::D);
constexpr unsigned kOnD = family_bit(Family::D);

struct StatisticEntry {
  Statistic id;
  std::string_view name;
  std::string_view alias;
  unsigned families;
};

inline constexpr std::array<StatisticEntry, 21> kStatistics{{
    {Statistic::inv, "inv", "inv", kOnA},
    {Statistic::sor, "sor", "sor", kOnA},
    {Statistic::cyc, "cyc", "cyc", kOnA},
    {Statistic::rl_min, "rl-min", "rl_min", kOnA},
    {Statistic::lr_max, "lr-max", "lr_max", kOnA},
    {Statistic::nmin, "nmin", "nmin", kOnA},
    {Statistic::reflection_length, "l'", "lprime", kOnA},
    {Statistic::inv_B, "inv_B", "inv_B", kOnBD},
    {Statistic::sor_B, "sor_B", "sor_B", kOnBD},
    {Statistic::nmin_B, "nmin_B", "nmin_B", kOnBD},
    {Statistic::nmax_B, "nmax_B", "nmax_B", kOnBD},
    {Statistic::rl_min_B, "rl-min_B", "rl_min_B", kOnBD},
    {Statistic::lr_max_B, "lr-max_B", "lr_max_B", kOnBD},
    {Statistic::reflection_length_B, "l'_B", "lprime_B", kOnBD},
    {Statistic::cyc_B, "cyc_B", "cyc_B", kOnBD},
    {Statistic::negatives, "N", "neg", kOnBD},
    {Statistic::inv_D, "inv_D", "inv_D", kOnD},
    {Statistic::sor_D, "sor_D", "sor_D", kOnD},
    {Statistic::sor_D_prime, "sor'_D", "sorprime_D", kOnD},
    {Statistic::nmin_D, "nmin_D", "nmin_D", kOnD},
    {Statistic::l_tilde_D, "ltilde'_D", "ltilde_D", kOnD},
}};

struct SetStatisticEntry {
  SetStatistic id;
  std::string_view name;
  unsigned families;
};

inline constexpr std::array<SetStatisticEntry, 6> kSetStatistics{{
    {SetStatistic::Cyc, "Cyc", kOnA},
    {SetStatistic::Lmap, "Lmap", kOnA},
    {SetStatistic::Rmil, "Rmil", kOnA},
    {SetStatistic::Cyc_B, "Cyc_B", kOnBD},
    {SetStatistic::Lmap_B, "Lmap_B", kOnBD},
    {SetStatistic::Rmil_B, "Rmil_B", kOnBD},
}};

inline const StatisticEntry& entry(Statistic s) {
  return *std::find_if(kStatistics.begin(), kStatistics.end(),
                       [s](const StatisticEntry& e) { return e.id == s; });
}

inline const SetStatisticEntry& entry(SetStatistic s) {
  return *std::find_if(kSetStatistics.begin(), kSetStatistics.end(),
                       [s](const SetStatisticEntry& e) { return e.id == s; });
}

}  // namespace detail

inline std::string_view statistic_name(Statistic s) { return detail::entry(s).name; }
inline std::string_view statistic_name(SetStatistic s) { return detail::entry(s).name; }

/// Accepts the canonical name or its shell-friendly alias.
inline std::optional<Statistic> parse_statistic(std::string_view name) {
  for (const auto& e : detail::kStatistics) {
    if (e.name == name || e.alias == name) return e.id;
  }
  return std::nullopt;
}

inline std::optional<SetStatistic> parse_set_statistic(std::string_view name) {
  for (const auto& e : detail::kSetStatistics) {
    if (e.name == name) return e.id;
  }
  return std::nullopt;
}

/// B-statistics are defined on D_n as well, D_n being a subgroup of B_n.
inline bool defined_on(Statistic s, Family f) {
  return (detail::entry(s).families & detail::family_bit(f)) != 0;
}

inline bool defined_on(SetStatistic s, Family f) {
  return (detail::entry(s).families & detail::family_bit(f)) != 0;
}

/// Statistics available on a family, in registry order.
inline std::vector<Statistic> statistics_for(Family f) {
  std::vector<Statistic> out;
  for (const auto& e : detail::kStatistics) {
    if (e.families & detail::family_bit(f)) out.push_back(e.id);
  }
  return out;
}

inline std::vector<SetStatistic> set_statistics_for(Family f) {
  std::vector<SetStatistic> out;
  for (const auto& e : detail::kSetStatistics) {
    if (e.families & detail::family_bit(f)) out.push_back(e.id);
  }
  return out;
}

inline void require_defined(Statistic s, Family f) {
  if (!defined_on(s, f)) {
    throw DomainError("statistic " + std::string(statistic_name(s)) + " is not defined on family " +
                      std::string(family_name(f)));
  }
}

inline void require_defined(SetStatistic s, Family f) {
  if (!defined_on(s, f)) {
    throw DomainError("statistic " + std::string(statistic_name(s)) + " is not defined on family " +
                      std::string(family_name(f)));
  }
}

/// Type-A statistics reject barred letters; type-D statistics reject odd
/// elements.
inline int evaluate(Statistic s, const SignedPermutation& w) {
  switch (s) {
    case Statistic::inv: return inv(to_unsigned(w));
    case Statistic::sor: return sor(to_unsigned(w));
    case Statistic::cyc: return cyc(to_unsigned(w));
    case Statistic::rl_min: return rl_min(to_unsigned(w));
    case Statistic::lr_max: return lr_max(to_unsigned(w));
    case Statistic::nmin: return nmin(to_unsigned(w));
    case Statistic::reflection_length: return reflection_length(to_unsigned(w));
    case Statistic::inv_B: return inv_B(w);
    case Statistic::sor_B: return sor_B(w);
    case Statistic::nmin_B: return stats_B(w).nmin_B;
    case Statistic::nmax_B: return stats_B(w).nmax_B;
    case Statistic::rl_min_B: return stats_B(w).rl_min_B;
    case Statistic::lr_max_B: return stats_B(w).lr_max_B;
    case Statistic::reflection_length_B: return reflection_length_B(w);
    case Statistic::cyc_B: return cyc_B(w);
    case Statistic::negatives: return w.negatives();
    case Statistic::inv_D: return inv_D(DElement(w));
    case Statistic::sor_D: return sor_D(DElement(w));
    case Statistic::sor_D_prime: return sor_D_prime(DElement(w));
    case Statistic::nmin_D: return nmin_D(DElement(w));
    case Statistic::l_tilde_D: return l_tilde_D(DElement(w));
  }
  return 0;
}

inline IntSet evaluate(SetStatistic s, const SignedPermutation& w) {
  switch (s) {
    case SetStatistic::Cyc: return cycle_decomposition(to_unsigned(w)).minima();
    case SetStatistic::Lmap: return lmap_set(to_unsigned(w));
    case SetStatistic::Rmil: return rl_min_set(to_unsigned(w));
    case SetStatistic::Cyc_B: return signed_cycle_decomposition(w).balanced_minima();
    case SetStatistic::Lmap_B: return lmap_B_set(w);
    case SetStatistic::Rmil_B: return rmil_B_set(w);
  }
  return {};
}

}  // namespace coxstat
