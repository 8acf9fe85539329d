#pragma once

// Named exhaustive checks of the equidistribution and generating-function
// identities. Each check enumerates one group and returns a report; a failed
// identity is report data, never an exception.

#include <array>
#include <cstdint>
#include <functional>
#include <optional>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "coxstat/cayley.hpp"
#include "coxstat/harness.hpp"

namespace coxstat {

struct CheckReport {
  std::string check;
  GroupId group;
  bool passed = true;
  std::uint64_t elements = 0;
  /// Labelled polynomials computed by the check, e.g. {"inv,rl-min", ...}.
  std::vector<std::pair<std::string, BivariatePolynomial>> polynomials;
  std::vector<std::string> failures;

  void fail(std::string why) {
    passed = false;
    failures.push_back(std::move(why));
  }
};

struct CheckInfo {
  std::string_view name;
  Family family;
  int min_n;
  int max_n;
  std::string_view summary;
};

inline constexpr std::array<CheckInfo, 18> kChecks{{
    {"type-a-gf", Family::A, 1, 9, "(inv,rl-min) and (sor,cyc) both equal t(t+q)...(t+q+...+q^(n-1))"},
    {"type-a-four-pairs", Family::A, 1, 9, "(sor,cyc), (inv,rl-min), (inv,lr-max), (sor,lr-max) share one distribution"},
    {"type-a-transport", Family::A, 1, 9, "phi carries (inv,rl-min,Lmap) to (sor,cyc,Lmap) and is a bijection"},
    {"type-a-set-pairs", Family::A, 1, 9, "the six set-valued pairs over Cyc, Lmap, Rmil are equidistributed"},
    {"type-a-codes", Family::A, 1, 9, "Lehmer, A- and B-code round trips and the code formulas for the statistics"},
    {"type-a-cayley", Family::A, 1, 8, "BFS distance: T^A gives n - cyc, S^A gives inv"},
    {"type-b-gf", Family::B, 1, 8, "(inv_B,nmin_B) and (sor_B,l'_B) both equal prod (1 + t[2i]_q - t)"},
    {"type-b-four-pairs", Family::B, 1, 8, "(sor_B,l'_B), (inv_B,nmin_B), (inv_B,nmax_B), (sor_B,nmax_B) share one distribution"},
    {"type-b-transport", Family::B, 1, 8, "psi carries (inv_B,Lmap_B,Rmil_B) to (sor_B,Lmap_B,Cyc_B) and is a bijection"},
    {"type-b-set-pairs", Family::B, 1, 8, "the six set-valued pairs over Cyc_B, Lmap_B, Rmil_B are equidistributed"},
    {"type-b-codes", Family::B, 1, 8, "signed Lehmer, A- and B-code round trips and the code formulas"},
    {"type-b-cayley", Family::B, 1, 6, "BFS distance: T^B gives l'_B = n - cyc_B, S^B gives inv_B"},
    {"type-d-sor-cosort", Family::D, 2, 8, "sor_D = sor'_D pointwise; the T^D factorization multiplies back"},
    {"type-d-bivariate", Family::D, 2, 8, "(inv_D,nmin_D) and (sor_D,l~'_D) both equal prod (1 + q^r t + q t [2r]_q)"},
    {"type-d-mahonian", Family::D, 2, 8, "inv_D and sor_D both have generating function [n]_q prod [2r]_q"},
    {"type-d-transport", Family::D, 2, 8, "rho carries (inv_D,nmin_D) to (sor_D,l~'_D) and is a bijection"},
    {"type-d-codes", Family::D, 2, 8, "E- and F-code round trips and the code formulas"},
    {"type-d-cayley", Family::D, 2, 6, "BFS distance: T^D gives l~'_D, S^D gives inv_D"},
}};

inline const CheckInfo* find_check(std::string_view name) {
  for (const auto& c : kChecks) {
    if (c.name == name) return &c;
  }
  return nullptr;
}

namespace detail {

/// Terms whose coefficients differ, e.g. "q^2*t: got 3, expected 1".
inline std::string polynomial_residual(const BivariatePolynomial& got, const BivariatePolynomial& expected) {
  std::string out;
  auto note = [&](const Exponent& e) {
    const auto a = got.coefficient(e.q, e.t);
    const auto b = expected.coefficient(e.q, e.t);
    if (a == b) return;
    if (!out.empty()) out += "; ";
    std::string term = BivariatePolynomial::monomial(e.q, e.t).to_string();
    out += term + ": got " + std::to_string(a) + ", expected " + std::to_string(b);
  };
  for (const auto& [e, c] : got.terms()) note(e);
  for (const auto& [e, c] : expected.terms()) {
    if (got.coefficient(e.q, e.t) == 0) note(e);
  }
  return out;
}

inline std::string pair_label(Statistic a, Statistic b) {
  return std::string(statistic_name(a)) + "," + std::string(statistic_name(b));
}

/// All pairs' joint distributions must agree with each other and, when given,
/// with `expected`.
inline void compare_joint(CheckReport& report, const GroupId& g,
                          std::span<const std::pair<Statistic, Statistic>> pairs,
                          const std::optional<BivariatePolynomial>& expected, int workers) {
  std::optional<BivariatePolynomial> reference = expected;
  std::string reference_label = "expected";
  if (expected) report.polynomials.emplace_back("expected", *expected);
  for (const auto& [a, b] : pairs) {
    BivariatePolynomial got = joint_distribution(g, a, b, workers);
    const std::string label = pair_label(a, b);
    if (!reference) {
      reference = got;
      reference_label = label;
    } else if (got != *reference) {
      report.fail(label + " differs from " + reference_label + ": " + polynomial_residual(got, *reference));
    }
    report.polynomials.emplace_back(label, std::move(got));
  }
}

inline void record_transport(CheckReport& report, const TransportReport& t) {
  report.elements = t.checked;
  if (!t.passed) {
    const auto& c = *t.counterexample;
    report.fail(std::string(bijection_name(t.bijection)) + " fails at [" + format_word(c.source.images()) +
                "] -> [" + format_word(c.image.images()) + "]: " + c.reason);
  }
}

inline std::string describe(const SignedPermutation& w) { return "[" + format_word(w.images()) + "]"; }

template <class Code>
std::string describe(const Code& c) {
  return "(" + format_word(c.entries()) + ")";
}

inline int code_index_sum(std::span<const int> code, int negative_penalty) {
  int total = 0;
  for (int i = 1; i <= static_cast<int>(code.size()); ++i) {
    const int c = code[i - 1];
    total += i - c - (c < 0 ? negative_penalty : 0);
  }
  return total;
}


inline void check_codes_A(CheckReport& report, int n) {
  const GroupEnumerator groups(GroupId{Family::A, n});
  groups.for_each([&](std::uint64_t, const SignedPermutation& w) {
    if (!report.passed) return;
    const Permutation s = to_unsigned(w);
    const CodeA leh = lehmer_encode(s);
    const CodeA a = acode_encode(s);
    const CodeA b = bcode_encode(s);
    if (lehmer_decode(leh) != s) report.fail("Lehmer round trip fails at " + describe(w));
    if (acode_decode(a) != s) report.fail("A-code round trip fails at " + describe(w));
    if (bcode_decode(b) != s) report.fail("B-code round trip fails at " + describe(w));
    if (rl_min_set(s) != max_set(a) || lmap_set(s) != rl_min_set(a.entries())) {
      report.fail("(Rmil,Lmap) != (Max,Rmil)(A-code) at " + describe(w));
    }
    if (cycle_decomposition(s).minima() != max_set(b) || lmap_set(s) != rl_min_set(b.entries())) {
      report.fail("(Cyc,Lmap) != (Max,Rmil)(B-code) at " + describe(w));
    }
    if (inv(s) != code_index_sum(a.entries(), 0) || rl_min(s) != static_cast<int>(max_set(a).size())) {
      report.fail("(inv,rl-min) disagrees with the A-code formula at " + describe(w));
    }
    if (sor(s) != code_index_sum(b.entries(), 0) || cyc(s) != static_cast<int>(max_set(b).size())) {
      report.fail("(sor,cyc) disagrees with the B-code formula at " + describe(w));
    }
    const FactorizationA f = sort_factorization(s);
    if (product(f, n) != s) report.fail("sorting factorization does not multiply back at " + describe(w));
    for (std::size_t k = 0; k < f.factors.size(); ++k) {
      if (f.factors[k].i >= f.factors[k].j || (k > 0 && f.factors[k - 1].j >= f.factors[k].j)) {
        report.fail("sorting factorization is not increasing at " + describe(w));
      }
    }
  });
  const std::uint64_t codes = code_space_size<CodeSpace::A>(n);
  for (std::uint64_t r = 0; r < codes && report.passed; ++r) {
    const CodeA c = unrank_code<CodeSpace::A>(n, r);
    if (lehmer_encode(lehmer_decode(c)) != c) report.fail("Lehmer code round trip fails at " + describe(c));
    if (acode_encode(acode_decode(c)) != c) report.fail("A-code round trip fails at " + describe(c));
    if (bcode_encode(bcode_decode(c)) != c) report.fail("B-code round trip fails at " + describe(c));
  }
  report.elements = groups.size() + codes;
}

inline void check_codes_B(CheckReport& report, int n) {
  const GroupEnumerator groups(GroupId{Family::B, n});
  groups.for_each([&](std::uint64_t, const SignedPermutation& s) {
    if (!report.passed) return;
    const CodeB leh = lehmer_B_encode(s);
    const CodeB a = acode_B_encode(s);
    const CodeB b = bcode_B_encode(s);
    if (lehmer_B_decode(leh) != s) report.fail("Lehmer_B round trip fails at " + describe(s));
    if (acode_B_decode(a) != s) report.fail("A-code_B round trip fails at " + describe(s));
    if (bcode_B_decode(b) != s) report.fail("B-code_B round trip fails at " + describe(s));
    if (rmil_B_set(s) != max_set(a) || lmap_B_set(s) != rmil_B_set(a.entries())) {
      report.fail("(Rmil_B,Lmap_B) != (Max,Rmil_B)(A-code) at " + describe(s));
    }
    if (signed_cycle_decomposition(s).balanced_minima() != max_set(b) || lmap_B_set(s) != rmil_B_set(b.entries())) {
      report.fail("(Cyc_B,Lmap_B) != (Max,Rmil_B)(B-code) at " + describe(s));
    }
    const StatsB st = stats_B(s);
    if (inv_B(s) != code_index_sum(a.entries(), 1) || st.nmin_B != n - static_cast<int>(max_set(a).size())) {
      report.fail("(inv_B,nmin_B) disagrees with the A-code formula at " + describe(s));
    }
    if (sor_B(s) != code_index_sum(b.entries(), 1) ||
        reflection_length_B(s) != n - static_cast<int>(max_set(b).size())) {
      report.fail("(sor_B,l'_B) disagrees with the B-code formula at " + describe(s));
    }
    if (st.nmin_B != n - st.rl_min_B || st.nmax_B != n - st.lr_max_B) {
      report.fail("nmin_B/nmax_B complement identities fail at " + describe(s));
    }
    if (st.nmin_B != stats_B(inverse(s)).nmax_B) report.fail("nmin_B != nmax_B of inverse at " + describe(s));
    if (product(selection_sort_factorization(s), n) != s) {
      report.fail("selection-sort factorization does not multiply back at " + describe(s));
    }
  });
  const std::uint64_t codes = code_space_size<CodeSpace::B>(n);
  for (std::uint64_t r = 0; r < codes && report.passed; ++r) {
    const CodeB c = unrank_code<CodeSpace::B>(n, r);
    if (lehmer_B_encode(lehmer_B_decode(c)) != c) report.fail("Lehmer_B code round trip fails at " + describe(c));
    if (acode_B_encode(acode_B_decode(c)) != c) report.fail("A-code_B round trip fails at " + describe(c));
    if (bcode_B_encode(bcode_B_decode(c)) != c) report.fail("B-code_B round trip fails at " + describe(c));
  }
  report.elements = groups.size() + codes;
}

inline void check_codes_D(CheckReport& report, int n) {
  const GroupEnumerator groups(GroupId{Family::D, n});
  groups.for_each([&](std::uint64_t, const SignedPermutation& w) {
    if (!report.passed) return;
    const DElement s(w);
    const CodeD e = ecode_encode(s);
    const CodeD f = fcode_encode(s);
    if (ecode_decode(e) != s) report.fail("E-code round trip fails at " + describe(w));
    if (fcode_decode(f) != s) report.fail("F-code round trip fails at " + describe(w));
    if (inv_D(s) != code_index_sum(e.entries(), 2) || nmin_D(s) != n - static_cast<int>(max_set(e).size())) {
      report.fail("(inv_D,nmin_D) disagrees with the E-code formula at " + describe(w));
    }
    if (sor_D(s) != code_index_sum(f.entries(), 2)) {
      report.fail("sor_D disagrees with the F-code formula at " + describe(w));
    }
    std::vector<GeneratorTD> full;
    for (int r = 1; r <= n; ++r) full.emplace_back(f[r], r);
    if (product(full, n) != s) report.fail("t_{f_1 1}...t_{f_n n} does not multiply back at " + describe(w));
  });
  const std::uint64_t codes = code_space_size<CodeSpace::D>(n);
  for (std::uint64_t r = 0; r < codes && report.passed; ++r) {
    const CodeD c = unrank_code<CodeSpace::D>(n, r);
    if (ecode_encode(ecode_decode(c)) != c) report.fail("E-code round trip fails at " + describe(c));
    if (fcode_encode(fcode_decode(c)) != c) report.fail("F-code round trip fails at " + describe(c));
  }
  report.elements = groups.size() + codes;
}

inline void check_cayley(CheckReport& report, const GroupId& g, GeneratingSet reflections, Statistic reflection_stat,
                         GeneratingSet simple, Statistic length_stat) {
  const CayleyDistances far(g, reflections);
  const CayleyDistances near(g, simple);
  const GroupEnumerator groups(g);
  groups.for_each([&](std::uint64_t r, const SignedPermutation& w) {
    if (!report.passed) return;
    if (far.distance_by_rank(r) != evaluate(reflection_stat, w)) {
      report.fail(std::string(generating_set_name(reflections)) + " distance " +
                  std::to_string(far.distance_by_rank(r)) + " != " + std::string(statistic_name(reflection_stat)) +
                  " = " + std::to_string(evaluate(reflection_stat, w)) + " at " + describe(w));
    }
    if (near.distance_by_rank(r) != evaluate(length_stat, w)) {
      report.fail(std::string(generating_set_name(simple)) + " distance " + std::to_string(near.distance_by_rank(r)) +
                  " != " + std::string(statistic_name(length_stat)) + " = " +
                  std::to_string(evaluate(length_stat, w)) + " at " + describe(w));
    }
  });
  report.elements = groups.size();
}

inline void check_set_pairs(CheckReport& report, const GroupId& g, SetStatistic cyc, SetStatistic lmap,
                            SetStatistic rmil, int workers) {
  const std::array<std::pair<SetStatistic, SetStatistic>, 6> pairs{{
      {cyc, rmil}, {cyc, lmap}, {rmil, lmap}, {lmap, rmil}, {lmap, cyc}, {rmil, cyc}}};
  const SetPairDistribution reference = set_pair_distribution(g, pairs[0].first, pairs[0].second, workers);
  for (std::size_t k = 1; k < pairs.size(); ++k) {
    if (set_pair_distribution(g, pairs[k].first, pairs[k].second, workers) != reference) {
      report.fail("(" + std::string(statistic_name(pairs[k].first)) + "," +
                  std::string(statistic_name(pairs[k].second)) + ") is not distributed like (" +
                  std::string(statistic_name(pairs[0].first)) + "," + std::string(statistic_name(pairs[0].second)) +
                  ")");
    }
  }
  if (reference.total() != group_order(g)) report.fail("set-pair multiset does not cover the group");
  report.elements = reference.total();
}

}  // namespace detail

/// Runs the named check at degree n. Throws DomainError for an unknown name
/// and DomainError/SizeError for an unsupported degree.
inline CheckReport run_check(std::string_view name, int n, int workers = 1) {
  const CheckInfo* info = find_check(name);
  if (!info) throw DomainError("unknown check '" + std::string(name) + "'");
  if (n < info->min_n || n > info->max_n) {
    throw SizeError("check " + std::string(name) + " supports n in [" + std::to_string(info->min_n) + "," +
                    std::to_string(info->max_n) + "], got " + std::to_string(n));
  }
  const GroupId g{info->family, n};
  CheckReport report;
  report.check = std::string(name);
  report.group = g;
  report.elements = group_order(g);

  using P = std::pair<Statistic, Statistic>;
  using S = Statistic;
  if (name == "type-a-gf") {
    const std::array<P, 2> pairs{{{S::inv, S::rl_min}, {S::sor, S::cyc}}};
    detail::compare_joint(report, g, pairs, gf_type_a(n), workers);
  } else if (name == "type-a-four-pairs") {
    const std::array<P, 4> pairs{{{S::sor, S::cyc}, {S::inv, S::rl_min}, {S::inv, S::lr_max}, {S::sor, S::lr_max}}};
    detail::compare_joint(report, g, pairs, std::nullopt, workers);
  } else if (name == "type-a-transport") {
    detail::record_transport(report, verify_transport(g, Bijection::phi, workers));
  } else if (name == "type-a-set-pairs") {
    detail::check_set_pairs(report, g, SetStatistic::Cyc, SetStatistic::Lmap, SetStatistic::Rmil, workers);
  } else if (name == "type-a-codes") {
    detail::check_codes_A(report, n);
  } else if (name == "type-a-cayley") {
    detail::check_cayley(report, g, GeneratingSet::TA, S::reflection_length, GeneratingSet::SA, S::inv);
  } else if (name == "type-b-gf") {
    const std::array<P, 2> pairs{{{S::inv_B, S::nmin_B}, {S::sor_B, S::reflection_length_B}}};
    detail::compare_joint(report, g, pairs, gf_type_b(n), workers);
  } else if (name == "type-b-four-pairs") {
    const std::array<P, 4> pairs{{{S::sor_B, S::reflection_length_B},
                                  {S::inv_B, S::nmin_B},
                                  {S::inv_B, S::nmax_B},
                                  {S::sor_B, S::nmax_B}}};
    detail::compare_joint(report, g, pairs, std::nullopt, workers);
  } else if (name == "type-b-transport") {
    detail::record_transport(report, verify_transport(g, Bijection::psi, workers));
  } else if (name == "type-b-set-pairs") {
    detail::check_set_pairs(report, g, SetStatistic::Cyc_B, SetStatistic::Lmap_B, SetStatistic::Rmil_B, workers);
  } else if (name == "type-b-codes") {
    detail::check_codes_B(report, n);
  } else if (name == "type-b-cayley") {
    detail::check_cayley(report, g, GeneratingSet::TB, S::reflection_length_B, GeneratingSet::SB, S::inv_B);
  } else if (name == "type-d-sor-cosort") {
    const GroupEnumerator groups(g);
    groups.for_each([&](std::uint64_t, const SignedPermutation& w) {
      if (!report.passed) return;
      const DElement s(w);
      if (sor_D(s) != sor_D_prime(s)) {
        report.fail("sor_D = " + std::to_string(sor_D(s)) + " but sor'_D = " + std::to_string(sor_D_prime(s)) +
                    " at " + detail::describe(w));
      }
      if (product(cosort_factorization(s), n) != s) {
        report.fail("T^D factorization does not multiply back at " + detail::describe(w));
      }
    });
  } else if (name == "type-d-bivariate") {
    const std::array<P, 2> pairs{{{S::inv_D, S::nmin_D}, {S::sor_D, S::l_tilde_D}}};
    detail::compare_joint(report, g, pairs, gf_type_d_bivariate(n), workers);
  } else if (name == "type-d-mahonian") {
    const BivariatePolynomial expected = gf_type_d_univariate(n);
    report.polynomials.emplace_back("expected", expected);
    for (S s : {S::inv_D, S::sor_D}) {
      BivariatePolynomial got = distribution(g, s, workers);
      if (got != expected) {
        report.fail(std::string(statistic_name(s)) + ": " + detail::polynomial_residual(got, expected));
      }
      report.polynomials.emplace_back(std::string(statistic_name(s)), std::move(got));
    }
    for (const auto& [a, b] : std::array<P, 2>{{{S::inv_D, S::nmin_D}, {S::sor_D, S::l_tilde_D}}}) {
      const BivariatePolynomial got = joint_distribution(g, a, b, workers).eval_t1();
      if (got != expected) {
        report.fail("t->1 of " + detail::pair_label(a, b) + ": " + detail::polynomial_residual(got, expected));
      }
    }
  } else if (name == "type-d-transport") {
    detail::record_transport(report, verify_transport(g, Bijection::rho, workers));
  } else if (name == "type-d-codes") {
    detail::check_codes_D(report, n);
  } else if (name == "type-d-cayley") {
    detail::check_cayley(report, g, GeneratingSet::TD, S::l_tilde_D, GeneratingSet::SD, S::inv_D);
  }
  return report;
}

}  // namespace coxstat
