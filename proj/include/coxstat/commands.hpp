#pragma once

// Command implementations behind the coxstat CLI. Each command returns a
// JSON result document; rendering and exit codes are decided by the caller.

#include <cctype>
#include <charconv>
#include <string>
#include <string_view>
#include <vector>

#include <json.hpp>

#include "coxstat/checks.hpp"

namespace coxstat::cli {

using json = nlohmann::json;

/// Parses whitespace- or comma-separated signed decimal integers. Brackets
/// and parentheses are ignored.
inline std::vector<int> parse_int_list(std::string_view text) {
  std::vector<int> out;
  std::size_t k = 0;
  auto is_sep = [](char c) {
    return c == ',' || c == '(' || c == ')' || c == '[' || c == ']' || std::isspace(static_cast<unsigned char>(c));
  };
  while (k < text.size()) {
    while (k < text.size() && is_sep(text[k])) ++k;
    if (k >= text.size()) break;
    std::size_t end = k;
    while (end < text.size() && !is_sep(text[end])) ++end;
    const std::string_view token = text.substr(k, end - k);
    std::string_view digits = token;
    if (!digits.empty() && digits.front() == '+') digits.remove_prefix(1);
    int value = 0;
    const auto [ptr, ec] = std::from_chars(digits.data(), digits.data() + digits.size(), value);
    if (digits.empty() || ec != std::errc{} || ptr != digits.data() + digits.size()) {
      throw DomainError("cannot parse token '" + std::string(token) + "' as an integer");
    }
    out.push_back(value);
    k = end;
  }
  if (out.empty()) throw DomainError("empty input: expected a list of integers");
  return out;
}

/// Parses one-line notation for the family. Type A rejects minus signs;
/// type D checks parity.
inline SignedPermutation parse_element(Family family, std::string_view text) {
  const std::vector<int> values = parse_int_list(text);
  if (family == Family::A) {
    for (int v : values) {
      if (v < 0) throw DomainError("token '" + std::to_string(v) + "' is barred; type A takes unsigned values");
    }
  }
  SignedPermutation s(values);
  if (family == Family::D && !is_d_member(s)) {
    throw DomainError("'" + std::string(text) + "' has an odd number of minus signs; not in D_" +
                      std::to_string(s.n()));
  }
  return s;
}

inline json polynomial_json(const BivariatePolynomial& p) {
  json terms = json::array();
  for (const auto& [e, c] : p.terms()) terms.push_back({{"q", e.q}, {"t", e.t}, {"count", c}});
  return {{"terms", std::move(terms)}, {"text", p.to_string()}};
}

inline std::string csv_table(const BivariatePolynomial& p) {
  std::string out = "q,t,count\n";
  for (const auto& [e, c] : p.terms()) {
    out += std::to_string(e.q) + "," + std::to_string(e.t) + "," + std::to_string(c) + "\n";
  }
  return out;
}

inline json document(Family family, int n) {
  return {{"family", std::string(family_name(family))}, {"n", n}, {"status", "ok"}};
}

inline json statistics_json(Family family, const SignedPermutation& s) {
  json out = json::object();
  for (Statistic st : statistics_for(family)) out[std::string(statistic_name(st))] = evaluate(st, s);
  for (SetStatistic st : set_statistics_for(family)) out[std::string(statistic_name(st))] = evaluate(st, s);
  return out;
}

inline json cmd_stats(Family family, std::string_view perm_text) {
  const SignedPermutation s = parse_element(family, perm_text);
  json doc = document(family, s.n());
  doc["inputs"] = {{"perm", s.images()}};
  json outputs = statistics_json(family, s);
  json cycles = json::array();
  json factors = json::array();
  if (family == Family::A) {
    const Permutation p = to_unsigned(s);
    for (const auto& c : cycle_decomposition(p).cycles) cycles.push_back(c);
    for (const auto& t : sort_factorization(p).factors) factors.push_back({t.i, t.j});
  } else {
    for (const auto& c : signed_cycle_decomposition(s).cycles) {
      cycles.push_back({{"values", c.values}, {"barred", c.barred}, {"balanced", c.balanced}});
    }
    if (family == Family::B) {
      for (const auto& t : selection_sort_factorization(s).factors) factors.push_back({t.a(), t.j()});
    } else {
      for (const auto& t : cosort_factorization(DElement(s)).factors) factors.push_back({t.i(), t.j()});
    }
  }
  outputs["cycles"] = std::move(cycles);
  outputs["factorization"] = std::move(factors);
  doc["outputs"] = std::move(outputs);
  return doc;
}

enum class Direction { encode, decode };

inline json cmd_code(Direction direction, std::string_view code_family, Family family, std::string_view payload) {
  const bool type_d_code = code_family == "ecode" || code_family == "fcode";
  const bool classic_code = code_family == "lehmer" || code_family == "acode" || code_family == "bcode";
  if (!type_d_code && !classic_code) {
    throw DomainError("unknown code family '" + std::string(code_family) + "'");
  }
  if (type_d_code != (family == Family::D)) {
    throw DomainError("code family '" + std::string(code_family) + "' is not available on family " +
                      std::string(family_name(family)));
  }

  std::vector<int> code;
  SignedPermutation perm;
  if (direction == Direction::encode) {
    perm = parse_element(family, payload);
    if (family == Family::A) {
      const Permutation p = to_unsigned(perm);
      const CodeA c = code_family == "lehmer" ? lehmer_encode(p)
                      : code_family == "acode" ? acode_encode(p)
                                               : bcode_encode(p);
      code.assign(c.entries().begin(), c.entries().end());
    } else if (family == Family::B) {
      const CodeB c = code_family == "lehmer" ? lehmer_B_encode(perm)
                      : code_family == "acode" ? acode_B_encode(perm)
                                               : bcode_B_encode(perm);
      code.assign(c.entries().begin(), c.entries().end());
    } else {
      const DElement d(perm);
      const CodeD c = code_family == "ecode" ? ecode_encode(d) : fcode_encode(d);
      code.assign(c.entries().begin(), c.entries().end());
    }
  } else {
    code = parse_int_list(payload);
    if (family == Family::A) {
      const CodeA c(code);
      perm = to_signed(code_family == "lehmer"  ? lehmer_decode(c)
                       : code_family == "acode" ? acode_decode(c)
                                                : bcode_decode(c));
    } else if (family == Family::B) {
      const CodeB c(code);
      perm = code_family == "lehmer"  ? lehmer_B_decode(c)
             : code_family == "acode" ? acode_B_decode(c)
                                      : bcode_B_decode(c);
    } else {
      const CodeD c(code);
      perm = (code_family == "ecode" ? ecode_decode(c) : fcode_decode(c)).perm();
    }
  }

  json doc = document(family, perm.n());
  doc["inputs"] = {{"direction", direction == Direction::encode ? "encode" : "decode"},
                   {"code_family", std::string(code_family)}};
  if (direction == Direction::encode) {
    doc["inputs"]["perm"] = perm.images();
    doc["outputs"] = {{"code", code}};
  } else {
    doc["inputs"]["code"] = code;
    doc["outputs"] = {{"perm", perm.images()}};
  }
  return doc;
}

inline json cmd_map(Bijection bijection, bool inverse, Family family, std::string_view perm_text) {
  if (family_of(bijection) != family) {
    throw DomainError(std::string(bijection_name(bijection)) + " acts on family " +
                      std::string(family_name(family_of(bijection))) + ", not " + std::string(family_name(family)));
  }
  const SignedPermutation input = parse_element(family, perm_text);
  const SignedPermutation output = apply_bijection(bijection, input, inverse);
  const SignedPermutation& source = inverse ? output : input;
  const SignedPermutation& image = inverse ? input : output;

  const TransportClaim claim = transport_claim(bijection);
  json before = json::object();
  json after = json::object();
  for (Statistic st : claim.source) before[std::string(statistic_name(st))] = evaluate(st, source);
  for (SetStatistic st : claim.source_sets) before[std::string(statistic_name(st))] = evaluate(st, source);
  for (Statistic st : claim.image) after[std::string(statistic_name(st))] = evaluate(st, image);
  for (SetStatistic st : claim.image_sets) after[std::string(statistic_name(st))] = evaluate(st, image);

  json doc = document(family, input.n());
  doc["inputs"] = {{"bijection", std::string(bijection_name(bijection))}, {"inverse", inverse}, {"perm", input.images()}};
  doc["outputs"] = {{"perm", output.images()}, {"source_statistics", before}, {"image_statistics", after}};
  return doc;
}

inline json report_json(const CheckReport& report) {
  json doc = document(report.group.family, report.group.n);
  doc["inputs"] = {{"check", report.check}};
  json polys = json::array();
  for (const auto& [label, p] : report.polynomials) {
    json entry = polynomial_json(p);
    entry["label"] = label;
    polys.push_back(std::move(entry));
  }
  doc["outputs"] = {{"elements", report.elements}, {"polynomials", std::move(polys)}, {"failures", report.failures}};
  doc["status"] = report.passed ? "verified" : "falsified";
  return doc;
}

inline json cmd_table(Family family, Statistic s1, Statistic s2, int n, int workers, BivariatePolynomial* out = nullptr) {
  const BivariatePolynomial p = joint_distribution(GroupId{family, n}, s1, s2, workers);
  json doc = document(family, n);
  doc["inputs"] = {{"stat1", std::string(statistic_name(s1))}, {"stat2", std::string(statistic_name(s2))}};
  doc["outputs"] = {{"polynomial", polynomial_json(p)}};
  if (out) *out = p;
  return doc;
}

}  // namespace coxstat::cli
