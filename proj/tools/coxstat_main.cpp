// coxstat: statistics, codes, bijections and exhaustive checks on S_n, B_n, D_n.
//
// Exit codes: 0 ok / verified, 1 falsified, 2 usage or input error.

#include <iostream>
#include <iterator>
#include <optional>
#include <sstream>
#include <string>

#include <CLI11.hpp>

#include "coxstat/commands.hpp"

namespace {

using coxstat::cli::json;

enum class Format { json, csv, text };

std::string read_payload(const std::string& positional) {
  if (!positional.empty()) return positional;
  return std::string(std::istreambuf_iterator<char>(std::cin), std::istreambuf_iterator<char>());
}

std::string join(const json& values, const char* sep) {
  std::string out;
  for (const auto& v : values) {
    if (!out.empty()) out += sep;
    out += v.dump();
  }
  return out;
}

/// Flat "key: value" rendering; integer lists become one-line words.
void print_text(const json& value, const std::string& prefix, std::ostream& out) {
  if (value.is_object()) {
    for (const auto& [key, v] : value.items()) print_text(v, prefix.empty() ? key : prefix + "." + key, out);
  } else if (value.is_array() && std::all_of(value.begin(), value.end(), [](const json& v) { return v.is_number(); })) {
    out << prefix << ": " << join(value, " ") << '\n';
  } else if (value.is_array()) {
    for (std::size_t k = 0; k < value.size(); ++k) print_text(value[k], prefix + "[" + std::to_string(k) + "]", out);
  } else if (value.is_string()) {
    out << prefix << ": " << value.get<std::string>() << '\n';
  } else {
    out << prefix << ": " << value.dump() << '\n';
  }
}

void emit(const json& doc, Format format) {
  if (format == Format::text) {
    print_text(doc, "", std::cout);
  } else {
    std::cout << doc.dump(2) << '\n';
  }
}

coxstat::Family require_family(const std::string& name) {
  if (name.empty()) throw coxstat::DomainError("--family is required (A, B or D)");
  auto f = coxstat::parse_family(name);
  if (!f) throw coxstat::DomainError("unknown family '" + name + "'");
  return *f;
}

coxstat::Statistic require_statistic(const std::string& name) {
  auto s = coxstat::parse_statistic(name);
  if (!s) throw coxstat::DomainError("unknown statistic '" + name + "'");
  return *s;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Sorting index, permutation codes and statistic-transporting bijections on S_n, B_n, D_n"};
  app.require_subcommand(1);

  std::string family_name;
  int n = 0;
  std::string format_name;
  int workers = 1;
  app.add_option("--family", family_name, "group family: A, B or D")->check(CLI::IsMember({"A", "B", "D", "a", "b", "d"}));
  app.add_option("--n", n, "degree for verify and table");
  app.add_option("--format", format_name, "output format")->check(CLI::IsMember({"json", "csv", "text"}));
  app.add_option("--parallel", workers, "worker count for enumeration")->check(CLI::PositiveNumber);

  std::string perm_text;
  auto* stats = app.add_subcommand("stats", "all statistics of one element");
  stats->fallthrough();
  stats->add_option("perm", perm_text, "one-line notation, e.g. \"5 -4 -3 1 -2\" (stdin if omitted)");

  std::string direction;
  std::string code_family;
  std::string payload;
  auto* code = app.add_subcommand("code", "encode or decode Lehmer, A-, B-, E- and F-codes");
  code->fallthrough();
  code->add_option("direction", direction, "encode or decode")->required()->check(CLI::IsMember({"encode", "decode"}));
  code->add_option("code_family", code_family, "lehmer, acode, bcode, ecode or fcode")
      ->required()
      ->check(CLI::IsMember({"lehmer", "acode", "bcode", "ecode", "fcode"}));
  code->add_option("payload", payload, "permutation or code (stdin if omitted)");

  std::string bijection_name;
  bool inverse = false;
  auto* map = app.add_subcommand("map", "apply phi, psi or rho");
  map->fallthrough();
  map->add_option("bijection", bijection_name, "phi, psi or rho")->required()->check(CLI::IsMember({"phi", "psi", "rho"}));
  map->add_flag("--inverse", inverse, "apply the inverse map");
  map->add_option("perm", perm_text, "one-line notation (stdin if omitted)");

  std::string check_name;
  auto* verify = app.add_subcommand("verify", "run a named exhaustive check");
  verify->fallthrough();
  verify->add_option("check", check_name, "check name, e.g. type-a-gf")->required();
  verify->footer([] {
    std::string out = "Checks:\n";
    for (const auto& c : coxstat::kChecks) {
      out += "  " + std::string(c.name) + " (n " + std::to_string(c.min_n) + ".." + std::to_string(c.max_n) + "): " +
             std::string(c.summary) + "\n";
    }
    return out;
  }());

  std::string stat1;
  std::string stat2;
  auto* table = app.add_subcommand("table", "joint distribution of two statistics");
  table->fallthrough();
  table->add_option("stat1", stat1, "q-statistic")->required();
  table->add_option("stat2", stat2, "t-statistic")->required();

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int rc = app.exit(e);
    return rc == 0 ? 0 : 2;
  }

  // table defaults to csv; every other command defaults to json.
  const Format format = format_name == "csv" ? Format::csv : format_name == "text" ? Format::text : Format::json;

  try {
    if (stats->parsed()) {
      emit(coxstat::cli::cmd_stats(require_family(family_name), read_payload(perm_text)), format);
    } else if (code->parsed()) {
      const auto dir = direction == "encode" ? coxstat::cli::Direction::encode : coxstat::cli::Direction::decode;
      emit(coxstat::cli::cmd_code(dir, code_family, require_family(family_name), read_payload(payload)), format);
    } else if (map->parsed()) {
      const auto b = *coxstat::parse_bijection(bijection_name);
      const auto family = family_name.empty() ? coxstat::family_of(b) : require_family(family_name);
      emit(coxstat::cli::cmd_map(b, inverse, family, read_payload(perm_text)), format);
    } else if (verify->parsed()) {
      const auto* info = coxstat::find_check(check_name);
      if (!info) throw coxstat::DomainError("unknown check '" + check_name + "'");
      if (!family_name.empty() && require_family(family_name) != info->family) {
        throw coxstat::DomainError("check " + check_name + " runs on family " + std::string(coxstat::family_name(info->family)));
      }
      if (n == 0) throw coxstat::DomainError("--n is required for verify");
      const coxstat::CheckReport report = coxstat::run_check(check_name, n, workers);
      const json doc = coxstat::cli::report_json(report);
      if (format == Format::text) {
        std::cout << (report.passed ? "PASS " : "FAIL ") << report.check << " n=" << n
                  << " elements=" << report.elements << '\n';
        for (const auto& [label, p] : report.polynomials) std::cout << "  " << label << ": " << p.to_string() << '\n';
        for (const auto& f : report.failures) std::cout << "  failure: " << f << '\n';
      } else {
        emit(doc, format);
      }
      return report.passed ? 0 : 1;
    } else if (table->parsed()) {
      if (n == 0) throw coxstat::DomainError("--n is required for table");
      const auto family = require_family(family_name);
      coxstat::BivariatePolynomial p;
      const json doc = coxstat::cli::cmd_table(family, require_statistic(stat1), require_statistic(stat2), n, workers, &p);
      if (format_name == "json") {
        emit(doc, format);
      } else if (format == Format::text) {
        std::cout << p.to_string() << '\n';
      } else {
        std::cout << coxstat::cli::csv_table(p);
      }
    }
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << '\n';
    return 2;
  }
  return 0;
}
