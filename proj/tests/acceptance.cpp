// Acceptance run: one PASS/FAIL line per criterion, with pinned budgets.
// All comparisons are exact. Pass --full to add the B_7 generating-function
// run to criterion 4.

#include <chrono>
#include <cstdio>
#include <functional>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "coxstat/checks.hpp"

using namespace coxstat;

namespace {

struct Outcome {
  bool passed = true;
  std::string detail;

  void fail(const std::string& why) {
    if (passed) detail = why;
    passed = false;
  }
};

struct Criterion {
  int id;
  std::string title;
  double budget_seconds;
  std::function<Outcome()> run;
};

void run_checks(Outcome& out, std::string_view check, int first_n, int last_n, int workers) {
  for (int n = first_n; n <= last_n && out.passed; ++n) {
    const CheckReport r = run_check(check, n, workers);
    if (!r.passed) out.fail(std::string(check) + " n=" + std::to_string(n) + ": " + r.failures.front());
  }
}

Outcome checks(std::string_view check, int first_n, int last_n, int workers) {
  Outcome out;
  run_checks(out, check, first_n, last_n, workers);
  return out;
}

template <class T>
void expect(Outcome& out, const std::string& what, const T& got, const T& want) {
  if (!(got == want)) out.fail(what);
}

Outcome worked_examples() {
  Outcome out;
  expect(out, "B-code(2 4 5 1 3)", bcode_encode(Permutation({2, 4, 5, 1, 3})), CodeA({1, 1, 3, 2, 3}));
  expect(out, "sor_B(5 -4 -3 1 -2)", sor_B(SignedPermutation({5, -4, -3, 1, -2})), 16);
  expect(out, "B-code_B(3 -1 -6 -5 4 2)", bcode_B_encode(SignedPermutation({3, -1, -6, -5, 4, 2})),
         CodeB({1, -1, 1, -4, -4, -3}));
  const SignedPermutation w({5, -7, 1, -4, 9, -2, -6, 3, 8});
  expect(out, "Leh_B(5 -7 1 -4 9 -2 -6 3 8)", lehmer_B_encode(w), CodeB({1, -2, 1, -2, 5, -2, -5, 3, 8}));
  expect(out, "Rmil_B(5 -7 1 -4 9 -2 -6 3 8)", rmil_B_set(w), IntSet{1, 3, 8});
  expect(out, "Lmap_B(5 -7 1 -4 9 -2 -6 3 8)", lmap_B_set(w), IntSet{1, 5});
  expect(out, "A-code_B decode (1,1,-3,-2,3)", acode_B_decode(CodeB({1, 1, -3, -2, 3})),
         SignedPermutation({2, -4, 5, 1, -3}));
  expect(out, "E-code(2 -4 5 1 -3)", ecode_encode(DElement({2, -4, 5, 1, -3})), CodeD({1, 1, -3, -2, 3}));
  expect(out, "F-code(-2 -4 5 -1 -3)", fcode_encode(DElement({-2, -4, 5, -1, -3})), CodeD({1, 1, -3, -2, 3}));
  const std::vector<GeneratorTD> cosort{{1, 2}, {-3, 3}, {-2, 4}, {3, 5}};
  expect(out, "cosort(-2 -4 5 -1 -3)", cosort_factorization(DElement({-2, -4, 5, -1, -3})).factors, cosort);
  return out;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"acceptance criteria"};
  bool full = false;
  int workers = 1;
  app.add_flag("--full", full, "include B_7 in criterion 4");
  app.add_option("--parallel", workers, "worker count")->check(CLI::PositiveNumber);
  CLI11_PARSE(app, argc, argv);

  std::vector<Criterion> criteria{
      {1, "type-A generating function, n=1..8", 5, [&] { return checks("type-a-gf", 1, 8, workers); }},
      {2, "phi transport and bijectivity, n=1..7", 5, [&] { return checks("type-a-transport", 1, 7, workers); }},
      {3, "type-A six set-valued pairs, n=1..6", 10, [&] { return checks("type-a-set-pairs", 1, 6, workers); }},
      {4, full ? "type-B generating function, n=1..7" : "type-B generating function, n=1..6", full ? 300.0 : 30.0,
       [&] { return checks("type-b-gf", 1, full ? 7 : 6, workers); }},
      {5, "psi transport and bijectivity, n=1..5", 10, [&] { return checks("type-b-transport", 1, 5, workers); }},
      {6, "type-B six set-valued pairs, n=1..5", 30, [&] { return checks("type-b-set-pairs", 1, 5, workers); }},
      {7, "type-B four pairs, n=1..6", 30, [&] { return checks("type-b-four-pairs", 1, 6, workers); }},
      {8, "sor_D = sor'_D, n=2..7", 120, [&] { return checks("type-d-sor-cosort", 2, 7, workers); }},
      {9, "type-D bivariate generating function, n=2..6", 60,
       [&] {
         Outcome out;
         BivariatePolynomial anchor = BivariatePolynomial::one();
         anchor.add_term(1, 1, 2);
         anchor.add_term(2, 1, 1);
         expect(out, "D_2 anchor 1 + 2qt + q^2t",
                joint_distribution({Family::D, 2}, Statistic::inv_D, Statistic::nmin_D, workers), anchor);
         run_checks(out, "type-d-bivariate", 2, 6, workers);
         return out;
       }},
      {10, "type-D Mahonian specialization, n=2..7", 120, [&] { return checks("type-d-mahonian", 2, 7, workers); }},
      {11, "rho transport and bijectivity, n=2..6", 60, [&] { return checks("type-d-transport", 2, 6, workers); }},
      {12, "T^B and T^D BFS distances, n<=5", 30,
       [&] {
         Outcome out;
         run_checks(out, "type-b-cayley", 1, 5, workers);
         run_checks(out, "type-d-cayley", 2, 5, workers);
         for (int n = 1; n <= 5 && out.passed; ++n) {
           GroupEnumerator(GroupId{Family::B, n}).for_each([&](std::uint64_t, const SignedPermutation& s) {
             if (reflection_length_B(s) != n - cyc_B(s)) out.fail("l'_B != n - cyc_B");
           });
         }
         return out;
       }},
      {13, "code round trips (A n<=6, B n<=5, D n<=5)", 60,
       [&] {
         Outcome out;
         run_checks(out, "type-a-codes", 1, 6, workers);
         run_checks(out, "type-b-codes", 1, 5, workers);
         run_checks(out, "type-d-codes", 2, 5, workers);
         return out;
       }},
      {14, "worked examples", 1, [] { return worked_examples(); }},
  };

  int failed = 0;
  for (const auto& c : criteria) {
    const auto start = std::chrono::steady_clock::now();
    Outcome out;
    try {
      out = c.run();
    } catch (const std::exception& e) {
      out.fail(std::string("exception: ") + e.what());
    }
    const double seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    if (out.passed && seconds > c.budget_seconds) out.fail("over budget");
    if (!out.passed) ++failed;
    std::printf("%s %2d  %-46s %8.3fs / %gs%s%s\n", out.passed ? "PASS" : "FAIL", c.id, c.title.c_str(), seconds,
                c.budget_seconds, out.passed ? "" : "  ", out.detail.c_str());
  }
  std::printf("%d/%zu criteria passed\n", static_cast<int>(criteria.size()) - failed, criteria.size());
  return failed == 0 ? 0 : 1;
}
