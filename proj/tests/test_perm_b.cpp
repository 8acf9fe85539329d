#include <catch_amalgamated.hpp>

#include <algorithm>
#include <cstdlib>
#include <deque>
#include <map>
#include <numeric>
#include <set>
#include <vector>

#include "coxstat/perm_b.hpp"

using namespace coxstat;

namespace {

SignedPermutation S(std::vector<int> w) { return SignedPermutation(std::move(w)); }

std::vector<SignedPermutation> all_signed(int n) {
  std::vector<SignedPermutation> out;
  std::vector<int> w(n);
  std::iota(w.begin(), w.end(), 1);
  do {
    for (int mask = 0; mask < (1 << n); ++mask) {
      std::vector<int> v = w;
      for (int i = 0; i < n; ++i)
        if (mask >> i & 1) v[i] = -v[i];
      out.emplace_back(std::move(v));
    }
  } while (std::next_permutation(w.begin(), w.end()));
  return out;
}

std::vector<CodeB> all_codes(int n) {
  std::vector<std::vector<int>> acc{{}};
  for (int i = 1; i <= n; ++i) {
    std::vector<std::vector<int>> next;
    for (const auto& prefix : acc) {
      for (int v = -i; v <= i; ++v) {
        if (v == 0) continue;
        auto c = prefix;
        c.push_back(v);
        next.push_back(std::move(c));
      }
    }
    acc = std::move(next);
  }
  std::vector<CodeB> out;
  for (auto& c : acc) out.emplace_back(std::move(c));
  return out;
}

// Recursive B-code: b_n = s^-1(n), then drop n from its cycle and recurse on
// B_{n-1}. Dropping n sends the letter m with s(m) = +-n to s(s(m)); this
// covers both the positive case and the sign-changing case.
std::vector<int> recursive_bcode(const SignedPermutation& s) {
  const int n = s.n();
  if (n == 1) return {s(1)};
  const int back_n = inverse(s)(n);
  std::vector<int> smaller(n - 1);
  for (int x = 1; x < n; ++x) {
    const int y = s(x);
    smaller[x - 1] = std::abs(y) == n ? s(y) : y;
  }
  std::vector<int> code = std::abs(back_n) == n ? recursive_bcode(S(std::vector<int>(s.images().begin(), s.images().end() - 1)))
                                                : recursive_bcode(S(smaller));
  code.push_back(back_n);
  return code;
}

int brute_inv_B(const SignedPermutation& s) {
  int count = 0;
  for (int i = 1; i <= s.n(); ++i) {
    for (int j = i; j <= s.n(); ++j) {
      if (i < j && s(i) > s(j)) ++count;
      if (-s(i) > s(j)) ++count;
    }
  }
  return count;
}

std::map<SignedPermutation, int> bfs_reflection_length(int n) {
  std::vector<SignedPermutation> gens;
  for (int j = 1; j <= n; ++j) {
    for (int i = 1; i < j; ++i) gens.push_back(as_permutation(TranspositionB(i, j), n));
    for (int i = 1; i <= j; ++i) gens.push_back(as_permutation(TranspositionB(-i, j), n));
  }
  std::map<SignedPermutation, int> dist{{SignedPermutation::identity(n), 0}};
  std::deque<SignedPermutation> queue{SignedPermutation::identity(n)};
  while (!queue.empty()) {
    const auto x = queue.front();
    queue.pop_front();
    for (const auto& g : gens) {
      auto y = compose(x, g);
      if (dist.emplace(y, dist[x] + 1).second) queue.push_back(std::move(y));
    }
  }
  return dist;
}

}  // namespace

TEST_CASE("signed permutation validation", "[perm_b]") {
  CHECK_THROWS_AS(S({1, -1}), DomainError);
  CHECK_THROWS_AS(S({0, 1}), DomainError);
  CHECK_THROWS_AS(S({3, 1}), DomainError);
  CHECK(S({-2, 1})(-1) == 2);
  CHECK(S({5, -4, -3, 1, -2}).negatives() == 3);
}

TEST_CASE("group operations", "[perm_b]") {
  CHECK(inverse(S({2, -4, 5, 1, -3})) == S({4, 1, -5, -2, 3}));
  CHECK(inverse(SignedPermutation::identity(3)) == SignedPermutation::identity(3));
  CHECK(apply_transposition(SignedPermutation::identity(2), TranspositionB(-1, 2)) == S({-2, -1}));
  CHECK(apply_transposition(SignedPermutation::identity(2), TranspositionB(-2, 2)) == S({1, -2}));
  CHECK(apply_transposition(SignedPermutation::identity(2), TranspositionB(2, 2)) == SignedPermutation::identity(2));
  CHECK_THROWS_AS(TranspositionB(3, 2), DomainError);
  CHECK_THROWS_AS(TranspositionB(-3, 2), DomainError);
  CHECK_THROWS_AS(TranspositionB(0, 2), DomainError);
  const auto s = S({2, -4, 5, 1, -3});
  CHECK(compose(s, inverse(s)) == SignedPermutation::identity(5));
}

TEST_CASE("type-B inversion number", "[perm_b]") {
  CHECK(inv_B(SignedPermutation::identity(4)) == 0);
  CHECK(inv_B(S({-1})) == 1);
  CHECK(inv_B(S({2, -4, 5, 1, -3})) == 13);
}

TEST_CASE("selection sort factorization", "[perm_b]") {
  const auto f = selection_sort_factorization(S({5, -4, -3, 1, -2}));
  CHECK(f.factors == std::vector<TranspositionB>{{-1, 2}, {-3, 3}, {-2, 4}, {1, 5}});
  CHECK(sor_B(S({5, -4, -3, 1, -2})) == 16);
  CHECK(selection_sort_factorization(SignedPermutation::identity(3)).factors.empty());
  CHECK(sor_B(SignedPermutation::identity(3)) == 0);
  CHECK(sor_B(S({3, -1, -6, -5, 4, 2})) == 27);
}

TEST_CASE("signed cycles", "[perm_b]") {
  const auto d = signed_cycle_decomposition(S({-6, -7, 4, -3, 5, 1, -2}));
  REQUIRE(d.cycles.size() == 4);
  CHECK(d.cycles[0].values == std::vector<int>{1, 6});
  CHECK(d.cycles[0].barred == IntSet{6});
  CHECK_FALSE(d.cycles[0].balanced);
  CHECK(d.cycles[1].values == std::vector<int>{2, 7});
  CHECK(d.cycles[1].barred == IntSet{2, 7});
  CHECK(d.cycles[1].balanced);
  CHECK(d.cycles[2].values == std::vector<int>{3, 4});
  CHECK(d.cycles[2].barred == IntSet{3});
  CHECK_FALSE(d.cycles[2].balanced);
  CHECK(d.cycles[3].values == std::vector<int>{5});
  CHECK(d.cycles[3].balanced);
  CHECK(d.balanced_minima() == IntSet{2, 5});
  CHECK(cyc_B(S({-6, -7, 4, -3, 5, 1, -2})) == 2);
  CHECK(reflection_length_B(S({-6, -7, 4, -3, 5, 1, -2})) == 5);

  CHECK(reflection_length_B(SignedPermutation::identity(4)) == 0);
  CHECK(cyc_B(SignedPermutation::identity(4)) == 4);

  const auto e = signed_cycle_decomposition(S({2, -4, 5, -1, -3}));
  REQUIRE(e.cycles.size() == 2);
  CHECK(e.cycles[0].values == std::vector<int>{1, 2, 4});
  CHECK(e.cycles[0].barred == IntSet{1, 4});
  CHECK(e.cycles[0].balanced);
  CHECK(e.cycles[1].values == std::vector<int>{3, 5});
  CHECK_FALSE(e.cycles[1].balanced);
  CHECK(reflection_length_B(S({2, -4, 5, -1, -3})) == 4);
}

TEST_CASE("type-B set-valued statistics", "[perm_b]") {
  const auto s = S({5, -7, 1, -4, 9, -2, -6, 3, 8});
  CHECK(rmil_B_set(s) == IntSet{1, 3, 8});
  CHECK(lmap_B_set(s) == IntSet{1, 5});
  const auto id = SignedPermutation::identity(4);
  CHECK(rmil_B_set(id) == IntSet{1, 2, 3, 4});
  CHECK(lmap_B_set(id) == IntSet{1, 2, 3, 4});
  CHECK(stats_B(id).nmin_B == 0);
  CHECK(stats_B(S({2, -4, 5, 1, -3})).nmin_B == 4);
  CHECK(lmap_B_set(S({-1})).empty());
  CHECK(stats_B(S({-1})).nmax_B == 1);
}

TEST_CASE("signed Lehmer code", "[perm_b]") {
  CHECK(lehmer_B_encode(S({5, -7, 1, -4, 9, -2, -6, 3, 8})) == CodeB({1, -2, 1, -2, 5, -2, -5, 3, 8}));
  CHECK(lehmer_B_encode(SignedPermutation::identity(3)) == CodeB({1, 2, 3}));
  CHECK(lehmer_B_encode(S({-1, -2})) == CodeB({-1, -2}));
  const auto s = S({5, -7, 1, -4, 9, -2, -6, 3, 8});
  CHECK(rmil_B_set(lehmer_B_encode(s).entries()) == rmil_B_set(s));
  CHECK(max_set(lehmer_B_encode(s)) == lmap_B_set(s));
  CHECK_THROWS_AS(CodeB({1, 0}), DomainError);
  CHECK_THROWS_AS(CodeB({1, -3}), DomainError);
}

TEST_CASE("A-code of signed permutations", "[perm_b]") {
  CHECK(acode_B_decode(CodeB({1, 1, -3, -2, 3})) == S({2, -4, 5, 1, -3}));
  CHECK(acode_B_encode(S({2, -4, 5, 1, -3})) == CodeB({1, 1, -3, -2, 3}));
  CHECK(acode_B_encode(SignedPermutation::identity(4)) == CodeB({1, 2, 3, 4}));
}

TEST_CASE("B-code of signed permutations", "[perm_b]") {
  CHECK(bcode_B_encode(S({3, -1, -6, -5, 4, 2})) == CodeB({1, -1, 1, -4, -4, -3}));
  CHECK(bcode_B_encode(SignedPermutation::identity(3)) == CodeB({1, 2, 3}));
  CHECK(bcode_B_encode(S({-1})) == CodeB({-1}));
  CHECK(bcode_B_decode(CodeB({1, -1, 1, -4, -4, -3})) == S({3, -1, -6, -5, 4, 2}));
  CHECK(bcode_B_decode(CodeB({1, 2, 3})) == SignedPermutation::identity(3));
  CHECK(bcode_B_decode(CodeB({1, 1, -3, -2, 3})) == S({2, -4, 5, -1, -3}));
  CHECK(recursive_bcode(S({3, -1, -6, -5, 4, 2})) == std::vector<int>{1, -1, 1, -4, -4, -3});
}

TEST_CASE("psi on the worked example", "[perm_b]") {
  const auto s = S({2, -4, 5, 1, -3});
  const auto image = psi(s);
  CHECK(image == S({2, -4, 5, -1, -3}));
  CHECK(psi(SignedPermutation::identity(4)) == SignedPermutation::identity(4));
  CHECK(inv_B(s) == 13);
  CHECK(nmin_B(s) == 4);
  CHECK(sor_B(image) == 13);
  CHECK(reflection_length_B(image) == 4);
  CHECK(psi_inverse(image) == s);
}

TEST_CASE("exhaustive type-B code identities", "[perm_b][exhaustive]") {
  for (int n = 1; n <= 6; ++n) {
    for (const auto& s : all_signed(n)) {
      const CodeB a = acode_B_encode(s);
      const CodeB b = bcode_B_encode(s);
      REQUIRE(std::vector<int>(b.entries().begin(), b.entries().end()) == recursive_bcode(s));
      REQUIRE(acode_B_decode(a) == inverse(lehmer_B_decode(a)));

      REQUIRE(rmil_B_set(s) == max_set(a));
      REQUIRE(lmap_B_set(s) == rmil_B_set(a.entries()));
      REQUIRE(signed_cycle_decomposition(s).balanced_minima() == max_set(b));
      REQUIRE(lmap_B_set(s) == rmil_B_set(b.entries()));

      int a_sum = 0;
      int b_sum = 0;
      for (int i = 1; i <= n; ++i) {
        a_sum += i - a[i] - (a[i] < 0);
        b_sum += i - b[i] - (b[i] < 0);
      }
      REQUIRE(inv_B(s) == a_sum);
      REQUIRE(brute_inv_B(s) == a_sum);
      REQUIRE(nmin_B(s) == n - static_cast<int>(max_set(a).size()));
      REQUIRE(sor_B(s) == b_sum);
      REQUIRE(reflection_length_B(s) == n - static_cast<int>(max_set(b).size()));

      const StatsB st = stats_B(s);
      REQUIRE(st.nmin_B == n - st.rl_min_B);
      REQUIRE(st.nmax_B == n - st.lr_max_B);
      REQUIRE(st.nmin_B == stats_B(inverse(s)).nmax_B);

      REQUIRE(lehmer_B_decode(lehmer_B_encode(s)) == s);
      REQUIRE(acode_B_decode(a) == s);
      REQUIRE(bcode_B_decode(b) == s);
      REQUIRE(psi_inverse(psi(s)) == s);

      const auto f = selection_sort_factorization(s);
      REQUIRE(product(f, n) == s);
      for (std::size_t k = 1; k < f.factors.size(); ++k) REQUIRE(f.factors[k - 1].j() < f.factors[k].j());
    }
  }
  for (int n = 1; n <= 5; ++n) {
    for (const auto& c : all_codes(n)) {
      REQUIRE(lehmer_B_encode(lehmer_B_decode(c)) == c);
      REQUIRE(acode_B_encode(acode_B_decode(c)) == c);
      REQUIRE(bcode_B_encode(bcode_B_decode(c)) == c);
    }
  }
}

TEST_CASE("reflection length matches T^B distance", "[perm_b][exhaustive]") {
  for (int n = 1; n <= 4; ++n) {
    const auto dist = bfs_reflection_length(n);
    REQUIRE(dist.size() == all_signed(n).size());
    for (const auto& [s, d] : dist) REQUIRE(reflection_length_B(s) == d);
  }
}

TEST_CASE("psi transports (inv_B, Lmap_B, Rmil_B) to (sor_B, Lmap_B, Cyc_B)", "[perm_b][exhaustive]") {
  for (int n = 1; n <= 5; ++n) {
    std::set<SignedPermutation> images;
    for (const auto& s : all_signed(n)) {
      const auto t = psi(s);
      REQUIRE(inv_B(s) == sor_B(t));
      REQUIRE(lmap_B_set(s) == lmap_B_set(t));
      REQUIRE(rmil_B_set(s) == signed_cycle_decomposition(t).balanced_minima());
      images.insert(t);
    }
    REQUIRE(images.size() == all_signed(n).size());
  }
}
