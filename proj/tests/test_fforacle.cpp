#include "oracles.hpp"

#include <motzeta/curves.hpp>
#include <motzeta/errors.hpp>
#include <motzeta/fforacle.hpp>

#include <doctest.h>

using namespace motzeta;

namespace {

// Tuples of nonzero binary forms up to scalar, with common zeros tested by
// evaluating at every point of P^1 over F_{p^k} for k up to the degree sum.
// Only used for p = 2 and tiny degrees, where F_4 and F_8 suffice.
struct GF {
  int k;
  int mod;  // irreducible polynomial for F_{2^k}
  int mul(int a, int b) const {
    int r = 0;
    while (b) {
      if (b & 1) r ^= a;
      b >>= 1;
      a <<= 1;
      if (a >> k & 1) a ^= mod;
    }
    return r;
  }
};

int eval_form(const GF& g, const std::vector<int>& a, int u, int v) {
  // sum a_i u^i v^(deg - i)
  const int deg = static_cast<int>(a.size()) - 1;
  int r = 0;
  for (int i = 0; i <= deg; ++i) {
    if (!a[static_cast<std::size_t>(i)]) continue;
    int t = 1;
    for (int j = 0; j < i; ++j) t = g.mul(t, u);
    for (int j = 0; j < deg - i; ++j) t = g.mul(t, v);
    r ^= t;
  }
  return r;
}

bool share_zero_f2(const std::vector<std::vector<int>>& forms) {
  // Over F_2 any common root of forms of degree <= 3 lies in F_2, F_4 or F_8.
  const GF fields[] = {{1, 0b11}, {2, 0b111}, {3, 0b1011}};
  for (const auto& g : fields) {
    const int q = 1 << g.k;
    std::vector<std::pair<int, int>> pts{{1, 0}};
    for (int x = 0; x < q; ++x) pts.emplace_back(x, 1);
    for (auto [u, v] : pts) {
      bool all = true;
      for (const auto& f : forms)
        if (eval_form(g, f, u, v) != 0) all = false;
      if (all) return true;
    }
  }
  return false;
}

std::vector<std::vector<int>> nonzero_forms_f2(int deg) {
  std::vector<std::vector<int>> out;
  for (int bits = 1; bits < (1 << (deg + 1)); ++bits) {
    std::vector<int> a;
    for (int i = 0; i <= deg; ++i) a.push_back(bits >> i & 1);
    out.push_back(a);
  }
  return out;
}

std::uint64_t brute_count_f2(const ObstructionSet& B, const DegreeVector& d) {
  const int E = B.ground();
  std::vector<std::vector<std::vector<int>>> choices;
  for (int e = 0; e < E; ++e) choices.push_back(nonzero_forms_f2(d[static_cast<std::size_t>(e)]));
  std::vector<std::size_t> idx(static_cast<std::size_t>(E), 0);
  std::uint64_t count = 0;
  while (true) {
    bool ok = true;
    for (auto b : B.bmin()) {
      std::vector<std::vector<int>> fs;
      for (int e = 0; e < E; ++e)
        if (b >> e & 1u) fs.push_back(choices[static_cast<std::size_t>(e)][idx[static_cast<std::size_t>(e)]]);
      if (share_zero_f2(fs)) ok = false;
    }
    if (ok) ++count;
    int e = 0;
    while (e < E && ++idx[static_cast<std::size_t>(e)] == choices[static_cast<std::size_t>(e)].size())
      idx[static_cast<std::size_t>(e++)] = 0;
    if (e == E) break;
  }
  return count;
}

}  // namespace

TEST_CASE("forms and primes") {
  CHECK(ff_forms(3, 1).size() == 4);
  CHECK(ff_forms(2, 3).size() == 15);
  CHECK(ff_forms(5, 0).size() == 1);
  CHECK(is_prime(2));
  CHECK(is_prime(97));
  CHECK_FALSE(is_prime(1));
  CHECK_FALSE(is_prime(91));
  for (int p : {2, 3, 5})
    for (int n = 1; n <= 4; ++n)
      CHECK(closed_points_p1(p, n) == oracle::count_irreducible(p, n) + (n == 1 ? 1 : 0));
  CHECK(closed_points_p1(2, 1) == 3);
  CHECK(closed_points_p1(2, 2) == 1);
  CHECK(closed_points_p1(2, 3) == 2);
}

TEST_CASE("common zeros") {
  const auto f1 = ff_forms(2, 1);  // x, x+1, and the form vanishing at infinity
  std::vector<const FFForm*> none;
  CHECK(ff_common_zero(none));
  CHECK(ff_common_zero({&f1[0]}));
  CHECK_FALSE(ff_common_zero({&f1[0], &f1[1]}));
  CHECK(ff_common_zero({&f1[0], &f1[0]}));
  const auto f0 = ff_forms(2, 0);
  CHECK_FALSE(ff_common_zero({&f0[0], &f1[0]}));
}

TEST_CASE("tuple counts match an evaluation-based brute force over F_2") {
  const std::vector<ObstructionSet> sets{
      ObstructionSet(3, {0b111}), ObstructionSet(2, {0b11}),
      ObstructionSet(4, {0b0011, 0b1100}), ObstructionSet(3, {0b011, 0b110})};
  for (const auto& B : sets) {
    const int E = B.ground();
    for (const auto& d : all_degree_vectors(E, 4)) {
      bool small = true;
      for (int x : d) small = small && x <= 3;
      if (!small) continue;
      CHECK(count_divisor_tuples(B, 2, d) == brute_count_f2(B, d));
    }
  }
}

TEST_CASE("count examples") {
  const ObstructionSet B(3, {0b111});
  CHECK(count_divisor_tuples(B, 2, {1, 1, 1}) == 24);
  CHECK(count_divisor_tuples(B, 2, {0, 0, 0}) == 1);
  CHECK(count_u0d(projective_space_fan(1), 2, 2) == 6);
  CHECK(count_u0d(projective_space_fan(2), 2, 3) == 24);
  CHECK(count_divisor_tuples(ObstructionSet(2, {}), 3, {2, 1}) == 13 * 4);
}

TEST_CASE("counts agree with the class specialized at q") {
  for (const auto& name : bundled_fan_names()) {
    const Fan f = builtin_fan(name);
    for (int q : {2, 3})
      for (int d = 0; d <= (q == 2 ? 6 : 4); ++d)
        CHECK(Rational(static_cast<long long>(count_u0d(f, q, d))) == u0d_class(f, d).eval(Rational(q)));
  }
}

TEST_CASE("serial and parallel counts agree") {
  const auto B = b_sigma(hirzebruch_fan(1));
  for (const DegreeVector& d : {DegreeVector{1, 2, 1, 2}, DegreeVector{2, 0, 2, 2}})
    CHECK(count_divisor_tuples(B, 3, d, Exec::serial) == count_divisor_tuples(B, 3, d, Exec::parallel));
}

TEST_CASE("budget and input errors") {
  const ObstructionSet B(3, {0b111});
  CHECK_THROWS_AS(count_divisor_tuples(B, 5, {6, 6, 6}, Exec::serial, 1e3), BudgetExceeded);
  CHECK_THROWS_AS(count_divisor_tuples(B, 4, {1, 1, 1}), InputError);
}

TEST_CASE("finite-field Euler products") {
  for (const auto& name : {"p1", "p2", "p1xp1", "hirzebruch:1"}) {
    const auto B = b_sigma(builtin_fan(name));
    const auto r = check_ff_euler(B, 2, B.ground() <= 3 ? 6 : 5);
    CHECK_MESSAGE(r.ok, r.message);
    CHECK(r.checked > 0);
  }
  CHECK(check_ff_euler(ObstructionSet(3, {0b111}), 3, 4).ok);
}
