#include <motzeta/errors.hpp>
#include <motzeta/euler.hpp>
#include <motzeta/fforacle.hpp>
#include <motzeta/moebius.hpp>

#include <algorithm>
#include <cmath>
#include <numeric>

namespace motzeta {

bool is_prime(long long p) {
  if (p < 2) return false;
  for (long long q = 2; q * q <= p; ++q)
    if (p % q == 0) return false;
  return true;
}

namespace {

void require_prime(int p, const char* who) {
  if (!is_prime(p)) throw InputError(std::string(who) + ": " + std::to_string(p) + " is not prime");
}

int inv_mod(int a, int p) {
  // a^(p-2) mod p
  long long r = 1, b = a % p, e = p - 2;
  while (e > 0) {
    if (e & 1) r = r * b % p;
    b = b * b % p;
    e >>= 1;
  }
  return static_cast<int>(r);
}

void trim(std::vector<int>& a) {
  while (!a.empty() && a.back() == 0) a.pop_back();
}

// a mod b, b monic and nonempty.
void reduce(std::vector<int>& a, const std::vector<int>& b, int p) {
  const std::size_t db = b.size() - 1;
  while (a.size() > db && !a.empty()) {
    const int lead = a.back();
    const std::size_t shift = a.size() - 1 - db;
    for (std::size_t i = 0; i <= db; ++i)
      a[shift + i] = static_cast<int>((a[shift + i] - static_cast<long long>(lead) * b[i]) % p + p) % p;
    trim(a);
  }
}

void make_monic(std::vector<int>& a, int p) {
  const int c = inv_mod(a.back(), p);
  for (int& x : a) x = static_cast<int>(static_cast<long long>(x) * c % p);
}

// Monic gcd(a, b) for monic a, b.
std::vector<int> poly_gcd(std::vector<int> a, std::vector<int> b, int p) {
  while (!b.empty()) {
    reduce(a, b, p);
    std::swap(a, b);
    if (!b.empty()) make_monic(b, p);
  }
  return a;
}

}  // namespace

std::vector<FFForm> ff_forms(int p, int k) {
  require_prime(p, "ff_forms");
  if (k < 0) throw DomainError("ff_forms: negative degree");
  std::vector<FFForm> out;
  for (int j = 0; j <= k; ++j) {
    // monic of degree j: p^j choices of the lower coefficients
    std::vector<int> lower(static_cast<std::size_t>(j), 0);
    while (true) {
      FFForm f;
      f.p = p;
      f.degree = k;
      f.poly = lower;
      f.poly.push_back(1);
      out.push_back(std::move(f));
      int i = 0;
      while (i < j && ++lower[static_cast<std::size_t>(i)] == p) lower[static_cast<std::size_t>(i++)] = 0;
      if (i == j) break;
    }
  }
  return out;
}

bool ff_common_zero(const std::vector<const FFForm*>& forms) {
  if (forms.empty()) return true;
  bool all_inf = true;
  for (const FFForm* f : forms) {
    if (f->degree == 0) return false;
    all_inf = all_inf && f->zero_at_infinity();
  }
  if (all_inf) return true;
  std::vector<int> g = forms.front()->poly;
  for (std::size_t i = 1; i < forms.size() && g.size() > 1; ++i)
    g = poly_gcd(g, forms[i]->poly, forms[i]->p);
  return g.size() > 1;
}

long long closed_points_p1(int p, int n) {
  require_prime(p, "closed_points_p1");
  if (n < 1) throw DomainError("closed_points_p1: n must be >= 1");
  if (n * std::log2(static_cast<double>(p)) > 60)
    throw DomainError("closed_points_p1: p^n does not fit in 64 bits");
  long long s = 0;
  for (int d = 1; d <= n; ++d) {
    if (n % d != 0) continue;
    long long pd = 1;
    for (int i = 0; i < d; ++i) pd *= p;
    s += moebius_mu(n / d) * (pd + 1);
  }
  return s / n;
}

namespace {

struct TupleCounter {
  std::vector<const std::vector<FFForm>*> lists;       // per position
  std::vector<std::vector<std::vector<int>>> checks;   // per position: constraints (positions)

  bool admissible(int pos, const std::vector<const FFForm*>& cur) const {
    std::vector<const FFForm*> sel;
    for (const auto& c : checks[static_cast<std::size_t>(pos)]) {
      sel.clear();
      for (int q : c) sel.push_back(cur[static_cast<std::size_t>(q)]);
      if (ff_common_zero(sel)) return false;
    }
    return true;
  }

  std::uint64_t run(int pos, std::vector<const FFForm*>& cur) const {
    if (pos == static_cast<int>(lists.size())) return 1;
    std::uint64_t n = 0;
    for (const FFForm& f : *lists[static_cast<std::size_t>(pos)]) {
      cur[static_cast<std::size_t>(pos)] = &f;
      if (admissible(pos, cur)) n += run(pos + 1, cur);
    }
    return n;
  }
};

}  // namespace

std::uint64_t count_divisor_tuples(const ObstructionSet& B, int p, const DegreeVector& d, Exec exec,
                                   double budget) {
  require_prime(p, "count_divisor_tuples");
  const int E = B.ground();
  if (static_cast<int>(d.size()) != E)
    throw InputError("count_divisor_tuples: degree vector has length " + std::to_string(d.size()) +
                     ", expected " + std::to_string(E));
  for (int x : d)
    if (x < 0) throw DomainError("count_divisor_tuples: negative degree");

  double size = 1;
  for (int x : d) size *= (std::pow(p, x + 1) - 1) / (p - 1);
  if (size > budget)
    throw BudgetExceeded("count_divisor_tuples: enumeration of " + std::to_string(size) +
                             " tuples exceeds the budget",
                         size);
  if (E == 0) return B.in_b(0) ? 0 : 1;

  // Smallest degrees outermost.
  std::vector<int> order(static_cast<std::size_t>(E));
  std::iota(order.begin(), order.end(), 0);
  std::stable_sort(order.begin(), order.end(), [&](int a, int b) { return d[a] < d[b]; });
  std::vector<int> pos_of(static_cast<std::size_t>(E));
  for (int i = 0; i < E; ++i) pos_of[static_cast<std::size_t>(order[i])] = i;

  std::vector<std::vector<FFForm>> forms(static_cast<std::size_t>(E));
  TupleCounter tc;
  tc.checks.resize(static_cast<std::size_t>(E));
  for (int i = 0; i < E; ++i) forms[static_cast<std::size_t>(i)] = ff_forms(p, d[order[i]]);
  for (int i = 0; i < E; ++i) tc.lists.push_back(&forms[static_cast<std::size_t>(i)]);
  for (Mask b : B.bmin()) {
    std::vector<int> c;
    for (int e : mask_indices(b, E)) c.push_back(pos_of[static_cast<std::size_t>(e)]);
    if (c.empty()) return 0;  // B contains 0: nothing is admissible
    std::sort(c.begin(), c.end());
    tc.checks[static_cast<std::size_t>(c.back())].push_back(c);
  }

  const auto& first = forms[0];
  const long long n0 = static_cast<long long>(first.size());
  std::uint64_t total = 0;
#pragma omp parallel for schedule(dynamic) reduction(+ : total) if (exec == Exec::parallel)
  for (long long i = 0; i < n0; ++i) {
    std::vector<const FFForm*> cur(static_cast<std::size_t>(E), nullptr);
    cur[0] = &first[static_cast<std::size_t>(i)];
    if (tc.admissible(0, cur)) total += tc.run(1, cur);
  }
  return total;
}

std::uint64_t count_u0d(const Fan& f, int p, int d, Exec exec, double budget) {
  require_prime(p, "count_u0d");
  const ObstructionSet B = b_sigma(f);
  std::uint64_t s = 0;
  for (const auto& v : nstar_enumerate(f, d)) s += count_divisor_tuples(B, p, v, exec, budget);
  std::uint64_t torus = 1;
  for (int i = 0; i < f.rank(); ++i) torus *= static_cast<std::uint64_t>(p - 1);
  return torus * s;
}

namespace {

PowerSeriesMulti power(PowerSeriesMulti base, long long e) {
  PowerSeriesMulti r = PowerSeriesMulti::constant(base.nvars(), base.trunc(), LaurentPoly(1));
  while (e > 0) {
    if (e & 1) r = r * base;
    e >>= 1;
    if (e > 0) base = base * base;
  }
  return r;
}

PowerSeriesMulti ff_euler(const PowerSeriesMulti& factor, int p, int D) {
  PowerSeriesMulti r = PowerSeriesMulti::constant(factor.nvars(), D, LaurentPoly(1));
  for (int n = 1; n <= D; ++n)
    r = r * power(factor.compose_scale(LaurentPoly(1), n, D), closed_points_p1(p, n));
  return r;
}

}  // namespace

FFEulerReport check_ff_euler(const ObstructionSet& B, int p, int D) {
  require_prime(p, "check_ff_euler");
  if (D < 0) throw DomainError("check_ff_euler: negative D");
  FFEulerReport rep;
  const PowerSeriesMulti zq = ff_euler(q_series(B, D), p, D);
  const PowerSeriesMulti zp = ff_euler(p_poly(B, D).truncated(D), p, D);
  const MultiDegreeTable mu = mobius_table(B, D);
  for (const auto& d : all_degree_vectors(B.ground(), D)) {
    ++rep.checked;
    const Rational brute(count_divisor_tuples(B, p, d));
    const LaurentPoly q = zq.coeff(d);
    if (!q.is_constant() || q.coeff(0) != brute) {
      rep.ok = false;
      rep.message = "Q_B product " + q.str() + " vs count " + to_string(brute) + " at " +
                    degree_vector_str(d);
      return rep;
    }
    const LaurentPoly m = zp.coeff(d);
    const Rational spec = mu.at(d).eval(Rational(p));
    if (!m.is_constant() || m.coeff(0) != spec) {
      rep.ok = false;
      rep.message = "P_B product " + m.str() + " vs mu(" + std::to_string(p) + ") " +
                    to_string(spec) + " at " + degree_vector_str(d);
      return rep;
    }
  }
  return rep;
}

}  // namespace motzeta
