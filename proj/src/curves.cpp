#include <motzeta/curves.hpp>
#include <motzeta/errors.hpp>
#include <motzeta/euler.hpp>

#include <bit>
#include <cmath>
#include <exception>
#include <numeric>
#include <optional>

namespace motzeta {

namespace {

LaurentPoly torus_factor(int dim) { return (LaurentPoly::L() - LaurentPoly(1)).pow(dim); }

PowerSeries1 poly_series(std::initializer_list<std::pair<int, LaurentPoly>> terms, int D) {
  PowerSeries1 s(D);
  for (const auto& [k, c] : terms)
    if (k <= D) s.set(k, s.coeff(k) + c);
  return s;
}

}  // namespace

LaurentPoly u0d_class(const Fan& f, int d, const MultiDegreeTable& mu) {
  if (d < 0) throw DomainError("u0d_class: negative degree");
  LaurentPoly s;
  for (const auto& v : nstar_enumerate(f, d)) s += xb_class_at(mu, v);
  return torus_factor(f.rank()) * s;
}

LaurentPoly u0d_class(const Fan& f, int d) {
  if (d < 0) throw DomainError("u0d_class: negative degree");
  return u0d_class(f, d, mobius_table(b_sigma(f), d));
}

HeightSeries height_series(const Fan& f, int D, Exec exec) {
  if (D < 0) throw DomainError("height_series: negative D");
  const MultiDegreeTable mu = mobius_table(b_sigma(f), D);
  const LaurentPoly torus = torus_factor(f.rank());
  HeightSeries hs{f, D, std::vector<LaurentPoly>(static_cast<std::size_t>(D) + 1),
                  std::vector<std::size_t>(static_cast<std::size_t>(D) + 1, 0)};
  std::exception_ptr err;
#pragma omp parallel for schedule(dynamic) if (exec == Exec::parallel)
  for (int d = 0; d <= D; ++d) {
    try {
      const auto vecs = nstar_enumerate(f, d);
      LaurentPoly s;
      for (const auto& v : vecs) s += xb_class_at(mu, v);
      hs.classes[static_cast<std::size_t>(d)] = torus * s;
      hs.components[static_cast<std::size_t>(d)] = vecs.size();
    } catch (...) {
#pragma omp critical(motzeta_height_err)
      if (!err) err = std::current_exception();
    }
  }
  if (err) std::rethrow_exception(err);
  return hs;
}

PowerSeries1 hirzebruch_closed_form(int m, int D) {
  if (m < 0) throw DomainError("hirzebruch_closed_form: m must be >= 0");
  if (D < 0) throw DomainError("hirzebruch_closed_form: negative D");
  const LaurentPoly one(1);
  const LaurentPoly L = LaurentPoly::L();
  const PowerSeries1 a = poly_series({{0, L}, {2, -L}}, D) *
                         poly_series({{0, one}, {m + 2, LaurentPoly::L(m + 1)}}, D);
  const PowerSeries1 b1 = poly_series({{0, one}, {2, -LaurentPoly::L(2)}}, D) *
                          poly_series({{0, one}, {m + 2, -LaurentPoly::L(m + 2)}}, D);
  const PowerSeries1 c = poly_series({{0, one}, {m + 2, L}}, D);
  const PowerSeries1 b2 = poly_series({{0, one}, {m + 2, -LaurentPoly::L(m + 2)}}, D);
  return (L - one) * (a * b1.inverse() - c * b2.inverse());
}

PowerSeries1 hirzebruch_prefactor(int m, int D) {
  const LaurentPoly one(1);
  PowerSeries1 geo(D);
  for (int k = 0; k <= std::min(m + 1, D); ++k) geo.set(k, LaurentPoly::L(k));
  const PowerSeries1 plus = poly_series({{0, one}, {1, LaurentPoly::L()}}, D);
  const PowerSeries1 minus = poly_series({{0, one}, {1, -LaurentPoly::L()}}, D);
  return plus * geo * minus * minus;
}

namespace {

// a / b for Laurent polynomials when b divides a exactly, else nullopt.
std::optional<LaurentPoly> divide_exact(LaurentPoly a, const LaurentPoly& b) {
  const int db = b.vdim();
  const Rational lead = b.coeff(db);
  LaurentPoly q;
  const int floor = a.is_zero() ? 0 : a.min_exponent() - b.min_exponent();
  while (!a.is_zero()) {
    const int k = a.vdim() - db;
    if (k < floor) return std::nullopt;
    const LaurentPoly t = LaurentPoly::monomial(a.coeff(a.vdim()) / lead, k);
    q += t;
    a -= t * b;
  }
  return q;
}

LaurentPoly value_at_inverse(const std::vector<LaurentPoly>& coeffs) {
  LaurentPoly v;
  for (std::size_t k = 0; k < coeffs.size(); ++k) v += coeffs[k].shift(-static_cast<int>(k));
  return v;
}

}  // namespace

HirzebruchCheck hirzebruch_theorem_check(int m, const HeightSeries& hs) {
  const int D = hs.D;
  if (D < 2 * (m + 3))
    throw DomainError("hirzebruch_theorem_check: need D >= " + std::to_string(2 * (m + 3)));
  const PowerSeries1 prod = PowerSeries1(hs.classes) * hirzebruch_prefactor(m, D);
  HirzebruchCheck r;
  r.expected_degree = m + 4;
  for (int k = r.expected_degree + 1; k <= D; ++k)
    if (!prod.coeff(k).is_zero()) {
      r.first_bad_degree = k;
      break;
    }
  r.is_polynomial = r.first_bad_degree < 0;
  if (r.is_polynomial) {
    for (int k = 0; k <= r.expected_degree; ++k) r.polynomial.push_back(prod.coeff(k));
    r.value_at_Linv = value_at_inverse(r.polynomial);
    return r;
  }
  // Try one extra pole at T^{m+2} = L^-2.
  const PowerSeries1 num = prod * poly_series({{0, LaurentPoly(1)}, {m + 2, -LaurentPoly::L(2)}}, D);
  int last = -1;
  for (int k = 0; k <= D; ++k)
    if (!num.coeff(k).is_zero()) last = k;
  if (last < 0 || last + m + 2 > D) return r;
  r.numerator.assign(num.coeffs().begin(), num.coeffs().begin() + last + 1);
  // 1 - L^2 L^{-(m+2)} = 1 - L^{-m}; m >= 1 here, so it is a nonzero unit.
  const LaurentPoly den = LaurentPoly(1) - LaurentPoly::L(-m);
  if (den.is_zero()) return r;
  if (auto v = divide_exact(value_at_inverse(r.numerator), den)) {
    r.rational_form = true;
    r.value_at_Linv = *v;
  }
  return r;
}

HirzebruchCheck hirzebruch_theorem_check(int m, int D) {
  if (D < 2 * (m + 3))
    throw DomainError("hirzebruch_theorem_check: need D >= " + std::to_string(2 * (m + 3)));
  return hirzebruch_theorem_check(m, height_series(hirzebruch_fan(m), D));
}

double psi_p1_numeric(int n, double L) {
  if (n < 1) throw DomainError("psi_p1_numeric: n must be >= 1");
  double s = 0;
  for (int k = 1; k <= n; ++k)
    if (n % k == 0) s += moebius_mu(n / k) * (std::pow(L, k) + 1.0);
  return s / n;
}

LaurentPoly local_factor_minus_one(const Fan& f) {
  const int rk = pic_rank(f);
  const int r = f.rank();
  const LaurentPoly one_minus_x = LaurentPoly(1) - LaurentPoly::L();
  LaurentPoly s;
  for (const auto& cone : f.all_cones()) {
    const int dim = static_cast<int>(cone.size());
    s += one_minus_x.pow(static_cast<unsigned>(rk + r - dim)) * LaurentPoly::L(dim);
  }
  return s - LaurentPoly(1);
}

TamagawaReport tamagawa_constant(const Fan& f, double L, int N, int D, bool allow_approx) {
  if (!(L > 1)) throw DomainError("tamagawa_constant: L must be > 1");
  if (N < 1 || D < 0) throw DomainError("tamagawa_constant: need N >= 1 and D >= 0");
  TamagawaReport rep;
  rep.alpha = alpha_star(f);
  if (!rep.alpha.exact && !allow_approx)
    throw DomainError("tamagawa_constant: alpha* is only approximate for Picard rank " +
                      std::to_string(pic_rank(f)) + "; pass the approximate flag");
  const double alpha = rep.alpha.exact ? to_double(rep.alpha.value) : rep.alpha.approximate;
  const int rk = pic_rank(f);
  const double pre = alpha * std::pow(L, f.rank()) * std::pow(1.0 - 1.0 / L, -rk);

  // exp form; the local factor minus 1 is O(x^2), so log1p keeps precision.
  const LaurentPoly g = local_factor_minus_one(f);
  double sum = 0;
  for (int n = 1; n <= N; ++n) {
    const double term = psi_p1_numeric(n, L) * std::log1p(g.eval(std::pow(L, -n)));
    sum += term;
    if (n == N) rep.last_term = std::abs(term);
  }
  rep.exp_path = pre * std::exp(sum);

  // Direct sum of mu(e) L^{-|e|}, grouped by |e|: specialize every T_e to t.
  const ObstructionSet B = b_sigma(f);
  const auto mu0 = mu0_table(B);
  PowerSeriesMulti p(1, std::max(D, B.ground()));
  for (std::size_t n = 0; n < mu0.size(); ++n)
    if (mu0[n] != 0) p.add({std::popcount(static_cast<Mask>(n))}, LaurentPoly(mu0[n]));
  double mu_sum = 1;
  if (D > 0) {
    const auto seq = phi_psi(CellularClass::projective(1), D);
    const PowerSeriesMulti z = euler_product(seq, p, D, EulerAlgo::direct);
    mu_sum = 0;
    for (int k = D; k >= 0; --k) mu_sum += z.coeff({k}).eval(L) * std::pow(L, -k);
  }
  rep.mu_path = pre * mu_sum;
  rep.difference = std::abs(rep.exp_path - rep.mu_path);
  return rep;
}

GrowthReport growth_diagnostics(const HeightSeries& hs, int dmax) {
  GrowthReport g;
  const Fan& f = hs.fan;
  g.pic_rank = pic_rank(f);
  g.offset = f.rank();
  for (int d = 0; d <= hs.D; ++d) {
    const auto& c = hs.classes[static_cast<std::size_t>(d)];
    const bool supported = hs.components[static_cast<std::size_t>(d)] > 0;
    if (supported != !c.is_zero()) {
      g.offending.push_back(d);
      g.issues.push_back("degree " + std::to_string(d) + ": support of class and count differ");
      continue;
    }
    if (supported && c.vdim() - d != g.offset) {
      g.offending.push_back(d);
      g.issues.push_back("degree " + std::to_string(d) + ": vdim - d = " +
                         std::to_string(c.vdim() - d));
    }
  }
  g.vdim_offset_constant = g.offending.empty();

  if (g.pic_rank > 2) {
    g.differences_vanish = false;
    g.issues.push_back("finite differences need Picard rank <= 2");
    return g;
  }
  g.period = nstar_period(f);
  g.tail_start = g.period;
  std::vector<long long> n(static_cast<std::size_t>(dmax) + 1);
  for (int d = 0; d <= dmax; ++d)
    n[static_cast<std::size_t>(d)] = static_cast<long long>(nstar_enumerate(f, d).size());
  for (int c = 0; c < g.period; ++c) {
    std::vector<long long> seq;
    for (int d = c; d <= dmax; d += g.period)
      if (d >= g.tail_start) seq.push_back(n[static_cast<std::size_t>(d)]);
    if (std::all_of(seq.begin(), seq.end(), [](long long v) { return v == 0; })) continue;
    if (static_cast<int>(seq.size()) < g.pic_rank + 1) {
      g.differences_vanish = false;
      g.issues.push_back("residue " + std::to_string(c) + ": too few points for the check");
      continue;
    }
    for (int k = 0; k < g.pic_rank; ++k) {
      std::adjacent_difference(seq.begin(), seq.end(), seq.begin());
      seq.erase(seq.begin());
    }
    if (std::any_of(seq.begin(), seq.end(), [](long long v) { return v != 0; })) {
      g.differences_vanish = false;
      g.issues.push_back("residue " + std::to_string(c) + ": nonzero finite difference");
    }
  }
  return g;
}

}  // namespace motzeta
