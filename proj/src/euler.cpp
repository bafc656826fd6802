#include <motzeta/errors.hpp>
#include <motzeta/euler.hpp>

#include <algorithm>

namespace motzeta {

CellularClass::CellularClass(std::map<int, long long> cells, int dim)
    : cells_(std::move(cells)), dim_(dim) {
  if (dim_ < 0) throw InputError("CellularClass: negative dimension");
  std::erase_if(cells_, [](const auto& kv) { return kv.second == 0; });
  bool effective = true;
  int top = 0;
  for (const auto& [i, c] : cells_) {
    if (c < 0) effective = false;
    top = std::max(top, i);
  }
  if (effective && top > dim_)
    throw InputError("CellularClass: cell L^" + std::to_string(top) + " exceeds dimension " +
                     std::to_string(dim_));
}

CellularClass CellularClass::projective(int n) {
  std::map<int, long long> cells;
  for (int i = 0; i <= n; ++i) cells[i] = 1;
  return CellularClass(std::move(cells), n);
}

CellularClass CellularClass::torus(int r) {
  // (L - 1)^r = sum_i binom(r, i) (-1)^(r-i) L^i
  std::map<int, long long> cells;
  long long b = 1;
  for (int i = 0; i <= r; ++i) {
    cells[i] = ((r - i) % 2 == 0 ? b : -b);
    b = b * (r - i) / (i + 1);
  }
  return CellularClass(std::move(cells), r);
}

CellularClass CellularClass::product(const CellularClass& a, const CellularClass& b) {
  std::map<int, long long> cells;
  for (const auto& [i, ci] : a.cells_)
    for (const auto& [j, cj] : b.cells_) cells[i + j] += ci * cj;
  return CellularClass(std::move(cells), a.dim_ + b.dim_);
}

bool CellularClass::is_virtual() const {
  return std::any_of(cells_.begin(), cells_.end(), [](const auto& kv) { return kv.second < 0; });
}

LaurentPoly CellularClass::value() const {
  std::vector<LaurentPoly::Term> t;
  for (const auto& [i, c] : cells_) t.emplace_back(i, Rational(c));
  return LaurentPoly::from_terms(std::move(t));
}

int moebius_mu(int n) {
  if (n < 1) throw DomainError("moebius_mu: n must be >= 1");
  int mu = 1;
  for (int p = 2; p * p <= n; ++p) {
    if (n % p != 0) continue;
    n /= p;
    if (n % p == 0) return 0;
    mu = -mu;
  }
  if (n > 1) mu = -mu;
  return mu;
}

PowerSeries1 kapranov_zeta(const CellularClass& x, int D, bool allow_virtual) {
  if (D < 0) throw DomainError("kapranov_zeta: negative truncation");
  if (x.is_virtual() && !allow_virtual)
    throw InputError("kapranov_zeta: negative cell multiplicity without the virtual flag");
  PowerSeries1 z = PowerSeries1::constant(LaurentPoly(1), D);
  for (const auto& [i, c] : x.cells()) {
    // (1 - L^i T)^a with a = -c: sum_k binom(a, k) (-1)^k L^(ik) T^k.
    const Rational a(-c);
    PowerSeries1 factor(D);
    Rational b = 1;
    for (int k = 0; k <= D; ++k) {
      factor.set(k, LaurentPoly::monomial(k % 2 == 0 ? b : Rational(-b), i * k));
      b = b * (a - k) / (k + 1);
    }
    z = z * factor;
  }
  return z;
}

PhiPsiSeq phi_psi(const CellularClass& x, int N) {
  if (N < 1) throw DomainError("phi_psi: N must be >= 1");
  const PowerSeries1 lz = kapranov_zeta(x, N, /*allow_virtual=*/true).log();
  PhiPsiSeq seq;
  seq.N = N;
  for (int n = 1; n <= N; ++n) seq.phi_values.push_back(Rational(n) * lz.coeff(n));
  for (int n = 1; n <= N; ++n) {
    LaurentPoly s;
    for (int d = 1; d <= n; ++d)
      if (n % d == 0) s += Rational(moebius_mu(n / d)) * seq.phi(d);
    seq.psi_values.push_back(s / Rational(n));
  }
  return seq;
}

LaurentPoly phi_explicit(const std::vector<LaurentPoly>& sym, int n) {
  if (n < 1) throw DomainError("phi_explicit: n must be >= 1");
  if (static_cast<int>(sym.size()) < n + 1)
    throw InputError("phi_explicit: need classes [X^<0>] .. [X^<" + std::to_string(n) + ">]");
  // comp[k][m] = sum over compositions (m_1..m_k) of m of prod [X^<m_i>].
  std::vector<std::vector<LaurentPoly>> comp(static_cast<std::size_t>(n) + 1,
                                             std::vector<LaurentPoly>(n + 1));
  comp[0][0] = LaurentPoly(1);
  for (int k = 1; k <= n; ++k)
    for (int m = k; m <= n; ++m)
      for (int last = 1; last <= m - (k - 1); ++last)
        if (!comp[k - 1][m - last].is_zero()) comp[k][m] += comp[k - 1][m - last] * sym[last];
  LaurentPoly phi;
  for (int k = 1; k <= n; ++k) {
    const Rational w = Rational(k % 2 == 1 ? n : -n) / k;
    phi += w * comp[k][n];
  }
  return phi;
}

namespace {

PowerSeriesMulti euler_direct(const std::vector<LaurentPoly>& psi, const PowerSeriesMulti& P,
                              int D, int v) {
  const PowerSeriesMulti logp = P.log();
  PowerSeriesMulti sum(P.nvars(), D);
  for (int n = 1; n * v <= D; ++n) {
    const auto& x = psi[static_cast<std::size_t>(n - 1)];
    if (x.is_zero()) continue;
    sum += x * logp.compose_scale(LaurentPoly(1), n, D);
  }
  return sum.exp();
}

PowerSeriesMulti euler_closed(const std::vector<LaurentPoly>& psi, const PowerSeriesMulti& P,
                              int D, int v) {
  const int nv = P.nvars();
  const PowerSeriesMulti pm1 = P - PowerSeriesMulti::constant(nv, P.trunc(), LaurentPoly(1));
  // prod_f sum_k binom(Psi_f, k) (P(T^f) - 1)^k, with k f v <= D.
  PowerSeriesMulti total = PowerSeriesMulti::constant(nv, D, LaurentPoly(1));
  for (int f = 1; f * v <= D; ++f) {
    const auto& x = psi[static_cast<std::size_t>(f - 1)];
    if (x.is_zero()) continue;
    const PowerSeriesMulti r = pm1.compose_scale(LaurentPoly(1), f, D);
    PowerSeriesMulti factor = PowerSeriesMulti::constant(nv, D, LaurentPoly(1));
    PowerSeriesMulti power = factor;
    for (int k = 1; k * f * v <= D; ++k) {
      power = power * r;
      const LaurentPoly b = binomial(x, static_cast<unsigned>(k));
      if (!b.is_zero()) factor += b * power;
    }
    total = total * factor;
  }
  return total;
}

}  // namespace

PowerSeriesMulti euler_product(const std::vector<LaurentPoly>& psi, const PowerSeriesMulti& P,
                               int D, EulerAlgo algo) {
  if (P.constant_term() != LaurentPoly(1))
    throw DomainError("euler_product: P must have constant term 1");
  D = std::min(D, P.trunc());
  const PowerSeriesMulti Pd = P.truncated(D);
  const int v = Pd.valuation_of_nonconstant();
  if (v > D) return PowerSeriesMulti::constant(P.nvars(), D, LaurentPoly(1));
  if (static_cast<int>(psi.size()) < D / v)
    throw DomainError("euler_product: need Psi_n up to n = " + std::to_string(D / v));
  return algo == EulerAlgo::direct ? euler_direct(psi, Pd, D, v) : euler_closed(psi, Pd, D, v);
}

}  // namespace motzeta
