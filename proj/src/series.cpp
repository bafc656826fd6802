#include <motzeta/errors.hpp>
#include <motzeta/series.hpp>

#include <algorithm>
#include <numeric>
#include <sstream>

namespace motzeta {

int total_degree(const DegreeVector& d) { return std::accumulate(d.begin(), d.end(), 0); }

bool leq(const DegreeVector& a, const DegreeVector& b) {
  for (std::size_t i = 0; i < a.size(); ++i)
    if (a[i] > b[i]) return false;
  return true;
}

std::string degree_vector_str(const DegreeVector& d) {
  std::ostringstream os;
  os << '(';
  for (std::size_t i = 0; i < d.size(); ++i) os << (i ? "," : "") << d[i];
  os << ')';
  return os.str();
}

LaurentPoly invert_unit(const LaurentPoly& u) {
  if (!u.is_monomial()) throw DomainError("non-invertible constant term: " + u.str());
  const auto& [e, c] = u.terms().front();
  return LaurentPoly::monomial(Rational(1) / c, -e);
}

// ---------------------------------------------------------------- univariate

PowerSeries1::PowerSeries1(int trunc) {
  if (trunc < 0) throw DomainError("PowerSeries1: negative truncation");
  coeffs_.resize(static_cast<std::size_t>(trunc) + 1);
}

PowerSeries1::PowerSeries1(std::vector<LaurentPoly> coeffs) : coeffs_(std::move(coeffs)) {
  if (coeffs_.empty()) throw DomainError("PowerSeries1: needs at least the constant term");
}

PowerSeries1 PowerSeries1::constant(const LaurentPoly& c, int trunc) {
  PowerSeries1 s(trunc);
  s.coeffs_[0] = c;
  return s;
}

PowerSeries1 PowerSeries1::monomial(const LaurentPoly& c, int k, int trunc) {
  PowerSeries1 s(trunc);
  if (k <= trunc) s.coeffs_[static_cast<std::size_t>(k)] = c;
  return s;
}

const LaurentPoly& PowerSeries1::coeff(int n) const {
  if (n < 0 || n > trunc())
    throw DomainError("PowerSeries1: coefficient " + std::to_string(n) +
                      " beyond truncation " + std::to_string(trunc()));
  return coeffs_[static_cast<std::size_t>(n)];
}

void PowerSeries1::set(int n, LaurentPoly c) {
  if (n < 0 || n > trunc()) throw DomainError("PowerSeries1::set beyond truncation");
  coeffs_[static_cast<std::size_t>(n)] = std::move(c);
}

PowerSeries1 PowerSeries1::truncated(int d) const {
  if (d > trunc()) throw DomainError("PowerSeries1: cannot raise truncation");
  return PowerSeries1(std::vector<LaurentPoly>(coeffs_.begin(), coeffs_.begin() + d + 1));
}

PowerSeries1& PowerSeries1::operator+=(const PowerSeries1& o) {
  coeffs_.resize(static_cast<std::size_t>(std::min(trunc(), o.trunc())) + 1);
  for (std::size_t i = 0; i < coeffs_.size(); ++i) coeffs_[i] += o.coeffs_[i];
  return *this;
}

PowerSeries1& PowerSeries1::operator-=(const PowerSeries1& o) {
  coeffs_.resize(static_cast<std::size_t>(std::min(trunc(), o.trunc())) + 1);
  for (std::size_t i = 0; i < coeffs_.size(); ++i) coeffs_[i] -= o.coeffs_[i];
  return *this;
}

PowerSeries1 operator*(const PowerSeries1& a, const PowerSeries1& b) {
  const int d = std::min(a.trunc(), b.trunc());
  PowerSeries1 out(d);
  for (int i = 0; i <= d; ++i) {
    if (a.coeffs_[i].is_zero()) continue;
    for (int j = 0; i + j <= d; ++j) {
      if (b.coeffs_[j].is_zero()) continue;
      out.coeffs_[i + j] += a.coeffs_[i] * b.coeffs_[j];
    }
  }
  return out;
}

PowerSeries1 operator*(const LaurentPoly& c, const PowerSeries1& a) {
  PowerSeries1 out = a;
  for (auto& x : out.coeffs_) x = c * x;
  return out;
}

PowerSeries1 PowerSeries1::inverse() const {
  const LaurentPoly h0 = invert_unit(coeffs_[0]);
  const int d = trunc();
  PowerSeries1 h(d);
  h.coeffs_[0] = h0;
  for (int k = 1; k <= d; ++k) {
    LaurentPoly acc;
    for (int j = 1; j <= k; ++j)
      if (!coeffs_[j].is_zero()) acc += coeffs_[j] * h.coeffs_[k - j];
    h.coeffs_[k] = -(h0 * acc);
  }
  return h;
}

// With g = exp(f): T g' = g * (T f'), i.e. k g_k = sum_j j f_j g_{k-j}.
PowerSeries1 PowerSeries1::exp() const {
  if (!coeffs_[0].is_zero()) throw DomainError("exp: constant term must be 0");
  const int d = trunc();
  PowerSeries1 g(d);
  g.coeffs_[0] = LaurentPoly(1);
  for (int k = 1; k <= d; ++k) {
    LaurentPoly acc;
    for (int j = 1; j <= k; ++j)
      if (!coeffs_[j].is_zero()) acc += Rational(j) * (coeffs_[j] * g.coeffs_[k - j]);
    g.coeffs_[k] = acc / Rational(k);
  }
  return g;
}

// k f_k = k g_k - sum_{j<k} j f_j g_{k-j}.
PowerSeries1 PowerSeries1::log() const {
  if (coeffs_[0] != LaurentPoly(1)) throw DomainError("log: constant term must be 1");
  const int d = trunc();
  PowerSeries1 f(d);
  for (int k = 1; k <= d; ++k) {
    LaurentPoly acc = Rational(k) * coeffs_[k];
    for (int j = 1; j < k; ++j)
      if (!f.coeffs_[j].is_zero()) acc -= Rational(j) * (f.coeffs_[j] * coeffs_[k - j]);
    f.coeffs_[k] = acc / Rational(k);
  }
  return f;
}

PowerSeries1 PowerSeries1::compose_scale(const LaurentPoly& c, int k) const {
  if (k < 1) throw DomainError("compose_scale: exponent must be >= 1");
  const int d = k * (trunc() + 1) - 1;
  PowerSeries1 out(d);
  LaurentPoly cp(1);
  for (int i = 0; i <= trunc(); ++i) {
    out.coeffs_[static_cast<std::size_t>(i * k)] = cp * coeffs_[i];
    cp *= c;
  }
  return out;
}

PowerSeries1 PowerSeries1::euler_derivative() const {
  PowerSeries1 out(trunc());
  for (int i = 1; i <= trunc(); ++i) out.coeffs_[i] = Rational(i) * coeffs_[i];
  return out;
}

// -------------------------------------------------------------- multivariate

PowerSeriesMulti::PowerSeriesMulti(int nvars, int trunc) : nvars_(nvars), trunc_(trunc) {
  if (nvars < 1) throw DomainError("PowerSeriesMulti: need at least one variable");
  if (trunc < 0) throw DomainError("PowerSeriesMulti: negative truncation");
}

PowerSeriesMulti PowerSeriesMulti::constant(int nvars, int trunc, const LaurentPoly& c) {
  PowerSeriesMulti s(nvars, trunc);
  s.set(DegreeVector(static_cast<std::size_t>(nvars), 0), c);
  return s;
}

PowerSeriesMulti PowerSeriesMulti::monomial(int nvars, int trunc, const DegreeVector& e,
                                            const LaurentPoly& c) {
  PowerSeriesMulti s(nvars, trunc);
  if (total_degree(e) <= trunc) s.set(e, c);
  return s;
}

LaurentPoly PowerSeriesMulti::coeff(const DegreeVector& e) const {
  if (static_cast<int>(e.size()) != nvars_) throw DomainError("coeff: arity mismatch");
  if (total_degree(e) > trunc_)
    throw DomainError("PowerSeriesMulti: coefficient " + degree_vector_str(e) +
                      " beyond truncation " + std::to_string(trunc_));
  auto it = terms_.find(e);
  return it == terms_.end() ? LaurentPoly() : it->second;
}

void PowerSeriesMulti::set(const DegreeVector& e, LaurentPoly c) {
  if (static_cast<int>(e.size()) != nvars_) throw DomainError("set: arity mismatch");
  if (total_degree(e) > trunc_) throw DomainError("set: beyond truncation");
  if (c.is_zero())
    terms_.erase(e);
  else
    terms_[e] = std::move(c);
}

void PowerSeriesMulti::add(const DegreeVector& e, const LaurentPoly& c) {
  if (c.is_zero()) return;
  auto [it, inserted] = terms_.try_emplace(e, c);
  if (!inserted) {
    it->second += c;
    if (it->second.is_zero()) terms_.erase(it);
  }
}

LaurentPoly PowerSeriesMulti::constant_term() const {
  return coeff(DegreeVector(static_cast<std::size_t>(nvars_), 0));
}

int PowerSeriesMulti::valuation_of_nonconstant() const {
  int v = trunc_ + 1;
  for (const auto& [e, c] : terms_) {
    const int t = total_degree(e);
    if (t > 0) v = std::min(v, t);
  }
  return v;
}

PowerSeriesMulti PowerSeriesMulti::truncated(int d) const {
  if (d > trunc_) throw DomainError("PowerSeriesMulti: cannot raise truncation");
  PowerSeriesMulti out(nvars_, d);
  for (const auto& [e, c] : terms_)
    if (total_degree(e) <= d) out.terms_.emplace(e, c);
  return out;
}

PowerSeriesMulti PowerSeriesMulti::with_trunc_for_polynomial(int d) const {
  PowerSeriesMulti out(nvars_, d);
  for (const auto& [e, c] : terms_)
    if (total_degree(e) <= d) out.terms_.emplace(e, c);
  return out;
}

void PowerSeriesMulti::check_compatible(const PowerSeriesMulti& o) const {
  if (nvars_ != o.nvars_) throw DomainError("PowerSeriesMulti: variable sets differ");
}

PowerSeriesMulti& PowerSeriesMulti::operator+=(const PowerSeriesMulti& o) {
  check_compatible(o);
  if (o.trunc_ < trunc_) *this = truncated(o.trunc_);
  for (const auto& [e, c] : o.terms_)
    if (total_degree(e) <= trunc_) add(e, c);
  return *this;
}

PowerSeriesMulti& PowerSeriesMulti::operator-=(const PowerSeriesMulti& o) {
  check_compatible(o);
  if (o.trunc_ < trunc_) *this = truncated(o.trunc_);
  for (const auto& [e, c] : o.terms_)
    if (total_degree(e) <= trunc_) add(e, -c);
  return *this;
}

namespace {

DegreeVector plus(const DegreeVector& a, const DegreeVector& b) {
  DegreeVector s(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) s[i] = a[i] + b[i];
  return s;
}

// Accumulates x*y into acc for the pairs whose total degree is <= limit.
void mul_into(PowerSeriesMulti::Map& acc, const PowerSeriesMulti::Map& x,
              const PowerSeriesMulti::Map& y, int limit) {
  for (const auto& [ex, cx] : x) {
    const int dx = total_degree(ex);
    for (const auto& [ey, cy] : y) {
      if (dx + total_degree(ey) > limit) continue;
      auto key = plus(ex, ey);
      LaurentPoly prod = cx * cy;
      auto [it, inserted] = acc.try_emplace(std::move(key), prod);
      if (!inserted) {
        it->second += prod;
        if (it->second.is_zero()) acc.erase(it);
      }
    }
  }
}

void add_scaled(PowerSeriesMulti::Map& acc, const PowerSeriesMulti::Map& x, const Rational& s) {
  for (const auto& [e, c] : x) {
    auto [it, inserted] = acc.try_emplace(e, c * s);
    if (!inserted) {
      it->second += c * s;
      if (it->second.is_zero()) acc.erase(it);
    }
  }
}

}  // namespace

PowerSeriesMulti operator*(const PowerSeriesMulti& a, const PowerSeriesMulti& b) {
  a.check_compatible(b);
  PowerSeriesMulti out(a.nvars_, std::min(a.trunc_, b.trunc_));
  mul_into(out.terms_, a.terms_, b.terms_, out.trunc_);
  return out;
}

PowerSeriesMulti operator*(const LaurentPoly& c, const PowerSeriesMulti& a) {
  PowerSeriesMulti out(a.nvars_, a.trunc_);
  if (c.is_zero()) return out;
  for (const auto& [e, x] : a.terms_) out.terms_.emplace(e, c * x);
  return out;
}

std::vector<PowerSeriesMulti::Map> PowerSeriesMulti::graded() const {
  std::vector<Map> g(static_cast<std::size_t>(trunc_) + 1);
  for (const auto& [e, c] : terms_) g[static_cast<std::size_t>(total_degree(e))].emplace(e, c);
  return g;
}

PowerSeriesMulti PowerSeriesMulti::inverse() const {
  const LaurentPoly h0 = invert_unit(constant_term());
  const auto g = graded();
  std::vector<Map> h(g.size());
  h[0].emplace(DegreeVector(static_cast<std::size_t>(nvars_), 0), h0);
  for (int k = 1; k <= trunc_; ++k) {
    Map acc;
    for (int j = 1; j <= k; ++j) mul_into(acc, g[j], h[k - j], k);
    for (auto& [e, c] : acc) h[k].emplace(e, -(h0 * c));
  }
  PowerSeriesMulti out(nvars_, trunc_);
  for (auto& m : h) out.terms_.merge(m);
  return out;
}

// Graded by total degree: with E = sum_e T_e d/dT_e, E exp(f) = exp(f) E f.
PowerSeriesMulti PowerSeriesMulti::exp() const {
  if (!constant_term().is_zero()) throw DomainError("exp: constant term must be 0");
  const auto f = graded();
  std::vector<Map> g(f.size());
  g[0].emplace(DegreeVector(static_cast<std::size_t>(nvars_), 0), LaurentPoly(1));
  for (int k = 1; k <= trunc_; ++k) {
    Map acc;
    for (int j = 1; j <= k; ++j) {
      if (f[j].empty() || g[k - j].empty()) continue;
      Map part;
      mul_into(part, f[j], g[k - j], k);
      add_scaled(acc, part, Rational(j));
    }
    for (auto& [e, c] : acc) g[k].emplace(e, c / Rational(k));
  }
  PowerSeriesMulti out(nvars_, trunc_);
  for (auto& m : g) out.terms_.merge(m);
  return out;
}

PowerSeriesMulti PowerSeriesMulti::log() const {
  if (constant_term() != LaurentPoly(1)) throw DomainError("log: constant term must be 1");
  const auto g = graded();
  std::vector<Map> f(g.size());
  for (int k = 1; k <= trunc_; ++k) {
    Map acc;
    add_scaled(acc, g[k], Rational(k));
    for (int j = 1; j < k; ++j) {
      if (f[j].empty() || g[k - j].empty()) continue;
      Map part;
      mul_into(part, f[j], g[k - j], k);
      add_scaled(acc, part, Rational(-j));
    }
    for (auto& [e, c] : acc) f[k].emplace(e, c / Rational(k));
  }
  PowerSeriesMulti out(nvars_, trunc_);
  for (auto& m : f) out.terms_.merge(m);
  return out;
}

PowerSeriesMulti PowerSeriesMulti::compose_scale(const LaurentPoly& c, int k,
                                                 int requested_trunc) const {
  if (k < 1) throw DomainError("compose_scale: exponent must be >= 1");
  const int d = std::min(requested_trunc, k * (trunc_ + 1) - 1);
  PowerSeriesMulti out(nvars_, d);
  for (const auto& [e, x] : terms_) {
    const int t = total_degree(e);
    if (t * k > d) continue;
    DegreeVector ek(e.size());
    for (std::size_t i = 0; i < e.size(); ++i) ek[i] = e[i] * k;
    out.terms_.emplace(std::move(ek), c.pow(static_cast<unsigned>(t)) * x);
  }
  return out;
}

}  // namespace motzeta
