#include <motzeta/errors.hpp>
#include <motzeta/fan.hpp>

#include <algorithm>
#include <bit>
#include <cmath>
#include <functional>
#include <map>
#include <numeric>
#include <sstream>

namespace motzeta {

namespace {

using Matrix = std::vector<std::vector<Rational>>;

int matrix_rank(Matrix m) {
  if (m.empty()) return 0;
  const std::size_t rows = m.size(), cols = m[0].size();
  int rank = 0;
  for (std::size_t c = 0; c < cols && rank < static_cast<int>(rows); ++c) {
    std::size_t piv = static_cast<std::size_t>(rank);
    while (piv < rows && m[piv][c] == 0) ++piv;
    if (piv == rows) continue;
    std::swap(m[piv], m[static_cast<std::size_t>(rank)]);
    auto& prow = m[static_cast<std::size_t>(rank)];
    for (std::size_t r = static_cast<std::size_t>(rank) + 1; r < rows; ++r) {
      if (m[r][c] == 0) continue;
      const Rational q = m[r][c] / prow[c];
      for (std::size_t k = c; k < cols; ++k) m[r][k] -= q * prow[k];
    }
    ++rank;
  }
  return rank;
}

Rational determinant(Matrix m) {
  const std::size_t n = m.size();
  Rational det = 1;
  for (std::size_t c = 0; c < n; ++c) {
    std::size_t piv = c;
    while (piv < n && m[piv][c] == 0) ++piv;
    if (piv == n) return 0;
    if (piv != c) {
      std::swap(m[piv], m[c]);
      det = -det;
    }
    det *= m[c][c];
    for (std::size_t r = c + 1; r < n; ++r) {
      if (m[r][c] == 0) continue;
      const Rational q = m[r][c] / m[c][c];
      for (std::size_t k = c; k < n; ++k) m[r][k] -= q * m[c][k];
    }
  }
  return det;
}

Matrix rows_of(const std::vector<IntVector>& vs) {
  Matrix m;
  for (const auto& v : vs) {
    std::vector<Rational> row;
    for (long long x : v) row.emplace_back(x);
    m.push_back(std::move(row));
  }
  return m;
}

long long gcd_all(const IntVector& v) {
  long long g = 0;
  for (long long x : v) g = std::gcd(g, x);
  return g;
}

// gcd of all k x k minors of the k x r matrix with the given rows.
BigInt minor_gcd(const std::vector<IntVector>& vs, int r) {
  const int k = static_cast<int>(vs.size());
  BigInt g = 0;
  std::vector<int> cols(static_cast<std::size_t>(k));
  std::function<void(int, int)> rec = [&](int start, int depth) {
    if (depth == k) {
      Matrix m;
      for (const auto& v : vs) {
        std::vector<Rational> row;
        for (int c : cols) row.emplace_back(v[static_cast<std::size_t>(c)]);
        m.push_back(std::move(row));
      }
      const Rational d = determinant(std::move(m));
      BigInt di = boost::multiprecision::numerator(d);
      if (di < 0) di = -di;
      g = boost::multiprecision::gcd(g, di);
      return;
    }
    for (int c = start; c < r; ++c) {
      cols[static_cast<std::size_t>(depth)] = c;
      rec(c + 1, depth + 1);
    }
  };
  rec(0, 0);
  return g;
}

std::vector<IntVector> cone_rays(const Fan& f, const std::vector<int>& cone) {
  std::vector<IntVector> out;
  for (int i : cone) out.push_back(f.rays()[static_cast<std::size_t>(i)]);
  return out;
}

}  // namespace

// ------------------------------------------------------------------- Fan

Fan::Fan(int rank, std::vector<IntVector> rays, std::vector<std::vector<int>> max_cones)
    : rank_(rank), rays_(std::move(rays)), max_cones_(std::move(max_cones)) {
  if (rank_ < 1) throw InputError("fan: rank must be >= 1");
  if (rays_.empty()) throw InputError("fan: no rays");
  if (static_cast<int>(rays_.size()) > kMaxGround)
    throw InputError("fan: at most " + std::to_string(kMaxGround) + " rays supported");
  for (std::size_t i = 0; i < rays_.size(); ++i) {
    if (static_cast<int>(rays_[i].size()) != rank_)
      throw InputError("fan: ray " + std::to_string(i) + " has wrong length");
    const long long g = gcd_all(rays_[i]);
    if (g == 0) throw InputError("fan: ray " + std::to_string(i) + " is zero");
    if (g != 1) throw InputError("fan: ray " + std::to_string(i) + " is not primitive");
    for (std::size_t j = 0; j < i; ++j)
      if (rays_[j] == rays_[i])
        throw InputError("fan: rays " + std::to_string(j) + " and " + std::to_string(i) +
                         " coincide");
  }
  if (max_cones_.empty()) throw InputError("fan: no maximal cones");
  for (std::size_t c = 0; c < max_cones_.size(); ++c) {
    auto& cone = max_cones_[c];
    std::sort(cone.begin(), cone.end());
    if (std::adjacent_find(cone.begin(), cone.end()) != cone.end())
      throw InputError("fan: cone " + std::to_string(c) + " repeats a ray");
    for (int i : cone)
      if (i < 0 || i >= num_rays())
        throw InputError("fan: cone " + std::to_string(c) + " references missing ray " +
                         std::to_string(i));
    if (matrix_rank(rows_of(cone_rays(*this, cone))) != static_cast<int>(cone.size())) {
      std::ostringstream os;
      os << "fan: cone " << c << " has linearly dependent rays {";
      for (std::size_t k = 0; k < cone.size(); ++k) os << (k ? "," : "") << cone[k];
      os << '}';
      throw InputError(os.str());
    }
  }
}

std::set<std::vector<int>> Fan::all_cones() const {
  std::set<std::vector<int>> out;
  for (const auto& cone : max_cones_) {
    const std::size_t k = cone.size();
    for (Mask sub = 0; sub < (Mask{1} << k); ++sub) {
      std::vector<int> face;
      for (std::size_t i = 0; i < k; ++i)
        if (sub & (Mask{1} << i)) face.push_back(cone[i]);
      out.insert(std::move(face));
    }
  }
  return out;
}

FanReport fan_validate(const Fan& f) {
  FanReport rep;
  rep.smooth = true;
  for (std::size_t c = 0; c < f.max_cones().size(); ++c) {
    const auto rays = cone_rays(f, f.max_cones()[c]);
    if (minor_gcd(rays, f.rank()) != 1) {
      rep.smooth = false;
      rep.issues.push_back("cone " + std::to_string(c) + " is not unimodular");
    }
  }
  rep.complete = true;
  for (std::size_t c = 0; c < f.max_cones().size(); ++c)
    if (static_cast<int>(f.max_cones()[c].size()) != f.rank()) {
      rep.complete = false;
      rep.issues.push_back("cone " + std::to_string(c) + " is not full-dimensional");
    }
  if (rep.complete) {
    std::map<std::vector<int>, int> facets;
    for (const auto& cone : f.max_cones())
      for (std::size_t skip = 0; skip < cone.size(); ++skip) {
        std::vector<int> facet;
        for (std::size_t i = 0; i < cone.size(); ++i)
          if (i != skip) facet.push_back(cone[i]);
        ++facets[facet];
      }
    for (const auto& [facet, count] : facets)
      if (count != 2) {
        rep.complete = false;
        std::ostringstream os;
        os << "facet {";
        for (std::size_t k = 0; k < facet.size(); ++k) os << (k ? "," : "") << facet[k];
        os << "} lies in " << count << " maximal cone(s)";
        rep.issues.push_back(os.str());
      }
  }
  return rep;
}

// ------------------------------------------------------- obstruction sets

Mask mask_of(const std::vector<int>& indices) {
  Mask m = 0;
  for (int i : indices) m |= Mask{1} << i;
  return m;
}

std::vector<int> mask_indices(Mask m, int ground) {
  std::vector<int> out;
  for (int i = 0; i < ground; ++i)
    if (m & (Mask{1} << i)) out.push_back(i);
  return out;
}

std::string mask_str(Mask m, int ground) {
  std::string s = "(";
  for (int i = 0; i < ground; ++i) {
    if (i) s += ',';
    s += (m & (Mask{1} << i)) ? '1' : '0';
  }
  return s + ')';
}

ObstructionSet::ObstructionSet(int ground, std::vector<Mask> bmin)
    : ground_(ground), bmin_(std::move(bmin)) {
  if (ground_ < 1 || ground_ > kMaxGround)
    throw InputError("ObstructionSet: ground set size out of range");
  std::sort(bmin_.begin(), bmin_.end());
  bmin_.erase(std::unique(bmin_.begin(), bmin_.end()), bmin_.end());
  const Mask full = ground_ == 32 ? ~Mask{0} : ((Mask{1} << ground_) - 1);
  for (Mask b : bmin_) {
    if (b & ~full) throw InputError("ObstructionSet: element outside the ground set");
    for (Mask c : bmin_)
      if (b != c && (b & c) == b)
        throw InputError("ObstructionSet: not an antichain: " + mask_str(b, ground_) +
                         " <= " + mask_str(c, ground_));
  }
}

bool ObstructionSet::in_b(Mask n) const {
  return std::any_of(bmin_.begin(), bmin_.end(), [n](Mask b) { return (b & n) == b; });
}

int ObstructionSet::ell(Mask n) const {
  return static_cast<int>(
      std::count_if(bmin_.begin(), bmin_.end(), [n](Mask b) { return (b & n) == b; }));
}

ObstructionSet b_sigma(const Fan& f) {
  const int E = f.num_rays();
  const Mask full = (Mask{1} << E) - 1;
  std::vector<Mask> complements;
  for (const auto& cone : f.max_cones()) complements.push_back(full & ~mask_of(cone));
  std::vector<Mask> order(std::size_t{1} << E);
  std::iota(order.begin(), order.end(), Mask{0});
  std::stable_sort(order.begin(), order.end(),
                   [](Mask a, Mask b) { return std::popcount(a) < std::popcount(b); });
  std::vector<Mask> bmin;
  for (Mask n : order) {
    const bool hits = std::all_of(complements.begin(), complements.end(),
                                  [n](Mask c) { return (c & n) != 0; });
    if (!hits) continue;
    const bool above = std::any_of(bmin.begin(), bmin.end(), [n](Mask b) { return (b & n) == b; });
    if (!above) bmin.push_back(n);
  }
  return ObstructionSet(E, std::move(bmin));
}

long long mu0_inversion(const ObstructionSet& B, Mask n) {
  long long s = 0;
  const int top = std::popcount(n);
  // Enumerate submasks n' of n (including 0).
  Mask sub = n;
  while (true) {
    if (B.in_a(sub)) s += ((top - std::popcount(sub)) % 2 == 0) ? 1 : -1;
    if (sub == 0) break;
    sub = (sub - 1) & n;
  }
  return s;
}

long long mu0_crosscut(const ObstructionSet& B, Mask n) {
  std::vector<Mask> below;
  Mask join = 0;
  for (Mask b : B.bmin())
    if ((b & n) == b) {
      below.push_back(b);
      join |= b;
    }
  if (join != n) return 0;
  if (below.size() > 26) throw BudgetExceeded("mu0_crosscut: too many minimal elements", std::ldexp(1.0, static_cast<int>(below.size())));
  long long s = 0;
  const std::uint64_t count = std::uint64_t{1} << below.size();
  for (std::uint64_t S = 0; S < count; ++S) {
    Mask j = 0;
    for (std::size_t i = 0; i < below.size(); ++i)
      if (S & (std::uint64_t{1} << i)) j |= below[i];
    if (j == n) s += (std::popcount(S) % 2 == 0) ? 1 : -1;
  }
  return s;
}

std::vector<long long> mu0_table(const ObstructionSet& B) {
  const std::size_t size = std::size_t{1} << B.ground();
  std::vector<long long> t(size);
  for (std::size_t n = 0; n < size; ++n) t[n] = B.in_a(static_cast<Mask>(n)) ? 1 : 0;
  for (int bit = 0; bit < B.ground(); ++bit)
    for (std::size_t n = 0; n < size; ++n)
      if (n & (std::size_t{1} << bit)) t[n] -= t[n ^ (std::size_t{1} << bit)];
  return t;
}

PowerSeriesMulti p_poly(const ObstructionSet& B, int trunc) {
  const int E = B.ground();
  PowerSeriesMulti p(E, std::max(trunc, E));
  const auto mu = mu0_table(B);
  for (std::size_t n = 0; n < mu.size(); ++n) {
    if (mu[n] == 0) continue;
    DegreeVector e(static_cast<std::size_t>(E), 0);
    for (int i = 0; i < E; ++i) e[static_cast<std::size_t>(i)] = (n >> i) & 1u;
    if (total_degree(e) <= p.trunc()) p.set(e, LaurentPoly(mu[n]));
  }
  return p;
}

PowerSeriesMulti q_series(const ObstructionSet& B, int D) {
  const int E = B.ground();
  PowerSeriesMulti q = p_poly(B, D).truncated(D);
  for (int e = 0; e < E; ++e) {
    PowerSeriesMulti geom(E, D);
    for (int k = 0; k <= D; ++k) {
      DegreeVector v(static_cast<std::size_t>(E), 0);
      v[static_cast<std::size_t>(e)] = k;
      geom.set(v, LaurentPoly(1));
    }
    q = q * geom;
  }
  return q;
}

bool q_coefficient_oracle(const ObstructionSet& B, const DegreeVector& d) {
  Mask support = 0;
  for (std::size_t i = 0; i < d.size(); ++i)
    if (d[i] > 0) support |= Mask{1} << i;
  return B.in_a(support);
}

int pic_rank(const Fan& f) { return f.num_rays() - f.rank(); }

// ------------------------------------------------------------- N_* lattice

std::vector<DegreeVector> nstar_enumerate(const Fan& f, int degree) {
  std::vector<DegreeVector> out;
  if (degree < 0) return out;
  const int n = f.num_rays(), r = f.rank();
  DegreeVector d(static_cast<std::size_t>(n), 0);
  IntVector sum(static_cast<std::size_t>(r), 0);
  std::function<void(int, int)> rec = [&](int idx, int remaining) {
    const auto& ray = f.rays()[static_cast<std::size_t>(idx)];
    if (idx == n - 1) {
      d[static_cast<std::size_t>(idx)] = remaining;
      bool zero = true;
      for (int k = 0; k < r; ++k)
        if (sum[static_cast<std::size_t>(k)] + remaining * ray[static_cast<std::size_t>(k)] != 0) {
          zero = false;
          break;
        }
      if (zero) out.push_back(d);
      return;
    }
    for (int v = 0; v <= remaining; ++v) {
      d[static_cast<std::size_t>(idx)] = v;
      for (int k = 0; k < r; ++k) sum[static_cast<std::size_t>(k)] += v * ray[static_cast<std::size_t>(k)];
      rec(idx + 1, remaining - v);
      for (int k = 0; k < r; ++k) sum[static_cast<std::size_t>(k)] -= v * ray[static_cast<std::size_t>(k)];
    }
    d[static_cast<std::size_t>(idx)] = 0;
  };
  rec(0, degree);
  std::sort(out.begin(), out.end());
  return out;
}

std::vector<IntVector> relation_lattice_basis(const Fan& f) {
  const int n = f.num_rays(), r = f.rank();
  // A = r x n matrix with the rays as columns; U tracks column operations.
  std::vector<IntVector> A(static_cast<std::size_t>(r), IntVector(static_cast<std::size_t>(n)));
  for (int j = 0; j < n; ++j)
    for (int i = 0; i < r; ++i) A[i][j] = f.rays()[j][i];
  std::vector<IntVector> U(static_cast<std::size_t>(n), IntVector(static_cast<std::size_t>(n), 0));
  for (int i = 0; i < n; ++i) U[i][i] = 1;
  auto col_axpy = [&](int dst, int src, long long q) {  // col_dst -= q col_src
    for (int i = 0; i < r; ++i) A[i][dst] -= q * A[i][src];
    for (int i = 0; i < n; ++i) U[i][dst] -= q * U[i][src];
  };
  auto col_swap = [&](int a, int b) {
    for (int i = 0; i < r; ++i) std::swap(A[i][a], A[i][b]);
    for (int i = 0; i < n; ++i) std::swap(U[i][a], U[i][b]);
  };
  int pivot = 0;
  for (int row = 0; row < r && pivot < n; ++row) {
    while (true) {
      int best = -1;
      for (int j = pivot; j < n; ++j)
        if (A[row][j] != 0 && (best < 0 || std::llabs(A[row][j]) < std::llabs(A[row][best])))
          best = j;
      if (best < 0) break;
      col_swap(pivot, best);
      bool done = true;
      for (int j = pivot + 1; j < n; ++j) {
        if (A[row][j] == 0) continue;
        col_axpy(j, pivot, A[row][j] / A[row][pivot]);
        if (A[row][j] != 0) done = false;
      }
      if (done) {
        ++pivot;
        break;
      }
    }
  }
  std::vector<IntVector> basis;
  for (int j = pivot; j < n; ++j) {
    IntVector v(static_cast<std::size_t>(n));
    for (int i = 0; i < n; ++i) v[i] = U[i][j];
    basis.push_back(std::move(v));
  }
  return basis;
}

namespace {

long long degree_of(const IntVector& v) { return std::accumulate(v.begin(), v.end(), 0LL); }

IntVector combine(const std::vector<IntVector>& basis, long long x, long long y) {
  IntVector v(basis[0].size());
  for (std::size_t i = 0; i < v.size(); ++i) v[i] = x * basis[0][i] + y * basis[1][i];
  return v;
}

long long det2(long long a0, long long a1, long long b0, long long b1) { return a0 * b1 - a1 * b0; }

struct P2 {
  long long x, y;
};

// Splits the cone (u, w) of Z^2 (det > 0, both primitive) into unimodular
// cones; appends the chain of generators strictly after u, up to w.
void unimodular_split(P2 u, P2 w, std::vector<P2>& chain) {
  const long long D = det2(u.x, u.y, w.x, w.y);
  if (D == 1) {
    chain.push_back(w);
    return;
  }
  // Nonzero lattice point p = s u + t w with 0 < s, t < 1 and smallest t.
  const long long xmin = std::min({0LL, u.x, w.x, u.x + w.x}), xmax = std::max({0LL, u.x, w.x, u.x + w.x});
  const long long ymin = std::min({0LL, u.y, w.y, u.y + w.y}), ymax = std::max({0LL, u.y, w.y, u.y + w.y});
  P2 best{0, 0};
  long long best_t = D;
  for (long long x = xmin; x <= xmax; ++x)
    for (long long y = ymin; y <= ymax; ++y) {
      const long long sD = det2(x, y, w.x, w.y);  // s * D
      const long long tD = det2(u.x, u.y, x, y);  // t * D
      if (sD > 0 && sD < D && tD > 0 && tD < D && tD < best_t) {
        best = {x, y};
        best_t = tD;
      }
    }
  if (best_t == D) throw StructuralError("unimodular_split: no interior lattice point");
  const long long g = std::gcd(best.x, best.y);
  best = {best.x / g, best.y / g};
  unimodular_split(u, best, chain);
  unimodular_split(best, w, chain);
}

}  // namespace

ConeGenerators nstar_cone(const Fan& f) {
  const auto basis = relation_lattice_basis(f);
  ConeGenerators out;
  if (basis.size() == 1) {
    IntVector g = basis[0];
    if (degree_of(g) < 0)
      for (auto& x : g) x = -x;
    if (std::any_of(g.begin(), g.end(), [](long long x) { return x < 0; }))
      throw DomainError("nstar_cone: relation lattice has no nonnegative generator");
    out.extremal = {g};
    out.hilbert_chain = {g};
    return out;
  }
  if (basis.size() != 2) throw DomainError("nstar_cone: exact path needs Picard rank <= 2");
  // Constraint rows c_a . (x, y) >= 0 for each coordinate a.
  const std::size_t n = basis[0].size();
  std::vector<P2> candidates;
  for (std::size_t a = 0; a < n; ++a) {
    const long long c0 = basis[0][a], c1 = basis[1][a];
    if (c0 == 0 && c1 == 0) continue;
    for (int s : {1, -1}) {
      P2 w{-c1 * s, c0 * s};
      const long long g = std::gcd(w.x, w.y);
      w = {w.x / g, w.y / g};
      bool ok = true;
      for (std::size_t b = 0; b < n && ok; ++b)
        if (basis[0][b] * w.x + basis[1][b] * w.y < 0) ok = false;
      if (ok && std::none_of(candidates.begin(), candidates.end(),
                             [&](const P2& p) { return p.x == w.x && p.y == w.y; }))
        candidates.push_back(w);
    }
  }
  if (candidates.size() != 2)
    throw DomainError("nstar_cone: relation cone is not a pointed two-dimensional cone");
  P2 u = candidates[0], w = candidates[1];
  if (det2(u.x, u.y, w.x, w.y) < 0) std::swap(u, w);
  if (det2(u.x, u.y, w.x, w.y) == 0) throw DomainError("nstar_cone: degenerate cone");
  std::vector<P2> chain{u};
  unimodular_split(u, w, chain);
  out.extremal = {combine(basis, u.x, u.y), combine(basis, w.x, w.y)};
  for (const auto& p : chain) out.hilbert_chain.push_back(combine(basis, p.x, p.y));
  return out;
}

int nstar_period(const Fan& f) {
  const auto cone = nstar_cone(f);
  long long l = 1;
  for (const auto& g : cone.extremal) l = std::lcm(l, degree_of(g));
  return static_cast<int>(l);
}

AlphaStar alpha_star(const Fan& f) {
  AlphaStar a;
  const int rk = pic_rank(f);
  if (rk <= 2) {
    const auto cone = nstar_cone(f);
    if (rk == 1) {
      a.value = Rational(1, degree_of(cone.hilbert_chain[0]));
    } else {
      a.value = 0;
      for (std::size_t i = 0; i + 1 < cone.hilbert_chain.size(); ++i)
        a.value += Rational(1, degree_of(cone.hilbert_chain[i]) * degree_of(cone.hilbert_chain[i + 1]));
    }
    a.exact = true;
    a.approximate = to_double(a.value);
    return a;
  }
  // Ehrhart fit: S(M) = sum_{d <= M} n(d) ~ alpha* M^rk / rk!. Least squares
  // of S against a degree-rk polynomial on M in [M0/2, M0].
  const int M0 = 24;
  std::vector<double> S;
  double acc = 0;
  for (int d = 0; d <= M0; ++d) {
    acc += static_cast<double>(nstar_enumerate(f, d).size());
    S.push_back(acc);
  }
  double num = 0, den = 0;
  for (int M = M0 / 2; M <= M0; ++M) {
    const double x = std::pow(static_cast<double>(M), rk);
    num += x * S[static_cast<std::size_t>(M)];
    den += x * x;
  }
  double fact = 1;
  for (int i = 2; i <= rk; ++i) fact *= i;
  a.exact = false;
  a.approximate = fact * num / den;
  return a;
}

// ----------------------------------------------------------- Phi_n(X_Sigma)

LaurentPoly phi_toric_orbit_sum(const Fan& f, int n) {
  const LaurentPoly torus1 = LaurentPoly::L(n) - LaurentPoly(1);
  LaurentPoly phi;
  for (const auto& cone : f.all_cones())
    phi += torus1.pow(static_cast<unsigned>(f.rank() - static_cast<int>(cone.size())));
  return phi;
}

LaurentPoly mu0_weighted_sum(const ObstructionSet& B, int n) {
  const auto mu = mu0_table(B);
  LaurentPoly s;
  for (std::size_t m = 0; m < mu.size(); ++m)
    if (mu[m] != 0) s += LaurentPoly::monomial(Rational(mu[m]), -n * std::popcount(m));
  return s;
}

LaurentPoly local_density_from_phi(const Fan& f, const LaurentPoly& phi_n, int n) {
  const LaurentPoly one_minus = LaurentPoly(1) - LaurentPoly::L(-n);
  return one_minus.pow(static_cast<unsigned>(pic_rank(f))) * phi_n.shift(-n * f.rank());
}

LaurentPoly phi_toric(const Fan& f, int n) {
  if (n < 1) throw DomainError("phi_toric: n must be >= 1");
  LaurentPoly phi = phi_toric_orbit_sum(f, n);
  const LaurentPoly lhs = mu0_weighted_sum(b_sigma(f), n);
  const LaurentPoly rhs = local_density_from_phi(f, phi, n);
  if (lhs != rhs)
    throw StructuralError("phi_toric: mu0 identity fails at n = " + std::to_string(n) + ": " +
                          lhs.str() + " != " + rhs.str());
  return phi;
}

LaurentPoly toric_class(const Fan& f) { return phi_toric_orbit_sum(f, 1); }

// ------------------------------------------------------------------ fixtures

Fan projective_space_fan(int n) {
  if (n < 1) throw InputError("projective space: n must be >= 1");
  std::vector<IntVector> rays;
  for (int i = 0; i < n; ++i) {
    IntVector e(static_cast<std::size_t>(n), 0);
    e[static_cast<std::size_t>(i)] = 1;
    rays.push_back(std::move(e));
  }
  rays.emplace_back(static_cast<std::size_t>(n), -1);
  std::vector<std::vector<int>> cones;
  for (int skip = 0; skip <= n; ++skip) {
    std::vector<int> c;
    for (int i = 0; i <= n; ++i)
      if (i != skip) c.push_back(i);
    cones.push_back(std::move(c));
  }
  return Fan(n, std::move(rays), std::move(cones));
}

Fan hirzebruch_fan(int m) {
  if (m < 0) throw InputError("hirzebruch: m must be >= 0");
  return Fan(2, {{1, 0}, {-1, m}, {0, 1}, {0, -1}}, {{0, 2}, {0, 3}, {1, 2}, {1, 3}});
}

Fan p1xp1_fan() { return Fan(2, {{1, 0}, {-1, 0}, {0, 1}, {0, -1}}, {{0, 2}, {0, 3}, {1, 2}, {1, 3}}); }

Fan builtin_fan(const std::string& name) {
  if (name == "p1xp1") return p1xp1_fan();
  if (name.rfind("hirzebruch:", 0) == 0) {
    const std::string arg = name.substr(11);
    if (arg.empty() || !std::all_of(arg.begin(), arg.end(), ::isdigit))
      throw InputError("builtin fan: bad Hirzebruch parameter in \"" + name + "\"");
    return hirzebruch_fan(std::stoi(arg));
  }
  if (name.size() >= 2 && name[0] == 'p' &&
      std::all_of(name.begin() + 1, name.end(), ::isdigit))
    return projective_space_fan(std::stoi(name.substr(1)));
  throw InputError("unknown builtin fan \"" + name + "\"");
}

std::vector<std::string> bundled_fan_names() {
  return {"p1", "p2", "p3", "p1xp1", "hirzebruch:0", "hirzebruch:1",
          "hirzebruch:2", "hirzebruch:3", "hirzebruch:4"};
}

}  // namespace motzeta
