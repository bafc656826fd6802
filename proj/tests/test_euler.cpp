#include "oracles.hpp"

#include <motzeta/errors.hpp>
#include <motzeta/euler.hpp>

#include <doctest.h>

using namespace motzeta;

namespace {
LaurentPoly P(const char* s) { return LaurentPoly::parse(s); }
const LaurentPoly L = LaurentPoly::L();

CellularClass random_cellular(std::mt19937& rng) {
  std::uniform_int_distribution<int> top(0, 3), mult(0, 3);
  const int d = top(rng);
  std::map<int, long long> cells;
  for (int i = 0; i <= d; ++i) cells[i] = mult(rng);
  cells[d] = std::max<long long>(cells[d], 1);
  return CellularClass(cells, d);
}
}  // namespace

TEST_CASE("kapranov zeta examples") {
  const int D = 8;
  const auto zp1 = kapranov_zeta(CellularClass::projective(1), D);
  for (int n = 0; n <= D; ++n) CHECK(zp1.coeff(n) == oracle::proj(n));
  const auto za = kapranov_zeta(CellularClass::affine(3), D);
  for (int n = 0; n <= D; ++n) CHECK(za.coeff(n) == LaurentPoly::L(3 * n));
  const auto zpt = kapranov_zeta(CellularClass::point(), D);
  for (int n = 0; n <= D; ++n) CHECK(zpt.coeff(n) == LaurentPoly(1));
  // Sym^n P^2 has class sum over monomials; compare with the count of
  // exponent pairs (i, j) by weight: [Sym^2 P^2] = [P^2] + L^2 [P^2] + ... via
  // point counts over F_q: #Sym^2(P^2)(F_q) = (N1^2 + N2)/2.
  const auto zp2 = kapranov_zeta(CellularClass::projective(2), 2);
  for (int q : {2, 3, 5}) {
    const long long n1 = 1 + q + q * q, n2 = 1 + q * q + q * q * q * q;
    CHECK(zp2.coeff(2).eval(Rational(q)) == Rational((n1 * n1 + n2) / 2));
  }
}

TEST_CASE("virtual input needs the flag") {
  const CellularClass t = CellularClass::torus(2);
  CHECK(t.is_virtual());
  CHECK_THROWS_AS(kapranov_zeta(t, 3), InputError);
  CHECK_NOTHROW(kapranov_zeta(t, 3, true));
}

TEST_CASE("phi and psi") {
  const auto s = phi_psi(CellularClass::projective(1), 12);
  CHECK(s.phi(1) == 1 + L);
  CHECK(s.psi(1) == 1 + L);
  for (int n = 1; n <= 12; ++n) CHECK(s.phi(n) == 1 + LaurentPoly::L(n));
  CHECK(s.psi(2) == (L.pow(2) - L) / Rational(2));
  // Psi_n(P^1) at L = p counts closed points of degree n.
  for (int p : {2, 3, 5})
    for (int n = 1; n <= 6; ++n) {
      if (p == 5 && n > 4) continue;
      const long long closed = oracle::count_irreducible(p, n) + (n == 1 ? 1 : 0);
      CHECK(s.psi(n).eval(Rational(p)) == closed);
    }
  // Phi_n = sum_{d | n} d Psi_d.
  std::mt19937 rng(5);
  for (int trial = 0; trial < 10; ++trial) {
    const auto x = random_cellular(rng);
    const auto t = phi_psi(x, 8);
    CHECK(t.phi(1) == x.value());
    for (int n = 1; n <= 8; ++n) {
      LaurentPoly acc;
      for (int d = 1; d <= n; ++d)
        if (n % d == 0) acc += Rational(d) * t.psi(d);
      CHECK(acc == t.phi(n));
      if (!t.phi(n).is_zero()) CHECK(t.phi(n).vdim() <= n * x.dim());
      if (!t.psi(n).is_zero()) CHECK(t.psi(n).vdim() <= n * x.dim());
    }
  }
}

TEST_CASE("phi_explicit agrees with the log derivative") {
  std::vector<LaurentPoly> p1{1, 1 + L, 1 + L + L.pow(2)};
  CHECK(phi_explicit(p1, 1) == 1 + L);
  CHECK(phi_explicit(p1, 2) == 1 + L.pow(2));
  std::vector<LaurentPoly> a1{1, L, L.pow(2), L.pow(3)};
  CHECK(phi_explicit(a1, 3) == L.pow(3));
  CHECK_THROWS_AS(phi_explicit(a1, 4), InputError);

  std::mt19937 rng(11);
  for (int trial = 0; trial < 10; ++trial) {
    const auto x = random_cellular(rng);
    const int N = 7;
    const auto z = kapranov_zeta(x, N);
    const auto s = phi_psi(x, N);
    for (int n = 1; n <= N; ++n) CHECK(phi_explicit(z.coeffs(), n) == s.phi(n));
  }
}

TEST_CASE("phi is multiplicative") {
  std::mt19937 rng(3);
  for (int trial = 0; trial < 8; ++trial) {
    const auto x = random_cellular(rng);
    const auto y = random_cellular(rng);
    const auto sx = phi_psi(x, 6), sy = phi_psi(y, 6);
    const auto sxy = phi_psi(CellularClass::product(x, y), 6);
    for (int n = 1; n <= 6; ++n) CHECK(sxy.phi(n) == sx.phi(n) * sy.phi(n));
  }
}

TEST_CASE("euler product examples") {
  const int D = 12;
  const auto s = phi_psi(CellularClass::projective(1), D);
  PowerSeriesMulti geo(1, D);
  for (int k = 0; k <= D; ++k) geo.set({k}, 1);
  for (auto algo : {EulerAlgo::direct, EulerAlgo::closed_form}) {
    const auto z = euler_product(s, geo, D, algo);
    for (int k = 0; k <= D; ++k) CHECK(z.coeff({k}) == oracle::proj(k));
  }

  std::vector<LaurentPoly> zero(D);
  PowerSeriesMulti f = geo;
  CHECK(euler_product(zero, f, D, EulerAlgo::direct) ==
        PowerSeriesMulti::constant(1, D, LaurentPoly(1)));

  PowerSeriesMulti pb = PowerSeriesMulti::constant(2, 8, 1);
  pb.set({1, 1}, -1);
  const auto mu = euler_product(phi_psi(CellularClass::projective(1), 8), pb, 8, EulerAlgo::direct);
  PowerSeriesMulti expect = PowerSeriesMulti::constant(2, 8, 1);
  expect.set({1, 1}, -(1 + L));
  expect.set({2, 2}, L);
  CHECK(mu == expect);

  PowerSeriesMulti bad = PowerSeriesMulti::constant(1, 4, 2);
  CHECK_THROWS_AS(euler_product(s, bad, 4, EulerAlgo::direct), DomainError);
}

TEST_CASE("reconstruction of the zeta function for random cellular classes") {
  std::mt19937 rng(17);
  for (int trial = 0; trial < 6; ++trial) {
    const auto x = random_cellular(rng);
    const int D = 8;
    PowerSeriesMulti geo(1, D);
    for (int k = 0; k <= D; ++k) geo.set({k}, 1);
    const auto z = euler_product(phi_psi(x, D), geo, D, EulerAlgo::closed_form);
    const auto k = kapranov_zeta(x, D);
    for (int n = 0; n <= D; ++n) CHECK(z.coeff({n}) == k.coeff(n));
  }
}

TEST_CASE("direct and closed form agree on random input") {
  std::mt19937 rng(23);
  for (int trial = 0; trial < 5; ++trial) {
    const int D = 7;
    std::vector<LaurentPoly> psi;
    for (int n = 0; n < D; ++n) psi.push_back(oracle::random_laurent(rng, -2, 3, 3, true));
    PowerSeriesMulti p = PowerSeriesMulti::constant(2, D, 1);
    std::uniform_int_distribution<int> e(0, 3);
    for (int k = 0; k < 4; ++k) {
      DegreeVector v{e(rng), e(rng)};
      if (total_degree(v) == 0) continue;
      p.set(v, oracle::random_laurent(rng, 0, 2, 2));
    }
    CHECK(euler_product(psi, p, D, EulerAlgo::direct) ==
          euler_product(psi, p, D, EulerAlgo::closed_form));
  }
}

TEST_CASE("moebius function") {
  CHECK(moebius_mu(1) == 1);
  CHECK(moebius_mu(2) == -1);
  CHECK(moebius_mu(4) == 0);
  CHECK(moebius_mu(6) == 1);
  CHECK(moebius_mu(30) == -1);
}
