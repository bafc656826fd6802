#pragma once

#include <motzeta/exec.hpp>
#include <motzeta/fan.hpp>
#include <motzeta/laurent.hpp>
#include <motzeta/moebius.hpp>
#include <motzeta/series.hpp>

#include <vector>

namespace motzeta {

struct HeightSeries {
  Fan fan;
  int D = 0;
  std::vector<LaurentPoly> classes;       // classes[d] = [U_{0,d}]
  std::vector<std::size_t> components;    // components[d] = n_Sigma(d)
};

/// [U_{0,d}] = (L - 1)^dim * sum over d in N_* of degree d of [(P^1)^B_d].
LaurentPoly u0d_class(const Fan& f, int d);
/// Same, reusing a mobius table of truncation >= d.
LaurentPoly u0d_class(const Fan& f, int d, const MultiDegreeTable& mu);

/// Classes for d = 0..D. Degrees are independent; the parallel policy
/// distributes them over OpenMP threads, results are identical.
HeightSeries height_series(const Fan& f, int D, Exec exec = Exec::parallel);

/// Expansion of the rational function for the Hirzebruch surface F_m.
PowerSeries1 hirzebruch_closed_form(int m, int D);

/// (1 + LT)(1 + LT + ... + L^{m+1} T^{m+1})(1 - LT)^2 to degree D.
PowerSeries1 hirzebruch_prefactor(int m, int D);

struct HirzebruchCheck {
  bool is_polynomial = false;
  int first_bad_degree = -1;       // -1 when the tail vanishes
  int expected_degree = 0;         // m + 4
  /// Coefficients 0..m+4 of the prefactored series when it is a polynomial.
  std::vector<LaurentPoly> polynomial;
  /// Value at T = 1/L; meaningful when is_polynomial or rational_form.
  LaurentPoly value_at_Linv;
  /// Not a polynomial, but the prefactored series times (1 - L^2 T^{m+2}) is
  /// one (numerator degree below D); value_at_Linv is then the value of the
  /// rational function.
  bool rational_form = false;
  std::vector<LaurentPoly> numerator;
};

/// Multiplies the height series of F_m by the prefactor and inspects the
/// result. Requires D >= 2(m + 3) (DomainError otherwise).
HirzebruchCheck hirzebruch_theorem_check(int m, int D);
HirzebruchCheck hirzebruch_theorem_check(int m, const HeightSeries& hs);

/// Psi_n(P^1) at a numeric L: (1/n) sum_{k | n} mobius(n/k) (L^k + 1).
double psi_p1_numeric(int n, double L);

struct TamagawaReport {
  AlphaStar alpha;
  double exp_path = 0;
  double mu_path = 0;
  double difference = 0;
  /// |Psi_N log(local factor at N)|, size of the last term of the exp sum.
  double last_term = 0;
};

/// Two evaluations of the Tamagawa-type constant at numeric L: the exp form
/// over n <= N and the direct sum of mu(e) L^{-|e|} over |e| <= D. Throws
/// DomainError when alpha* is not exact and allow_approx is false.
TamagawaReport tamagawa_constant(const Fan& f, double L, int N, int D, bool allow_approx = false);

/// Local factor sum_sigma (1 - x)^(rk + r - dim sigma) x^(dim sigma) minus 1,
/// as an integer polynomial in x (LaurentPoly with L read as x).
LaurentPoly local_factor_minus_one(const Fan& f);

struct GrowthReport {
  bool vdim_offset_constant = true;
  int offset = 0;                 // vdim - d on supported degrees
  std::vector<int> offending;     // degrees breaking the offset
  int period = 1;
  int pic_rank = 0;
  bool differences_vanish = true;
  int tail_start = 0;
  std::vector<std::string> issues;
};

/// vdim offsets from a height series (degrees <= hs.D) and exact finite
/// differences of n_Sigma on progressions d = c mod period, c + k*period in
/// [tail_start, dmax].
GrowthReport growth_diagnostics(const HeightSeries& hs, int dmax);

}  // namespace motzeta
