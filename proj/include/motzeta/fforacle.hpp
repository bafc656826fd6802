#pragma once

#include <motzeta/exec.hpp>
#include <motzeta/fan.hpp>
#include <motzeta/series.hpp>

#include <cstdint>
#include <string>
#include <vector>

namespace motzeta {

/// Binary form of degree `degree` over F_p with coefficients a_0..a_degree
/// (a_i multiplies u^i v^(degree-i)), scaled so the highest nonzero a_i is 1.
/// `poly` is the dehomogenization x -> a(x), monic; deg(poly) < degree
/// exactly when the form vanishes at (1:0).
struct FFForm {
  int p = 2;
  int degree = 0;
  std::vector<int> poly;

  bool zero_at_infinity() const { return static_cast<int>(poly.size()) - 1 < degree; }
};

/// All normalized forms of degree k, i.e. the points of P^k(F_p).
std::vector<FFForm> ff_forms(int p, int k);

/// Whether the forms share a projective zero over the algebraic closure.
bool ff_common_zero(const std::vector<const FFForm*>& forms);

bool is_prime(long long p);

/// Closed points of degree n on P^1 over F_p.
long long closed_points_p1(int p, int n);

inline constexpr double kDefaultBudget = 1e8;

/// Tuples (C_e) of effective divisors of degrees d_e on P^1 over F_p such
/// that the forms indexed by each element of B^min have no common zero.
std::uint64_t count_divisor_tuples(const ObstructionSet& B, int p, const DegreeVector& d,
                                   Exec exec = Exec::parallel, double budget = kDefaultBudget);

/// (p - 1)^dim * sum over N_* vectors of degree d of count_divisor_tuples.
std::uint64_t count_u0d(const Fan& f, int p, int d, Exec exec = Exec::parallel,
                        double budget = kDefaultBudget);

struct FFEulerReport {
  bool ok = true;
  int checked = 0;
  std::string message;
};

/// Expands prod_n Q_B(T^n)^{c_n} and prod_n P_B(T^n)^{c_n}, c_n the closed
/// point counts, to total degree D and compares them with brute-force counts
/// and with the mobius table specialized at L = p.
FFEulerReport check_ff_euler(const ObstructionSet& B, int p, int D);

}  // namespace motzeta
