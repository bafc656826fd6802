#pragma once

#include <motzeta/laurent.hpp>

#include <map>
#include <vector>

namespace motzeta {

/// Multi-index over an ordered variable set; also used as a degree vector
/// d in N^E.
using DegreeVector = std::vector<int>;

int total_degree(const DegreeVector& d);
/// Componentwise d' <= d.
bool leq(const DegreeVector& a, const DegreeVector& b);
std::string degree_vector_str(const DegreeVector& d);

/// Inverse of a unit c*L^i of Q[L, L^-1]; DomainError otherwise.
LaurentPoly invert_unit(const LaurentPoly& u);

/// Truncated power series in one variable T with LaurentPoly coefficients.
/// Coefficients of degree > trunc() are unknown, never zero: asking for one
/// throws. Binary operations keep the smaller truncation.
class PowerSeries1 {
 public:
  explicit PowerSeries1(int trunc);
  explicit PowerSeries1(std::vector<LaurentPoly> coeffs);

  static PowerSeries1 constant(const LaurentPoly& c, int trunc);
  /// c * T^k truncated at trunc.
  static PowerSeries1 monomial(const LaurentPoly& c, int k, int trunc);

  int trunc() const noexcept { return static_cast<int>(coeffs_.size()) - 1; }
  const LaurentPoly& coeff(int n) const;
  void set(int n, LaurentPoly c);
  const std::vector<LaurentPoly>& coeffs() const noexcept { return coeffs_; }

  PowerSeries1 truncated(int d) const;

  PowerSeries1& operator+=(const PowerSeries1& o);
  PowerSeries1& operator-=(const PowerSeries1& o);
  friend PowerSeries1 operator+(PowerSeries1 a, const PowerSeries1& b) { return a += b; }
  friend PowerSeries1 operator-(PowerSeries1 a, const PowerSeries1& b) { return a -= b; }
  friend PowerSeries1 operator*(const PowerSeries1& a, const PowerSeries1& b);
  friend PowerSeries1 operator*(const LaurentPoly& c, const PowerSeries1& a);
  friend bool operator==(const PowerSeries1& a, const PowerSeries1& b) {
    return a.coeffs_ == b.coeffs_;
  }

  /// Requires constant term c*L^i with c != 0.
  PowerSeries1 inverse() const;
  /// Requires constant term 0.
  PowerSeries1 exp() const;
  /// Requires constant term 1.
  PowerSeries1 log() const;
  /// f(T) -> f(c T^k), k >= 1. Result is known up to degree k*(trunc+1)-1.
  PowerSeries1 compose_scale(const LaurentPoly& c, int k) const;
  /// T d/dT.
  PowerSeries1 euler_derivative() const;

 private:
  std::vector<LaurentPoly> coeffs_;
};

/// Truncated power series in |E| variables, truncated by total degree.
/// Sparse: only nonzero coefficients are stored, in a deterministic order.
class PowerSeriesMulti {
 public:
  using Map = std::map<DegreeVector, LaurentPoly>;

  PowerSeriesMulti(int nvars, int trunc);

  static PowerSeriesMulti constant(int nvars, int trunc, const LaurentPoly& c);
  static PowerSeriesMulti monomial(int nvars, int trunc, const DegreeVector& e,
                                   const LaurentPoly& c);

  int nvars() const noexcept { return nvars_; }
  int trunc() const noexcept { return trunc_; }
  const Map& terms() const noexcept { return terms_; }

  /// Throws DomainError when total_degree(e) > trunc().
  LaurentPoly coeff(const DegreeVector& e) const;
  void set(const DegreeVector& e, LaurentPoly c);
  void add(const DegreeVector& e, const LaurentPoly& c);

  LaurentPoly constant_term() const;
  /// Smallest total degree of a nonzero non-constant term; trunc()+1 if none.
  int valuation_of_nonconstant() const;
  PowerSeriesMulti truncated(int d) const;

  PowerSeriesMulti& operator+=(const PowerSeriesMulti& o);
  PowerSeriesMulti& operator-=(const PowerSeriesMulti& o);
  friend PowerSeriesMulti operator+(PowerSeriesMulti a, const PowerSeriesMulti& b) {
    return a += b;
  }
  friend PowerSeriesMulti operator-(PowerSeriesMulti a, const PowerSeriesMulti& b) {
    return a -= b;
  }
  friend PowerSeriesMulti operator*(const PowerSeriesMulti& a, const PowerSeriesMulti& b);
  friend PowerSeriesMulti operator*(const LaurentPoly& c, const PowerSeriesMulti& a);
  friend bool operator==(const PowerSeriesMulti& a, const PowerSeriesMulti& b) {
    return a.nvars_ == b.nvars_ && a.trunc_ == b.trunc_ && a.terms_ == b.terms_;
  }

  PowerSeriesMulti inverse() const;
  PowerSeriesMulti exp() const;
  PowerSeriesMulti log() const;
  /// T_e -> c T_e^k for every variable; known to total degree
  /// min(requested, k*(trunc+1)-1).
  PowerSeriesMulti compose_scale(const LaurentPoly& c, int k, int requested_trunc) const;
  /// Same series with every coefficient that has total degree > d dropped
  /// and trunc raised to d, valid only when the caller knows those
  /// coefficients vanish (polynomials).
  PowerSeriesMulti with_trunc_for_polynomial(int d) const;

 private:
  std::vector<Map> graded() const;
  void check_compatible(const PowerSeriesMulti& o) const;

  int nvars_;
  int trunc_;
  Map terms_;
};

}  // namespace motzeta
