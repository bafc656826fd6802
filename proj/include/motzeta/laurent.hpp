#pragma once

#include <motzeta/rational.hpp>

#include <iosfwd>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

namespace motzeta {

/// Laurent polynomial in the Lefschetz symbol L with exact rational
/// coefficients. Every Grothendieck-ring class handled by the library lives
/// here: [P^n] = 1 + L + ... + L^n, the torus class (L - 1)^r, Möbius values.
///
/// Storage is sparse and canonical: terms sorted by ascending exponent, no
/// zero coefficient stored. Two equal polynomials therefore compare equal
/// member-wise.
class LaurentPoly {
 public:
  using Term = std::pair<int, Rational>;

  LaurentPoly() = default;
  LaurentPoly(const Rational& c);  // NOLINT(google-explicit-constructor)
  LaurentPoly(long long c);        // NOLINT(google-explicit-constructor)
  LaurentPoly(int c) : LaurentPoly(static_cast<long long>(c)) {}  // NOLINT

  static LaurentPoly monomial(const Rational& c, int exponent);
  /// L^exponent.
  static LaurentPoly L(int exponent = 1) { return monomial(Rational(1), exponent); }
  /// Builds from (exponent, coefficient) pairs in any order; duplicates add.
  static LaurentPoly from_terms(std::vector<Term> terms);

  bool is_zero() const noexcept { return terms_.empty(); }
  bool is_constant() const noexcept {
    return terms_.empty() || (terms_.size() == 1 && terms_[0].first == 0);
  }
  bool is_monomial() const noexcept { return terms_.size() == 1; }
  bool has_integer_coefficients() const;

  const std::vector<Term>& terms() const noexcept { return terms_; }
  Rational coeff(int exponent) const;

  /// Top exponent; a class lies in filtration step F^m iff vdim <= -m.
  /// Throws DomainError on the zero polynomial.
  int vdim() const;
  /// Lowest exponent; throws DomainError on zero.
  int min_exponent() const;

  LaurentPoly& operator+=(const LaurentPoly& o);
  LaurentPoly& operator-=(const LaurentPoly& o);
  LaurentPoly& operator*=(const LaurentPoly& o);
  LaurentPoly& operator*=(const Rational& c);
  LaurentPoly& operator/=(const Rational& c);

  friend LaurentPoly operator+(LaurentPoly a, const LaurentPoly& b) { return a += b; }
  friend LaurentPoly operator-(LaurentPoly a, const LaurentPoly& b) { return a -= b; }
  friend LaurentPoly operator*(const LaurentPoly& a, const LaurentPoly& b);
  friend LaurentPoly operator*(LaurentPoly a, const Rational& c) { return a *= c; }
  friend LaurentPoly operator*(const Rational& c, LaurentPoly a) { return a *= c; }
  friend LaurentPoly operator/(LaurentPoly a, const Rational& c) { return a /= c; }
  LaurentPoly operator-() const;

  friend bool operator==(const LaurentPoly& a, const LaurentPoly& b) {
    return a.terms_ == b.terms_;
  }
  friend bool operator!=(const LaurentPoly& a, const LaurentPoly& b) { return !(a == b); }

  LaurentPoly pow(unsigned n) const;
  /// Multiplies every exponent by k, i.e. substitutes L -> L^k.
  LaurentPoly substitute_power(int k) const;
  /// Multiplies by L^k.
  LaurentPoly shift(int k) const;

  /// Specialization L -> x. Throws DomainError("pole at zero") if x == 0 and
  /// a negative exponent is present.
  Rational eval(const Rational& x) const;
  double eval(double x) const;

  /// "L^3 - L", "1/2*L^2 - 1/2*L", "L^2 - 2 + L^-2"; descending exponents.
  std::string str() const;
  /// Inverse of str(). Throws InputError with the offending column.
  static LaurentPoly parse(std::string_view text);

 private:
  void add_term(int exponent, const Rational& c);
  std::vector<Term> terms_;
};

std::ostream& operator<<(std::ostream& os, const LaurentPoly& p);

/// binom(x, n) = x (x - 1) ... (x - n + 1) / n!
LaurentPoly binomial(const LaurentPoly& x, unsigned n);

/// Class of projective space P^n, 1 + L + ... + L^n.
LaurentPoly projective_class(int n);

}  // namespace motzeta
