#pragma once

#include <motzeta/laurent.hpp>
#include <motzeta/series.hpp>

#include <map>
#include <vector>

namespace motzeta {

/// A variety class written as sum_i c_i L^i with a declared dimension, e.g.
/// P^1 = {0:1, 1:1}. Negative multiplicities describe virtual classes such
/// as the torus (L - 1)^r and are only accepted where the caller opts in.
class CellularClass {
 public:
  CellularClass(std::map<int, long long> cells, int dim);

  static CellularClass point() { return CellularClass({{0, 1}}, 0); }
  static CellularClass affine(int d) { return CellularClass({{d, 1}}, d); }
  static CellularClass projective(int n);
  static CellularClass torus(int r);
  static CellularClass product(const CellularClass& a, const CellularClass& b);

  const std::map<int, long long>& cells() const noexcept { return cells_; }
  int dim() const noexcept { return dim_; }
  bool is_virtual() const;
  LaurentPoly value() const;

 private:
  std::map<int, long long> cells_;
  int dim_;
};

/// Number-theoretic Möbius function.
int moebius_mu(int n);

/// Z_X(T) = prod_i (1 - L^i T)^(-c_i), truncated at D. Virtual inputs are
/// rejected unless allow_virtual is set.
PowerSeries1 kapranov_zeta(const CellularClass& x, int D, bool allow_virtual = false);

/// Phi_1..Phi_N and Psi_1..Psi_N, 1-based accessors.
struct PhiPsiSeq {
  int N = 0;
  std::vector<LaurentPoly> phi_values;  // phi_values[n-1] = Phi_n
  std::vector<LaurentPoly> psi_values;  // psi_values[n-1] = Psi_n

  const LaurentPoly& phi(int n) const { return phi_values.at(static_cast<std::size_t>(n - 1)); }
  const LaurentPoly& psi(int n) const { return psi_values.at(static_cast<std::size_t>(n - 1)); }
};

/// Phi_n from the logarithmic derivative T d/dT log Z_X, Psi_n by divisor
/// Möbius inversion of Phi_n = sum_{d | n} d Psi_d.
PhiPsiSeq phi_psi(const CellularClass& x, int N);

/// Phi_n from symmetric-power classes [X^<0>], ..., [X^<n>] through the
/// alternating sum over compositions of n.
LaurentPoly phi_explicit(const std::vector<LaurentPoly>& symmetric_power_classes, int n);

enum class EulerAlgo { direct, closed_form };

/// exp( sum_n psi_n log P(T^n) ), truncated at min(D, P.trunc()).
///
/// direct: log, substitute, sum, exp in the series ring.
/// closed_form: prod_f sum_k binom(psi_f, k) (P(T^f) - 1)^k, enumerated over
/// nondecreasing index tuples grouped by value. Needs psi.size() >= D / v
/// with v the valuation of P - 1.
PowerSeriesMulti euler_product(const std::vector<LaurentPoly>& psi, const PowerSeriesMulti& P,
                               int D, EulerAlgo algo);

inline PowerSeriesMulti euler_product(const PhiPsiSeq& seq, const PowerSeriesMulti& P, int D,
                                      EulerAlgo algo) {
  return euler_product(seq.psi_values, P, D, algo);
}

}  // namespace motzeta
