#pragma once

#include <motzeta/euler.hpp>
#include <motzeta/fan.hpp>
#include <motzeta/laurent.hpp>
#include <motzeta/series.hpp>

#include <map>
#include <optional>
#include <vector>

namespace motzeta {

/// Finite map N^E -> LaurentPoly, keys of total degree <= trunc. Absent keys
/// within the truncation are zero.
struct MultiDegreeTable {
  int ground = 0;
  int trunc = 0;
  std::map<DegreeVector, LaurentPoly> values;

  /// Throws DomainError beyond the truncation.
  LaurentPoly at(const DegreeVector& d) const;

  static MultiDegreeTable from_series(const PowerSeriesMulti& s);
  PowerSeriesMulti to_series() const;

  friend bool operator==(const MultiDegreeTable&, const MultiDegreeTable&) = default;
};

/// Every d in N^E with total degree <= D, in lexicographic order.
std::vector<DegreeVector> all_degree_vectors(int ground, int D);

/// Coefficients mu_X(0..D) of 1 / Z_X(T).
std::vector<LaurentPoly> mu_x_single(const CellularClass& x, int D);

/// mu_B for X = P^1: exp( sum_n Psi_n(P^1) log P_B(T^n) ). Every value is
/// checked to have integer coefficients (StructuralError otherwise).
MultiDegreeTable mobius_table(const ObstructionSet& B, int D);

/// mu_B recovered from the classes [(P^1)^B_d] of the Q_B Euler product by
/// dividing out prod_e Z_P1(T_e).
MultiDegreeTable mobius_table_by_inversion(const ObstructionSet& B, int D);

enum class XbPath { euler_qb, convolution, both };

/// [(P^1)^B_d] for all |d| <= D. euler_qb uses the Q_B Euler product,
/// convolution multiplies the mu table by prod_e Z_P1(T_e); both computes
/// the two and throws StructuralError if they differ.
MultiDegreeTable xb_classes(const ObstructionSet& B, int D, XbPath path);

/// Single class [(P^1)^B_d] = sum_{d' <= d} mu(d') prod_e [P^{d_e - d'_e}].
LaurentPoly xb_class_at(const MultiDegreeTable& mu, const DegreeVector& d);

/// B^min = {(1,...,1)}: mu(d,...,d) = mu_P1(d), zero off the diagonal.
MultiDegreeTable diagonal_mobius(int ground, int D);

/// When the elements of B^min have pairwise disjoint supports, mu_B is the
/// product of diagonal tables over those supports (coordinates outside every
/// support must vanish). std::nullopt when B does not have that shape.
std::optional<MultiDegreeTable> partition_mobius(const ObstructionSet& B, int D);

/// Largest vdim(mu(e)) - floor(|e| / nu) over the table, nu = valuation of
/// P_B - 1. Nonpositive means the filtration bound holds everywhere.
int mobius_filtration_excess(const MultiDegreeTable& mu, int nu);

}  // namespace motzeta
