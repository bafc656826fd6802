#pragma once

#include <motzeta/laurent.hpp>
#include <motzeta/rational.hpp>
#include <motzeta/series.hpp>

#include <cstdint>
#include <optional>
#include <set>
#include <string>
#include <vector>

namespace motzeta {

using IntVector = std::vector<long long>;
/// Element of {0,1}^E packed into bits; bit e set iff n_e = 1.
using Mask = std::uint32_t;

inline constexpr int kMaxGround = 24;

/// A fan in Z^rank given by primitive rays and maximal cones (sets of ray
/// indices). Construction enforces the structural invariants: rays are
/// distinct, nonzero and primitive, cone indices are in range, and the rays
/// of each maximal cone are linearly independent.
class Fan {
 public:
  Fan(int rank, std::vector<IntVector> rays, std::vector<std::vector<int>> max_cones);

  int rank() const noexcept { return rank_; }
  int num_rays() const noexcept { return static_cast<int>(rays_.size()); }
  const std::vector<IntVector>& rays() const noexcept { return rays_; }
  const std::vector<std::vector<int>>& max_cones() const noexcept { return max_cones_; }

  /// Every cone of the fan (faces of maximal cones), as sorted index sets,
  /// including the zero cone.
  std::set<std::vector<int>> all_cones() const;

 private:
  int rank_;
  std::vector<IntVector> rays_;
  std::vector<std::vector<int>> max_cones_;
};

struct FanReport {
  bool smooth = false;
  bool complete = false;
  std::vector<std::string> issues;
};

FanReport fan_validate(const Fan& f);

/// Up-closed B subset of {0,1}^E given by its minimal antichain.
class ObstructionSet {
 public:
  ObstructionSet(int ground, std::vector<Mask> bmin);

  int ground() const noexcept { return ground_; }
  const std::vector<Mask>& bmin() const noexcept { return bmin_; }

  bool in_b(Mask n) const;
  bool in_a(Mask n) const { return !in_b(n); }
  /// Number of minimal elements below n.
  int ell(Mask n) const;

  friend bool operator==(const ObstructionSet&, const ObstructionSet&) = default;

 private:
  int ground_;
  std::vector<Mask> bmin_;  // sorted ascending
};

Mask mask_of(const std::vector<int>& indices);
std::vector<int> mask_indices(Mask m, int ground);
std::string mask_str(Mask m, int ground);

ObstructionSet b_sigma(const Fan& f);

/// mu0_B(n) by Boolean-lattice inversion of ind_A(n) = sum_{n' <= n} mu0(n').
long long mu0_inversion(const ObstructionSet& B, Mask n);
/// Crosscut form: sum over S subset of B^min with join S = n of (-1)^|S|.
long long mu0_crosscut(const ObstructionSet& B, Mask n);
/// All 2^|E| values at once (fast subset-sum inversion); index = mask.
std::vector<long long> mu0_table(const ObstructionSet& B);

/// P_B = sum_n mu0(n) T^n as a series truncated at max(trunc, |E|).
PowerSeriesMulti p_poly(const ObstructionSet& B, int trunc = 0);
/// Q_B = P_B / prod_e (1 - T_e), truncated at D.
PowerSeriesMulti q_series(const ObstructionSet& B, int D);
/// ind_A of the support of d.
bool q_coefficient_oracle(const ObstructionSet& B, const DegreeVector& d);

int pic_rank(const Fan& f);

/// All d in N^{rays} with sum_a d_a rho_a = 0 and sum_a d_a = degree.
std::vector<DegreeVector> nstar_enumerate(const Fan& f, int degree);

/// Integer basis (columns, each of length num_rays) of the relation lattice
/// {d in Z^rays : sum d_a rho_a = 0}.
std::vector<IntVector> relation_lattice_basis(const Fan& f);

struct ConeGenerators {
  std::vector<IntVector> extremal;  // as vectors in N^rays
  /// Unimodular decomposition: consecutive generator pairs (rank 2) or the
  /// single generator (rank 1).
  std::vector<IntVector> hilbert_chain;
};

/// Extremal rays and unimodular decomposition of the monoid N_* of relations
/// with nonnegative coefficients; Picard rank 1 or 2 only.
ConeGenerators nstar_cone(const Fan& f);

struct AlphaStar {
  bool exact = false;
  Rational value;           // meaningful when exact
  double approximate = 0;   // always filled
};

/// lim_{t -> 1-} (1 - t)^rk sum_d n_Sigma(d) t^d. Exact for Picard rank <= 2
/// through the unimodular decomposition; otherwise an Ehrhart-fit estimate
/// with exact = false.
AlphaStar alpha_star(const Fan& f);

/// Period of n_Sigma(d) along arithmetic progressions (lcm of the extremal
/// generator degrees, rank <= 2).
int nstar_period(const Fan& f);

/// Phi_n(X_Sigma) = sum over cones sigma of (L^n - 1)^(r - dim sigma);
/// checked against the mu0 identity, StructuralError on failure.
LaurentPoly phi_toric(const Fan& f, int n);
LaurentPoly phi_toric_orbit_sum(const Fan& f, int n);
/// sum_n mu0(n) L^(-n |n|)
LaurentPoly mu0_weighted_sum(const ObstructionSet& B, int n);
/// (1 - L^-n)^rk Phi_n L^(-n dim)
LaurentPoly local_density_from_phi(const Fan& f, const LaurentPoly& phi_n, int n);

/// Class [X_Sigma] = Phi_1 as a polynomial in L.
LaurentPoly toric_class(const Fan& f);

// Fan constructors used for fixtures.
Fan projective_space_fan(int n);
Fan hirzebruch_fan(int m);
Fan p1xp1_fan();
/// "p1", "p2", "p3", "p1xp1", "hirzebruch:m" (also "pN" for any N >= 1).
Fan builtin_fan(const std::string& name);
std::vector<std::string> bundled_fan_names();

}  // namespace motzeta
