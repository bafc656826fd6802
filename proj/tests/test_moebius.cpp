#include "oracles.hpp"

#include <motzeta/errors.hpp>
#include <motzeta/moebius.hpp>

#include <doctest.h>

using namespace motzeta;

namespace {
const LaurentPoly L = LaurentPoly::L();

bool disjoint_supports(const std::vector<Mask>& bmin) {
  Mask seen = 0;
  for (auto b : bmin) {
    if (seen & b) return false;
    seen |= b;
  }
  return true;
}
}  // namespace

TEST_CASE("single-variable mobius coefficients") {
  const auto mu = mu_x_single(CellularClass::projective(1), 6);
  CHECK(mu[0] == LaurentPoly(1));
  CHECK(mu[1] == -(1 + L));
  CHECK(mu[2] == L);
  for (int k = 3; k <= 6; ++k) CHECK(mu[static_cast<std::size_t>(k)].is_zero());
  const auto ma = mu_x_single(CellularClass::affine(2), 3);
  CHECK(ma[1] == -L.pow(2));
  CHECK(ma[2].is_zero());
}

TEST_CASE("mobius table examples") {
  const ObstructionSet B(3, {0b111});
  const auto mu = mobius_table(B, 7);
  CHECK(mu.at({1, 1, 1}) == -(1 + L));
  CHECK(mu.at({2, 2, 2}) == L);
  CHECK(mu.at({1, 0, 0}).is_zero());
  CHECK(mu.at({2, 1, 1}).is_zero());
  CHECK(mu == diagonal_mobius(3, 7));
  CHECK_THROWS_AS(mu.at({3, 3, 3}), DomainError);

  CHECK(xb_class_at(mu, {1, 1, 1}) == L.pow(3) + Rational(3) * L.pow(2) + Rational(2) * L);
  CHECK(xb_class_at(mu, {0, 0, 0}) == LaurentPoly(1));
  CHECK(xb_class_at(mu, {2, 0, 1}) == oracle::proj(2) * oracle::proj(1));

  const auto q = mobius_table(b_sigma(p1xp1_fan()), 4);
  CHECK(xb_class_at(q, {1, 1, 0, 0}) == L.pow(2) + L);
  CHECK(xb_class_at(q, {1, 0, 1, 0}) == (1 + L) * (1 + L));
}

TEST_CASE("table round trip through series") {
  const auto mu = mobius_table(b_sigma(hirzebruch_fan(1)), 5);
  CHECK(MultiDegreeTable::from_series(mu.to_series()) == mu);
  CHECK(all_degree_vectors(2, 2).size() == 6);
  CHECK(all_degree_vectors(3, 0) == std::vector<DegreeVector>{{0, 0, 0}});
}

TEST_CASE("integrality, inversion and closed forms on every small antichain") {
  for (int E = 1; E <= 4; ++E) {
    const int D = E <= 3 ? 7 : 5;
    for (const auto& ac : oracle::antichains(E)) {
      const ObstructionSet B(E, ac);
      const auto mu = mobius_table(B, D);
      for (const auto& [e, c] : mu.values) CHECK(c.has_integer_coefficients());
      CHECK(mobius_table_by_inversion(B, D) == mu);
      CHECK_NOTHROW(xb_classes(B, D, XbPath::both));
      const auto part = partition_mobius(B, D);
      CHECK(part.has_value() == disjoint_supports(ac));
      if (part) CHECK(*part == mu);
      if (!ac.empty()) {
        const int nu = p_poly(B).valuation_of_nonconstant();
        CHECK(mobius_filtration_excess(mu, nu) <= 0);
      }
    }
  }
}

TEST_CASE("xb classes are sums of products of projective spaces") {
  // With B empty every tuple is allowed.
  const ObstructionSet B(2, {});
  const auto xb = xb_classes(B, 5, XbPath::euler_qb);
  for (const auto& [e, c] : xb.values) CHECK(c == oracle::proj(e[0]) * oracle::proj(e[1]));
}

TEST_CASE("bundled fans: both xb paths agree") {
  for (const auto& n : bundled_fan_names()) {
    const auto B = b_sigma(builtin_fan(n));
    const int D = B.ground() <= 3 ? 8 : 6;
    CHECK_NOTHROW(xb_classes(B, D, XbPath::both));
  }
}
