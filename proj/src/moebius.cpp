#include <motzeta/errors.hpp>
#include <motzeta/moebius.hpp>

#include <algorithm>
#include <bit>
#include <functional>

namespace motzeta {

LaurentPoly MultiDegreeTable::at(const DegreeVector& d) const {
  if (total_degree(d) > trunc)
    throw DomainError("MultiDegreeTable: " + degree_vector_str(d) + " beyond truncation " +
                      std::to_string(trunc));
  auto it = values.find(d);
  return it == values.end() ? LaurentPoly() : it->second;
}

MultiDegreeTable MultiDegreeTable::from_series(const PowerSeriesMulti& s) {
  MultiDegreeTable t;
  t.ground = s.nvars();
  t.trunc = s.trunc();
  for (const auto& [e, c] : s.terms()) t.values.emplace(e, c);
  return t;
}

PowerSeriesMulti MultiDegreeTable::to_series() const {
  PowerSeriesMulti s(ground, trunc);
  for (const auto& [e, c] : values) s.set(e, c);
  return s;
}

std::vector<DegreeVector> all_degree_vectors(int ground, int D) {
  std::vector<DegreeVector> out;
  DegreeVector d(static_cast<std::size_t>(ground), 0);
  std::function<void(int, int)> rec = [&](int i, int remaining) {
    if (i == ground) {
      out.push_back(d);
      return;
    }
    for (int v = 0; v <= remaining; ++v) {
      d[static_cast<std::size_t>(i)] = v;
      rec(i + 1, remaining - v);
    }
    d[static_cast<std::size_t>(i)] = 0;
  };
  rec(0, D);
  return out;
}

std::vector<LaurentPoly> mu_x_single(const CellularClass& x, int D) {
  const PowerSeries1 inv = kapranov_zeta(x, D).inverse();
  return inv.coeffs();
}

namespace {

const CellularClass& p1() {
  static const CellularClass c = CellularClass::projective(1);
  return c;
}

void assert_integral(const MultiDegreeTable& t, const char* who) {
  for (const auto& [e, c] : t.values)
    if (!c.has_integer_coefficients())
      throw StructuralError(std::string(who) + ": non-integral value at " + degree_vector_str(e) +
                            ": " + c.str());
}

// prod_e Z_P1(T_e) truncated at total degree D.
PowerSeriesMulti zeta_product(int ground, int D) {
  PowerSeriesMulti z = PowerSeriesMulti::constant(ground, D, LaurentPoly(1));
  for (int e = 0; e < ground; ++e) {
    PowerSeriesMulti factor(ground, D);
    for (int k = 0; k <= D; ++k) {
      DegreeVector v(static_cast<std::size_t>(ground), 0);
      v[static_cast<std::size_t>(e)] = k;
      factor.set(v, projective_class(k));
    }
    z = z * factor;
  }
  return z;
}

}  // namespace

MultiDegreeTable mobius_table(const ObstructionSet& B, int D) {
  const auto seq = phi_psi(p1(), std::max(D, 1));
  const PowerSeriesMulti z = euler_product(seq, p_poly(B, D), D, EulerAlgo::direct);
  MultiDegreeTable t = MultiDegreeTable::from_series(z);
  assert_integral(t, "mobius_table");
  return t;
}

MultiDegreeTable mobius_table_by_inversion(const ObstructionSet& B, int D) {
  const MultiDegreeTable xb = xb_classes(B, D, XbPath::euler_qb);
  const PowerSeriesMulti mu = xb.to_series() * zeta_product(B.ground(), D).inverse();
  MultiDegreeTable t = MultiDegreeTable::from_series(mu);
  assert_integral(t, "mobius_table_by_inversion");
  return t;
}

MultiDegreeTable xb_classes(const ObstructionSet& B, int D, XbPath path) {
  auto via_qb = [&] {
    const auto seq = phi_psi(p1(), std::max(D, 1));
    return MultiDegreeTable::from_series(euler_product(seq, q_series(B, D), D, EulerAlgo::direct));
  };
  auto via_conv = [&] {
    const MultiDegreeTable mu = mobius_table(B, D);
    return MultiDegreeTable::from_series(mu.to_series() * zeta_product(B.ground(), D));
  };
  switch (path) {
    case XbPath::euler_qb:
      return via_qb();
    case XbPath::convolution:
      return via_conv();
    case XbPath::both:
      break;
  }
  const MultiDegreeTable a = via_qb();
  const MultiDegreeTable b = via_conv();
  if (a != b) {
    for (const auto& d : all_degree_vectors(B.ground(), D))
      if (a.at(d) != b.at(d))
        throw StructuralError("xb_classes: Q_B Euler product and convolution disagree at " +
                              degree_vector_str(d) + ": " + a.at(d).str() + " vs " +
                              b.at(d).str());
  }
  return a;
}

LaurentPoly xb_class_at(const MultiDegreeTable& mu, const DegreeVector& d) {
  if (total_degree(d) > mu.trunc)
    throw DomainError("xb_class_at: " + degree_vector_str(d) + " beyond the table truncation");
  LaurentPoly s;
  for (const auto& [e, c] : mu.values) {
    if (!leq(e, d)) continue;
    LaurentPoly term = c;
    for (std::size_t i = 0; i < d.size(); ++i) term *= projective_class(d[i] - e[i]);
    s += term;
  }
  return s;
}

MultiDegreeTable diagonal_mobius(int ground, int D) {
  const auto single = mu_x_single(p1(), D / ground);
  MultiDegreeTable t;
  t.ground = ground;
  t.trunc = D;
  for (int k = 0; k * ground <= D; ++k)
    if (!single[static_cast<std::size_t>(k)].is_zero())
      t.values.emplace(DegreeVector(static_cast<std::size_t>(ground), k),
                       single[static_cast<std::size_t>(k)]);
  return t;
}

std::optional<MultiDegreeTable> partition_mobius(const ObstructionSet& B, int D) {
  Mask used = 0;
  for (Mask b : B.bmin()) {
    if (b & used) return std::nullopt;
    used |= b;
  }
  const auto single = mu_x_single(p1(), D);
  MultiDegreeTable t;
  t.ground = B.ground();
  t.trunc = D;
  // Product over blocks: on each block all coordinates equal k with weight
  // mu_P1(k); coordinates outside every block are 0.
  DegreeVector d(static_cast<std::size_t>(B.ground()), 0);
  std::function<void(std::size_t, int, LaurentPoly)> rec = [&](std::size_t i, int budget,
                                                                LaurentPoly acc) {
    if (acc.is_zero()) return;
    if (i == B.bmin().size()) {
      t.values.emplace(d, acc);
      return;
    }
    const auto idx = mask_indices(B.bmin()[i], B.ground());
    const int w = static_cast<int>(idx.size());
    for (int k = 0; k * w <= budget; ++k) {
      for (int e : idx) d[static_cast<std::size_t>(e)] = k;
      rec(i + 1, budget - k * w, acc * single[static_cast<std::size_t>(k)]);
    }
    for (int e : idx) d[static_cast<std::size_t>(e)] = 0;
  };
  rec(0, D, LaurentPoly(1));
  return t;
}

int mobius_filtration_excess(const MultiDegreeTable& mu, int nu) {
  int worst = std::numeric_limits<int>::min();
  for (const auto& [e, c] : mu.values) worst = std::max(worst, c.vdim() - total_degree(e) / nu);
  return worst;
}

}  // namespace motzeta
