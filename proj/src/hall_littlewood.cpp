#include "raising/hall_littlewood.hpp"

#include <functional>
#include <map>
#include <set>
#include <stdexcept>

#include "raising/raising_operator.hpp"

namespace raising {

RingElement giambelli_v(const IntVector& alpha) {
  int len = vector_length(alpha);
  return expand_raising(FactorSpec(len, Factor::HallLittlewood), trimmed(alpha), Basis::VMonomial);
}

RingElement giambelli_v_recursive(const IntVector& alpha) {
  IntVector a = trimmed(alpha);
  if (a.empty()) return RingElement::one(Basis::VMonomial);
  const int len = static_cast<int>(a.size());
  const int r = a.back();
  a.pop_back();
  RingElement out(Basis::VMonomial);
  const TPoly tm1 = TPoly::t() - TPoly(1);
  for (int total = 0; total <= r; ++total)
    for (const auto& g : weak_compositions(total, len - 1)) {
      int nonzero = 0;
      IntVector b = a;
      for (int i = 0; i < len - 1; ++i) {
        b[i] += g[i];
        if (g[i]) ++nonzero;
      }
      TPoly c = TPoly::monomial(1, total - nonzero) * tm1.pow(nonzero);
      out += c * multiply_monomial(giambelli_v_recursive(b), RingElement::monomial(Basis::VMonomial, {r - total}));
    }
  return out;
}

RingElement to_V_basis(const RingElement& e) {
  return change_basis_unitriangular(e, Basis::V, [](const IntVector& idx) { return giambelli_v(idx); });
}

namespace {

std::set<int> strip_columns(const Partition& big, const Partition& small) {
  std::set<int> cols;
  for (const auto& b : skew_boxes(big, small)) cols.insert(b.col);
  return cols;
}

TPoly one_minus_t_pow(int m) { return TPoly(1) - TPoly::monomial(1, m); }

}  // namespace

TPoly psi(const Partition& mu, const Partition& lambda) {
  if (!is_horizontal_strip(mu, lambda)) throw std::invalid_argument("psi needs a horizontal strip mu/lambda");
  auto cols = strip_columns(mu, lambda);
  TPoly out(1);
  for (int c = 1; c <= mu.row(1); ++c)
    if (!cols.count(c) && cols.count(c + 1)) out *= one_minus_t_pow(lambda.multiplicity(c));
  return out;
}

TPoly phi(const Partition& lambda, const Partition& mu) {
  if (!is_horizontal_strip(lambda, mu)) throw std::invalid_argument("phi needs a horizontal strip lambda/mu");
  auto cols = strip_columns(lambda, mu);
  TPoly out(1);
  for (int c : cols)
    if (!cols.count(c + 1)) out *= one_minus_t_pow(lambda.multiplicity(c));
  return out;
}

RingElement pieri_v(int p, const Partition& lambda) {
  if (p < 0) throw std::invalid_argument("pieri_v needs p >= 0");
  RingElement out(Basis::V);
  for (const auto& mu : add_horizontal_strips(lambda, p)) out.add(mu.parts(), psi(mu, lambda));
  return out;
}

RingElement pieri_v_oracle(int p, const Partition& lambda) {
  if (p < 0) throw std::invalid_argument("pieri_v_oracle needs p >= 0");
  return to_V_basis(multiply_monomial(RingElement::monomial(Basis::VMonomial, {p}), giambelli_v(lambda.parts())));
}

IdentityReport mirror_v(const Partition& lambda) {
  const int l = lambda.length(), n = lambda.size();
  const TPoly one_minus_t = TPoly(1) - TPoly::t();
  RingElement lhs(Basis::VMonomial), rhs(Basis::VMonomial);
  for (int s = 0; s <= n; ++s)
    for (const auto& a : weak_compositions(s, l)) {
      IntVector v = lambda.parts();
      int nonzero = 0;
      for (int i = 0; i < l; ++i) {
        v[i] -= a[i];
        if (a[i]) ++nonzero;
      }
      lhs += one_minus_t.pow(nonzero) * giambelli_v(v);
    }
  for (const auto& mu : remove_horizontal_strips(lambda)) rhs += phi(lambda, mu) * giambelli_v(mu.parts());
  return make_report("mirror (Hall-Littlewood) " + lambda.to_string(), lhs, rhs);
}

namespace {

IntVector join(const IntVector& a, std::initializer_list<int> mid, const IntVector& b) {
  IntVector v = a;
  v.insert(v.end(), mid);
  v.insert(v.end(), b.begin(), b.end());
  return v;
}

}  // namespace

IdentityReport commutation_v(const IntVector& prefix, int r, int s, const IntVector& suffix) {
  RingElement lhs = giambelli_v(join(prefix, {r, s}, suffix)) + giambelli_v(join(prefix, {s - 1, r + 1}, suffix));
  RingElement rhs = TPoly::t() * (giambelli_v(join(prefix, {r + 1, s - 1}, suffix)) +
                                  giambelli_v(join(prefix, {s, r}, suffix)));
  return make_report("commutation (Hall-Littlewood)", lhs, rhs);
}

IdentityReport exchange_v(const IntVector& prefix, int c, int d, const IntVector& suffix) {
  if (d < 1) throw std::invalid_argument("exchange_v needs d >= 1");
  RingElement lhs = giambelli_v(join(prefix, {c, c + d}, suffix));
  const TPoly one_minus_t = TPoly(1) - TPoly::t();
  for (int i = 1; i < d; ++i) lhs += one_minus_t * giambelli_v(join(prefix, {c + i, c + d - i}, suffix));
  RingElement rhs = TPoly::t() * giambelli_v(join(prefix, {c + d, c}, suffix));
  return make_report("exchange (Hall-Littlewood)", lhs, rhs);
}

Poly tpoly_as_poly(const TPoly& c, int nvars, int t_var) {
  Poly out(nvars);
  Exponent e(nvars, 0);
  for (int d = 0; d <= c.degree(); ++d) {
    e[t_var] = d;
    out.add(e, c.coeff(d));
  }
  return out;
}

Poly realize_v(const RingElement& e, int m, VSeries series) {
  if (e.basis() != Basis::VMonomial) throw std::invalid_argument("realize_v expects the v-monomial basis");
  if (series == VSeries::E && !e.t_free())
    throw std::invalid_argument("the e-series realization needs a t-free element (specialize t = -1)");
  const int nv = m + 1;
  int cap = 0;
  for (const auto& [idx, c] : e.terms())
    for (int x : idx) cap = std::max(cap, x);
  SeriesLayout layout{nv, 0, m, m, 1};
  Series s = series == VSeries::H ? Series::H : series == VSeries::E ? Series::E : Series::Q;
  auto gens = series_coefficients(s, layout, cap);
  Poly out(nv);
  for (const auto& [idx, c] : e.terms()) {
    Poly term = tpoly_as_poly(c, nv, m);
    for (int x : idx) term = term * gens[x];
    out += term;
  }
  return out;
}

Poly hl_function(const Partition& lambda, int m, HLMode mode) {
  if (m < 0) throw std::invalid_argument("hl_function needs m >= 0");
  const int nv = m + 1;
  if (mode == HLMode::Realization) return realize_v(giambelli_v(lambda.parts()), m, VSeries::Q);

  std::map<std::pair<Partition, int>, Poly> memo;
  std::function<Poly(const Partition&, int)> rec = [&](const Partition& la, int vars) -> Poly {
    if (vars == 0) return la.empty() ? Poly::constant(nv, 1) : Poly(nv);
    if (la.length() > vars) return Poly(nv);
    auto key = std::make_pair(la, vars);
    if (auto it = memo.find(key); it != memo.end()) return it->second;
    Poly out(nv);
    Poly x = Poly::variable(nv, vars - 1);
    for (const auto& mu : remove_horizontal_strips(la)) {
      Poly sub = rec(mu, vars - 1);
      if (sub.is_zero()) continue;
      out += tpoly_as_poly(phi(la, mu), nv, m) * x.pow(la.size() - mu.size()) * sub;
    }
    memo.emplace(key, out);
    return out;
  };
  return rec(lambda, m);
}

}  // namespace raising
