#include "raising/type_a.hpp"

#include <algorithm>
#include <numeric>
#include <stdexcept>

#include "raising/raising_operator.hpp"

namespace raising {

RingElement giambelli_u(const IntVector& alpha) {
  int len = vector_length(alpha);
  return expand_raising(FactorSpec(len, Factor::OneMinusR), trimmed(alpha), Basis::UMonomial);
}

RingElement jacobi_trudi_u(const IntVector& alpha) {
  IntVector a = trimmed(alpha);
  const int n = static_cast<int>(a.size());
  RingElement out(Basis::UMonomial);
  std::vector<int> perm(n);
  std::iota(perm.begin(), perm.end(), 0);
  do {
    int inversions = 0;
    for (int i = 0; i < n; ++i)
      for (int j = i + 1; j < n; ++j)
        if (perm[i] > perm[j]) ++inversions;
    IntVector idx(n);
    for (int i = 0; i < n; ++i) idx[i] = a[i] + perm[i] - i;
    out.add(idx, inversions % 2 ? -1 : 1);
  } while (std::next_permutation(perm.begin(), perm.end()));
  return out;
}

RingElement to_U_basis(const RingElement& e) {
  return change_basis_unitriangular(e, Basis::U, [](const IntVector& idx) { return giambelli_u(idx); });
}

RingElement pieri_u(int p, const Partition& lambda) {
  if (p < 0) throw std::invalid_argument("pieri_u needs p >= 0");
  RingElement out(Basis::U);
  for (const auto& mu : add_horizontal_strips(lambda, p)) out.add(mu.parts(), 1);
  return out;
}

RingElement pieri_u_oracle(int p, const Partition& lambda) {
  if (p < 0) throw std::invalid_argument("pieri_u_oracle needs p >= 0");
  RingElement prod = multiply_monomial(RingElement::monomial(Basis::UMonomial, {p}), giambelli_u(lambda.parts()));
  return to_U_basis(prod);
}

IdentityReport toprow_recursion_u(int p, const Partition& lambda) {
  if (p < lambda.row(1)) throw std::invalid_argument("toprow_recursion_u needs p >= lambda_1");
  RingElement lhs = giambelli_u(lambda.with_first_row(p).parts());
  RingElement rhs(Basis::UMonomial);
  for (const auto& mu : remove_vertical_strips(lambda)) {
    int r = lambda.size() - mu.size();
    RingElement term = multiply_monomial(RingElement::monomial(Basis::UMonomial, {p + r}), giambelli_u(mu.parts()));
    rhs += TPoly(r % 2 ? -1 : 1) * term;
  }
  return make_report("top-row recursion (type A)", lhs, rhs);
}

MirrorUReport mirror_u(const Partition& lambda, int degree_cap) {
  MirrorUReport rep;
  const int l = lambda.length(), n = lambda.size();
  if (degree_cap < 0) degree_cap = n + 4;

  RingElement lhs(Basis::UMonomial), rhs(Basis::UMonomial);
  for (int s = 0; s <= n; ++s)
    for (const auto& a : weak_compositions(s, l)) {
      IntVector v = lambda.parts();
      for (int i = 0; i < l; ++i) v[i] -= a[i];
      lhs += giambelli_u(v);
    }
  for (const auto& mu : remove_horizontal_strips(lambda)) rhs += giambelli_u(mu.parts());
  RingElement in_u = to_U_basis(lhs);
  for (const auto& [idx, c] : in_u.terms()) {
    if (c == TPoly(1)) rep.down_partners.emplace_back(idx);
  }
  std::sort(rep.down_partners.begin(), rep.down_partners.end());
  rep.instances.push_back(make_report("mirror (type A, downward)", lhs, rhs));

  for (int d = n; d <= degree_cap; ++d) {
    RingElement up(Basis::UMonomial), strips(Basis::UMonomial);
    for (const auto& a : weak_compositions(d - n, l + 1)) {
      IntVector v = lambda.parts();
      v.push_back(0);
      for (int i = 0; i <= l; ++i) v[i] += a[i];
      up += giambelli_u(v);
    }
    for (const auto& mu : add_horizontal_strips(lambda, d - n)) strips += giambelli_u(mu.parts());
    rep.instances.push_back(make_report("mirror (type A, upward) degree " + std::to_string(d), up, strips));
  }
  rep.holds = std::all_of(rep.instances.begin(), rep.instances.end(), [](const auto& r) { return r.holds; });
  return rep;
}

}  // namespace raising
