#include "raising/theta.hpp"

#include <algorithm>
#include <functional>
#include <numeric>
#include <stdexcept>

#include "raising/k_strips.hpp"
#include "raising/pair_set.hpp"
#include "raising/tableaux.hpp"
#include "raising/type_c.hpp"

namespace raising {

namespace {

int max_index(const RingElement& e) {
  int cap = 0;
  for (const auto& [idx, c] : e.terms())
    for (int x : idx) cap = std::max(cap, x);
  return cap;
}

Poly substitute_generators(const RingElement& e, const std::vector<Poly>& gens, int nvars) {
  Poly out(nvars);
  for (const auto& [idx, c] : e.terms()) {
    if (!c.is_constant()) throw std::invalid_argument("theta realization needs integer coefficients");
    Poly term = Poly::constant(nvars, c.constant());
    for (int x : idx) term = term * gens[x];
    out += term;
  }
  return out;
}

Poly power_of_two(int nvars, int n) {
  Integer c;
  mpz_ui_pow_ui(c.get_mpz_t(), 2, n);
  return Poly::constant(nvars, c);
}

std::vector<int> identity_map(int n, int offset = 0) {
  std::vector<int> v(n);
  std::iota(v.begin(), v.end(), offset);
  return v;
}

}  // namespace

Poly realize_w(const RingElement& e, int k, int m) {
  if (e.basis() != Basis::WMonomial) throw std::invalid_argument("realize_w expects the w-monomial basis");
  SeriesLayout layout{m + k, 0, m, m, k};
  return substitute_generators(e, series_coefficients(Series::Theta, layout, max_index(e)), m + k);
}

Poly realize_w_elementary(const RingElement& e, int k) {
  if (e.basis() != Basis::WMonomial) throw std::invalid_argument("realize_w expects the w-monomial basis");
  SeriesLayout layout{k, 0, k, 0, 0};
  return substitute_generators(e, series_coefficients(Series::E, layout, max_index(e)), k);
}

Poly theta(const Partition& lambda, int k, int m, ThetaMode mode) {
  if (!is_k_strict(lambda, k)) throw std::invalid_argument(lambda.to_string() + " is not k-strict");
  if (m < 0) throw std::invalid_argument("m must be nonnegative");
  const int nv = m + k;
  switch (mode) {
    case ThetaMode::Raising:
      return realize_w(giambelli_w_raw(lambda.parts(), cset(lambda, k), k), k, m);
    case ThetaMode::Tableau: {
      Poly out(nv);
      for (const auto& b : enumerate_k_bitableaux(lambda, k, m)) {
        Exponent e(nv, 0);
        for (int i = 0; i < m; ++i) e[i] = i < static_cast<int>(b.x_content.size()) ? b.x_content[i] : 0;
        for (int j = 0; j < k; ++j) e[m + j] = b.y_content[j];
        Integer c;
        mpz_ui_pow_ui(c.get_mpz_t(), 2, b.n);
        out.add(e, c);
      }
      return out;
    }
    case ThetaMode::Reduction: {
      std::map<std::pair<Partition, int>, Poly> memo;
      std::function<Poly(const Partition&, int)> rec = [&](const Partition& la, int vars) -> Poly {
        auto key = std::make_pair(la, vars);
        if (auto it = memo.find(key); it != memo.end()) return it->second;
        Poly out(nv);
        if (vars == 0) {
          std::vector<int> map = identity_map(k, m);
          out = realize_w_elementary(giambelli_w_raw(la.parts(), cset(la, k), k), k).embed(nv, map);
        } else {
          Poly x = Poly::variable(nv, vars - 1);
          for (const auto& s : k_strips_below(la, k))
            out += power_of_two(nv, s.n) * x.pow(la.size() - s.mu.size()) * rec(s.mu, vars - 1);
        }
        memo.emplace(key, out);
        return out;
      };
      return rec(lambda, m);
    }
  }
  return Poly(nv);
}

Poly skew_f(const Partition& lambda, const Partition& mu, int k, int m) {
  if (!is_k_strict(lambda, k) || !is_k_strict(mu, k)) throw std::invalid_argument("partitions must be k-strict");
  if (m < 0) throw std::invalid_argument("m must be nonnegative");
  std::map<std::pair<Partition, int>, Poly> memo;
  std::function<Poly(const Partition&, int)> rec = [&](const Partition& la, int vars) -> Poly {
    if (!la.contains(mu)) return Poly(m);
    if (vars == 0) return la == mu ? Poly::constant(m, 1) : Poly(m);
    auto key = std::make_pair(la, vars);
    if (auto it = memo.find(key); it != memo.end()) return it->second;
    Poly out(m);
    Poly x = Poly::variable(m, vars - 1);
    for (const auto& s : k_strips_below(la, k)) {
      if (!s.mu.contains(mu)) continue;
      Poly sub = rec(s.mu, vars - 1);
      if (sub.is_zero()) continue;
      out += power_of_two(m, s.n) * x.pow(la.size() - s.mu.size()) * sub;
    }
    memo.emplace(key, out);
    return out;
  };
  return rec(lambda, m);
}

Poly skew_f_tableaux(const Partition& lambda, const Partition& mu, int k, int m) {
  Poly out(m);
  for (const auto& t : enumerate_k_tableaux(lambda, mu, k, m)) {
    Integer c;
    mpz_ui_pow_ui(c.get_mpz_t(), 2, t.n);
    out.add(t.content(), c);
  }
  return out;
}

Poly skew_f_determinant(const Partition& lambda, const Partition& mu, int m) {
  const int n = lambda.length();
  int cap = lambda.row(1) + n;
  SeriesLayout layout{m, 0, m, 0, 0};
  auto q = series_coefficients(Series::QMinusOne, layout, cap);
  auto entry = [&](int i, int j) {
    int d = lambda.row(i) - mu.row(j) + j - i;
    if (d < 0) return Poly(m);
    return q[d];
  };
  std::vector<int> perm = identity_map(n, 1);
  Poly out(m);
  do {
    int inversions = 0;
    for (int i = 0; i < n; ++i)
      for (int j = i + 1; j < n; ++j)
        if (perm[i] > perm[j]) ++inversions;
    Poly term = Poly::constant(m, inversions % 2 ? -1 : 1);
    for (int i = 1; i <= n && !term.is_zero(); ++i) term = term * entry(i, perm[i - 1]);
    out += term;
  } while (std::next_permutation(perm.begin(), perm.end()));
  return out;
}

Poly schur_q(const Partition& lambda, int m) {
  if (!is_strict(lambda)) throw std::invalid_argument("schur_q needs a strict partition");
  return skew_f(lambda, Partition(), 0, m);
}

Poly skew_schur_q(const Partition& lambda, const Partition& mu, int m) {
  if (!is_strict(lambda) || !is_strict(mu)) throw std::invalid_argument("skew_schur_q needs strict partitions");
  return skew_f(lambda, mu, 0, m);
}

Poly skew_schur_s(const Partition& lambda, const Partition& mu, int m) {
  Poly out(m);
  if (!lambda.contains(mu)) return out;
  auto boxes = skew_boxes(lambda, mu);
  std::vector<std::vector<int>> fill(lambda.length());
  for (int r = 1; r <= lambda.length(); ++r) fill[r - 1].assign(lambda.row(r), 0);
  Exponent e(m, 0);
  std::function<void(size_t)> rec = [&](size_t i) {
    if (i == boxes.size()) {
      out.add(e, 1);
      return;
    }
    auto [r, c] = boxes[i];
    int lo = 1;
    if (c > mu.row(r) + 1) lo = std::max(lo, fill[r - 1][c - 2]);
    if (r > 1 && c > mu.row(r - 1)) lo = std::max(lo, fill[r - 2][c - 1] + 1);
    for (int v = lo; v <= m; ++v) {
      fill[r - 1][c - 1] = v;
      e[v - 1] += 1;
      rec(i + 1);
      e[v - 1] -= 1;
    }
    fill[r - 1][c - 1] = 0;
  };
  rec(0);
  return out;
}

Poly schur_s(const Partition& mu, int k) { return skew_schur_s(mu.conjugate(), Partition(), k); }

std::map<Partition, Integer> q_expansion(const Poly& f, int m) {
  if (f.nvars() != m) throw std::invalid_argument("q_expansion: polynomial is not in m variables");
  std::map<Partition, Integer> out;
  Poly rest = f;
  std::map<Partition, Poly> cache;
  while (!rest.is_zero()) {
    auto [e, c] = *rest.terms().rbegin();
    int d = std::accumulate(e.begin(), e.end(), 0);
    int need = 0;
    while ((need + 1) * (need + 2) / 2 <= d) ++need;
    if (m < need)
      throw std::invalid_argument("q_expansion needs at least " + std::to_string(need) + " variables in degree " +
                                  std::to_string(d));
    std::vector<int> parts(e.begin(), e.end());
    Partition lambda;
    try {
      lambda = Partition(parts);
    } catch (const std::invalid_argument&) {
      throw std::domain_error("polynomial is not symmetric");
    }
    if (!is_strict(lambda)) throw std::domain_error("leading monomial is not strict; not in the span of Q-functions");
    Integer lead;
    mpz_ui_pow_ui(lead.get_mpz_t(), 2, lambda.length());
    if (c % lead != 0) throw std::domain_error("leading coefficient not divisible by 2^length");
    Integer a = c / lead;
    auto it = cache.find(lambda);
    if (it == cache.end()) it = cache.emplace(lambda, schur_q(lambda, m)).first;
    rest -= a * it->second;
    out[lambda] += a;
  }
  return out;
}

std::vector<PolyIdentity> master_identities(const Partition& lambda, int k, int m, int mprime) {
  std::vector<PolyIdentity> out;
  const int nv = m + mprime + k;
  const std::vector<int> x_map = identity_map(m, 0);
  std::vector<int> xp_y_map = identity_map(mprime + k, m);
  std::vector<int> y_after_x = identity_map(k, m);  // y block right after x
  auto subs = subpartitions(lambda);

  {
    PolyIdentity id{"theta splits over F", false, Poly(nv), Poly(nv)};
    id.lhs = theta(lambda, k, m + mprime, ThetaMode::Reduction);
    for (const auto& mu : subs) {
      if (!is_k_strict(mu, k)) continue;
      id.rhs += skew_f(lambda, mu, k, m).embed(nv, x_map) *
                theta(mu, k, mprime, ThetaMode::Reduction).embed(nv, xp_y_map);
    }
    id.holds = id.lhs == id.rhs;
    out.push_back(std::move(id));
  }
  {
    const int nv2 = m + k;
    PolyIdentity id{"theta as F times Schur in y", false, Poly(nv2), Poly(nv2)};
    id.lhs = theta(lambda, k, m, ThetaMode::Raising);
    for (const auto& mu : subs) {
      if (mu.row(1) > k) continue;
      id.rhs += skew_f(lambda, mu, k, m).embed(nv2, x_map) * schur_s(mu, k).embed(nv2, y_after_x);
    }
    id.holds = id.lhs == id.rhs;
    out.push_back(std::move(id));
  }
  {
    const int nv3 = m + mprime;
    PolyIdentity id{"F splits over F", false, Poly(nv3), Poly(nv3)};
    id.lhs = skew_f(lambda, Partition(), k, m + mprime);
    for (const auto& mu : subs) {
      if (!is_k_strict(mu, k)) continue;
      id.rhs += skew_f(lambda, mu, k, m).embed(nv3, x_map) *
                skew_f(mu, Partition(), k, mprime).embed(nv3, identity_map(mprime, m));
    }
    id.holds = id.lhs == id.rhs;
    out.push_back(std::move(id));
  }
  {
    const int nv3 = m + mprime;
    PolyIdentity id{"skew F splits", true, Poly(nv3), Poly(nv3)};
    for (const auto& mu : subs) {
      if (!is_k_strict(mu, k)) continue;
      Poly lhs = skew_f(lambda, mu, k, m + mprime), rhs(nv3);
      for (const auto& nu : subs) {
        if (!is_k_strict(nu, k) || !nu.contains(mu)) continue;
        rhs += skew_f(lambda, nu, k, m).embed(nv3, x_map) *
               skew_f(nu, mu, k, mprime).embed(nv3, identity_map(mprime, m));
      }
      if (!(lhs == rhs)) {
        id.holds = false;
        id.lhs = lhs;
        id.rhs = rhs;
        id.name += " at mu = " + mu.to_string();
        break;
      }
    }
    out.push_back(std::move(id));
  }
  return out;
}

}  // namespace raising
