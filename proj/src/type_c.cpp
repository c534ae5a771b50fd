#include "raising/type_c.hpp"

#include <algorithm>
#include <map>
#include <mutex>
#include <stdexcept>
#include <tuple>

#include "raising/pfaffian.hpp"
#include "raising/raising_operator.hpp"

namespace raising {

namespace {

struct StraightenMemo {
  std::mutex mutex;
  std::map<std::tuple<int, int, IntVector>, RingElement> table;
};

StraightenMemo& straighten_memo() {
  static StraightenMemo m;
  return m;
}

}  // namespace

RingElement straighten_monomial(const IntVector& index, int k, StraightenStrategy s) {
  if (k < 0) throw std::invalid_argument("k must be nonnegative");
  RingElement out(Basis::WMonomial, k);
  auto norm = normalize_monomial_index(index);
  if (!norm) return out;
  const IntVector& v = *norm;

  int pos = -1;
  for (int i = 0; i + 1 < static_cast<int>(v.size()); ++i)
    if (v[i] == v[i + 1] && v[i] > k) {
      pos = i;
      if (s == StraightenStrategy::LeftmostPair) break;
    }
  if (pos < 0) {
    out.add(v, 1);
    return out;
  }

  auto& memo = straighten_memo();
  auto key = std::make_tuple(k, static_cast<int>(s), v);
  {
    std::lock_guard<std::mutex> lock(memo.mutex);
    if (auto it = memo.table.find(key); it != memo.table.end()) return it->second;
  }
  const int r = v[pos];
  IntVector rest;
  for (int i = 0; i < static_cast<int>(v.size()); ++i)
    if (i != pos && i != pos + 1) rest.push_back(v[i]);
  for (int i = 1; i <= r; ++i) {
    IntVector next = rest;
    next.push_back(r + i);
    next.push_back(r - i);
    long c = i % 2 ? 2 : -2;
    out += TPoly(c) * straighten_monomial(next, k, s);
  }
  std::lock_guard<std::mutex> lock(memo.mutex);
  memo.table.emplace(key, out);
  return out;
}

RingElement straighten(const RingElement& e, int k, StraightenStrategy s) {
  if (e.basis() != Basis::WMonomial) throw std::invalid_argument("straighten expects the w-monomial basis");
  if (e.k() && *e.k() != k) throw std::invalid_argument("straighten called with a different k");
  RingElement out(Basis::WMonomial, k);
  for (const auto& [idx, c] : e.terms()) out += c * straighten_monomial(idx, k, s);
  return out;
}

RingElement giambelli_w_raw(const IntVector& alpha, const PairSet& d, int k) {
  if (!is_valid_pair_set(d)) throw std::invalid_argument("denominator set is not a valid set of pairs");
  int len = vector_length(alpha);
  return expand_raising(FactorSpec::type_c(len, d), trimmed(alpha), Basis::WMonomial, k);
}

RingElement giambelli_w(const IntVector& alpha, const PairSet& d, int k) {
  return straighten(giambelli_w_raw(alpha, d, k), k);
}

RingElement giambelli_w(const Partition& lambda, int k) {
  if (!is_k_strict(lambda, k)) throw std::invalid_argument(lambda.to_string() + " is not k-strict");
  return giambelli_w(lambda.parts(), cset(lambda, k), k);
}

RingElement to_W_basis(const RingElement& e, int k) {
  RingElement normal = straighten(e, k);
  return change_basis_unitriangular(normal, Basis::W,
                                    [k](const IntVector& idx) { return giambelli_w(Partition(idx), k); });
}

RingElement pieri_w(int p, const Partition& lambda, int k) {
  RingElement out(Basis::W, k);
  for (const auto& t : pieri_targets(lambda, p, k)) {
    Integer c;
    mpz_ui_pow_ui(c.get_mpz_t(), 2, t.n);
    out.add(t.mu.parts(), TPoly(c));
  }
  return out;
}

RingElement pieri_w_oracle(int p, const Partition& lambda, int k) {
  if (p < 0) throw std::invalid_argument("pieri_w_oracle needs p >= 0");
  RingElement prod =
      multiply_monomial(RingElement::monomial(Basis::WMonomial, {p}, 1, k), giambelli_w(lambda, k));
  return to_W_basis(prod, k);
}

namespace {

TPoly power_of_two(int n) {
  Integer c;
  mpz_ui_pow_ui(c.get_mpz_t(), 2, n);
  return TPoly(c);
}

}  // namespace

IdentityReport mirror_w(const Partition& lambda, int k) {
  if (!is_k_strict(lambda, k)) throw std::invalid_argument(lambda.to_string() + " is not k-strict");
  const int l = lambda.length(), n = lambda.size();
  const PairSet c = cset(lambda, k);
  RingElement lhs(Basis::WMonomial, k);
  for (int s = 0; s <= n; ++s)
    for (const auto& a : weak_compositions(s, l)) {
      IntVector v = lambda.parts();
      int nonzero = 0;
      for (int i = 0; i < l; ++i) {
        v[i] -= a[i];
        if (a[i]) ++nonzero;
      }
      lhs += power_of_two(nonzero) * giambelli_w_raw(v, c, k);
    }
  RingElement rhs(Basis::W, k);
  for (const auto& t : k_strips_below(lambda, k)) rhs.add(t.mu.parts(), power_of_two(t.n));
  return make_report("mirror (type C, k=" + std::to_string(k) + ") " + lambda.to_string(), to_W_basis(lhs, k), rhs);
}

TopRowRecursion toprow_recursion_w(int p, const Partition& lambda, int k) {
  if (!is_k_strict(lambda, k)) throw std::invalid_argument(lambda.to_string() + " is not k-strict");
  if (p < std::max(lambda.row(1) + 1, lambda.length() + 2 * k))
    throw std::invalid_argument("toprow_recursion_w needs p >= max(lambda_1 + 1, l(lambda) + 2k)");
  TopRowRecursion out;
  RingElement lhs = giambelli_w(lambda.with_first_row(p), k);
  RingElement rhs(Basis::WMonomial, k);
  for (const auto& t : k_strips_below(lambda, k)) {
    int r = lambda.size() - t.mu.size();
    out.terms.push_back({r, t.mu, t.n});
    RingElement term = multiply_monomial(RingElement::monomial(Basis::WMonomial, {p + r}, 1, k), giambelli_w(t.mu, k));
    rhs += TPoly(r % 2 ? -1 : 1) * power_of_two(t.n) * term;
  }
  std::sort(out.terms.begin(), out.terms.end(), [](const RecursionTerm& a, const RecursionTerm& b) {
    if (a.r != b.r) return a.r < b.r;
    return a.mu.parts() < b.mu.parts();
  });
  out.report = make_report("top-row recursion (type C)", lhs, straighten(rhs, k));
  return out;
}

RingElement evaluate(const DIndexed& x, int k) { return giambelli_w(x.alpha, x.d, k); }

std::pair<DIndexed, DIndexed> mitosis(const DIndexed& x, int i, int j) {
  if (i < 1 || j <= i) throw std::invalid_argument("mitosis needs 1 <= i < j");
  if (x.d.count({i, j})) throw std::invalid_argument("mitosis pair already in D");
  PairSet d = x.d;
  d.insert({i, j});
  if (!is_valid_pair_set(d)) throw std::invalid_argument("D + (i,j) is not a valid set of pairs");
  IntVector raised = x.alpha;
  if (static_cast<int>(raised.size()) < j) raised.resize(j, 0);
  raised[i - 1] += 1;
  raised[j - 1] -= 1;
  return {DIndexed{x.alpha, d}, DIndexed{raised, d}};
}

bool tame_case_a(const PairSet& d, int j) {
  if (d.count({j, j + 1})) return false;
  for (int h = 1; h < j; ++h)
    if (d.count({h, j}) != d.count({h, j + 1})) return false;
  return true;
}

bool tame_case_b(const PairSet& d, int j) {
  if (!d.count({j, j + 1})) return false;
  int bound = j + 2;
  for (auto [a, b] : d) bound = std::max(bound, b + 1);
  for (int h = j + 2; h <= bound; ++h)
    if (d.count({j, h}) != d.count({j + 1, h})) return false;
  return true;
}

TameReport check_tame(const PairSet& d, const IntVector& prefix, int r, int s, const IntVector& suffix, int k) {
  const int j = static_cast<int>(prefix.size()) + 1;
  auto build = [&](int a, int b) {
    IntVector v = prefix;
    v.push_back(a);
    v.push_back(b);
    v.insert(v.end(), suffix.begin(), suffix.end());
    return v;
  };
  TameReport out;
  RingElement lhs = giambelli_w(build(r, s), d, k);
  if (tame_case_a(d, j)) {
    out.applicable = true;
    out.which = 'a';
    out.report = make_report("tame straightening (a)", lhs, -giambelli_w(build(s - 1, r + 1), d, k));
  } else if (tame_case_b(d, j) && r + s > 2 * k) {
    out.applicable = true;
    out.which = 'b';
    out.report = make_report("tame exchange (b)", lhs, -giambelli_w(build(s, r), d, k));
  } else {
    out.report = make_report("not tame", lhs, lhs, "pair is not D-tame for this index");
  }
  return out;
}

RingElement pfaffian_w(const IntVector& alpha) {
  IntVector a = alpha;
  if (a.size() % 2) a.push_back(0);
  const size_t n = a.size();
  const RingElement zero(Basis::WMonomial, 0), one = RingElement::one(Basis::WMonomial, 0);
  std::vector<std::vector<RingElement>> m(n, std::vector<RingElement>(n, zero));
  const PairSet d{{1, 2}};
  for (size_t i = 0; i < n; ++i)
    for (size_t j = i + 1; j < n; ++j) {
      m[i][j] = giambelli_w(IntVector{a[i], a[j]}, d, 0);
      m[j][i] = -m[i][j];
    }
  return pfaffian(m, zero, one, [](const RingElement& x, const RingElement& y) {
    return straighten(multiply_monomial(x, y), 0);
  });
}

}  // namespace raising
