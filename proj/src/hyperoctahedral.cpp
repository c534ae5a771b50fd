#include "raising/hyperoctahedral.hpp"

#include <algorithm>
#include <cstdlib>
#include <functional>
#include <numeric>
#include <set>
#include <stdexcept>

#include "raising/partition.hpp"

namespace raising {

SignedPermutation::SignedPermutation(std::vector<int> window) : w_(std::move(window)) {
  const int n = static_cast<int>(w_.size());
  std::vector<bool> seen(n + 1, false);
  for (int x : w_) {
    int a = std::abs(x);
    if (a < 1 || a > n || seen[a]) throw std::invalid_argument("not a signed permutation");
    seen[a] = true;
  }
}

SignedPermutation SignedPermutation::identity(int n) {
  std::vector<int> w(n);
  std::iota(w.begin(), w.end(), 1);
  return SignedPermutation(std::move(w));
}

SignedPermutation SignedPermutation::generator(int i, int n) { return identity(n).times_generator(i); }

SignedPermutation SignedPermutation::from_word(const IntVector& word, int n) {
  SignedPermutation w = identity(n);
  for (int a : word) w = w.times_generator(a);
  return w;
}

int SignedPermutation::operator()(int i) const {
  if (i == 0 || std::abs(i) > n()) throw std::out_of_range("signed permutation argument out of range");
  return i > 0 ? w_[i - 1] : -w_[-i - 1];
}

SignedPermutation SignedPermutation::operator*(const SignedPermutation& o) const {
  if (o.n() != n()) {
    const int m = std::max(n(), o.n());
    return extended(m) * o.extended(m);
  }
  std::vector<int> r(n());
  for (int i = 1; i <= n(); ++i) r[i - 1] = (*this)(o(i));
  return SignedPermutation(std::move(r));
}

SignedPermutation SignedPermutation::inverse() const {
  std::vector<int> r(n());
  for (int i = 1; i <= n(); ++i) {
    int v = w_[i - 1];
    r[std::abs(v) - 1] = v > 0 ? i : -i;
  }
  return SignedPermutation(std::move(r));
}

SignedPermutation SignedPermutation::times_generator(int i) const {
  if (i < 0 || i >= n()) throw std::out_of_range("generator index out of range");
  SignedPermutation r = *this;
  if (i == 0)
    r.w_[0] = -r.w_[0];
  else
    std::swap(r.w_[i - 1], r.w_[i]);
  return r;
}

SignedPermutation SignedPermutation::extended(int n) const {
  if (n < this->n()) throw std::invalid_argument("cannot shrink a signed permutation");
  std::vector<int> r = w_;
  for (int i = this->n() + 1; i <= n; ++i) r.push_back(i);
  return SignedPermutation(std::move(r));
}

int SignedPermutation::length() const {
  int inv = 0;
  for (int i = 0; i < n(); ++i) {
    for (int j = i + 1; j < n(); ++j)
      if (w_[i] > w_[j]) ++inv;
    if (w_[i] < 0) inv -= w_[i];
  }
  return inv;
}

bool SignedPermutation::has_right_descent(int i) const {
  if (i == 0) return w_[0] < 0;
  return w_[i - 1] > w_[i];
}

bool SignedPermutation::is_k_grassmannian(int k) const {
  for (int i = 0; i < n(); ++i)
    if (i != k && has_right_descent(i)) return false;
  return true;
}

bool SignedPermutation::is_unsigned() const {
  return std::all_of(w_.begin(), w_.end(), [](int x) { return x > 0; });
}

std::string SignedPermutation::to_string() const { return format_int_list(w_); }

SignedPermutation parse_signed_permutation(std::string_view text) { return SignedPermutation(parse_int_list(text)); }

bool is_reduced_word(const IntVector& word, int n) {
  for (int a : word)
    if (a < 0 || a >= n) return false;
  return SignedPermutation::from_word(word, n).length() == static_cast<int>(word.size());
}

std::vector<IntVector> reduced_words(const SignedPermutation& w) {
  std::vector<IntVector> out;
  IntVector suffix;
  std::function<void(const SignedPermutation&)> rec = [&](const SignedPermutation& x) {
    if (x.length() == 0) {
      out.emplace_back(suffix.rbegin(), suffix.rend());
      return;
    }
    for (int i = 0; i < x.n(); ++i)
      if (x.has_right_descent(i)) {
        suffix.push_back(i);
        rec(x.times_generator(i));
        suffix.pop_back();
      }
  };
  rec(w);
  std::sort(out.begin(), out.end());
  return out;
}

Integer count_reduced_words(const SignedPermutation& w) {
  std::map<SignedPermutation, Integer> memo;
  std::function<Integer(const SignedPermutation&)> rec = [&](const SignedPermutation& x) -> Integer {
    if (x.length() == 0) return 1;
    if (auto it = memo.find(x); it != memo.end()) return it->second;
    Integer total = 0;
    for (int i = 0; i < x.n(); ++i)
      if (x.has_right_descent(i)) total += rec(x.times_generator(i));
    memo.emplace(x, total);
    return total;
  };
  return rec(w);
}

bool is_unimodal(const IntVector& word) {
  size_t i = 0;
  while (i + 1 < word.size() && word[i] > word[i + 1]) ++i;
  while (i + 1 < word.size() && word[i] < word[i + 1]) ++i;
  return i + 1 >= word.size();
}

int count_unimodal_words(const SignedPermutation& w) {
  int n = 0;
  for (const auto& word : reduced_words(w))
    if (is_unimodal(word)) ++n;
  return n;
}

NilCoxeterElement::NilCoxeterElement(int n, int nvars) : n_(n), nvars_(nvars) {}

NilCoxeterElement NilCoxeterElement::one(int n, int nvars) {
  NilCoxeterElement e(n, nvars);
  e.terms_.emplace(SignedPermutation::identity(n), Poly::constant(nvars, 1));
  return e;
}

Poly NilCoxeterElement::coeff(const SignedPermutation& w) const {
  auto it = terms_.find(w);
  return it == terms_.end() ? Poly(nvars_) : it->second;
}

namespace {

bool is_prefix(const SignedPermutation& v, const SignedPermutation& w) {
  return (v.inverse() * w).length() == w.length() - v.length();
}

}  // namespace

void NilCoxeterElement::times_factor(int i, const Poly& c, const std::optional<SignedPermutation>& target) {
  std::map<SignedPermutation, Poly> next = terms_;
  for (const auto& [v, p] : terms_) {
    SignedPermutation vs = v.times_generator(i);
    if (vs.length() != v.length() + 1) continue;
    if (target && !is_prefix(vs, *target)) continue;
    auto [it, inserted] = next.try_emplace(vs, p * c);
    if (!inserted) it->second += p * c;
  }
  terms_.clear();
  for (auto& [v, p] : next)
    if (!p.is_zero()) terms_.emplace(v, std::move(p));
}

NilCoxeterElement NilCoxeterElement::times_generator(int i) const {
  NilCoxeterElement r(n_, nvars_);
  for (const auto& [v, p] : terms_) {
    SignedPermutation vs = v.times_generator(i);
    if (vs.length() == v.length() + 1) r.terms_.emplace(vs, p);
  }
  return r;
}

void times_c_factor(NilCoxeterElement& e, int var, int nvars, const std::optional<SignedPermutation>& target) {
  const int n = e.n();
  Poly x = Poly::variable(nvars, var);
  for (int i = n - 1; i >= 1; --i) e.times_factor(i, x, target);
  e.times_factor(0, Integer(2) * x, target);
  for (int i = 1; i <= n - 1; ++i) e.times_factor(i, x, target);
}

void times_a_factor(NilCoxeterElement& e, int first, int var, int nvars,
                    const std::optional<SignedPermutation>& target) {
  Poly x = Poly::variable(nvars, var);
  for (int i = e.n() - 1; i >= first; --i) e.times_factor(i, x, target);
}

Poly stanley_c(const SignedPermutation& w, int m) {
  NilCoxeterElement e = NilCoxeterElement::one(w.n(), m);
  for (int v = 0; v < m; ++v) times_c_factor(e, v, m, w);
  return e.coeff(w);
}

Poly schubert_bh(const SignedPermutation& w, int m) {
  const int n = w.n(), nv = m + std::max(n - 1, 0);
  NilCoxeterElement e = NilCoxeterElement::one(n, nv);
  for (int v = 0; v < m; ++v) times_c_factor(e, v, nv, w);
  for (int j = 1; j <= n - 1; ++j) times_a_factor(e, j, m + j - 1, nv, w);
  return e.coeff(w);
}

Poly stanley_a(const SignedPermutation& w, int m) {
  if (!w.is_unsigned()) throw std::invalid_argument("stanley_a needs an unsigned permutation");
  NilCoxeterElement e = NilCoxeterElement::one(w.n(), m);
  for (int v = 0; v < m; ++v) times_a_factor(e, 1, v, m, w);
  return e.coeff(w);
}

std::vector<Partition> grassmannian_partitions(int k, int n) {
  if (k < 0 || k > n) throw std::invalid_argument("need 0 <= k <= n");
  std::vector<Partition> out;
  for (const auto& p : partitions_in_box(n - k, n + k))
    if (is_k_strict(p, k)) out.push_back(p);
  return out;
}

namespace {

void check_grassmannian_partition(const Partition& lambda, int k, int n) {
  if (k < 0 || k > n) throw std::invalid_argument("need 0 <= k <= n");
  if (!is_k_strict(lambda, k) || lambda.length() > n - k || lambda.row(1) > n + k)
    throw std::invalid_argument(lambda.to_string() + " is not in P(" + std::to_string(k) + "," + std::to_string(n) + ")");
}

std::vector<int> upper_parts(const Partition& lambda, int k) {
  std::vector<int> zeta;
  for (int p : lambda.parts())
    if (p > k) zeta.push_back(p - k);
  return zeta;
}

}  // namespace

SignedPermutation grassmannian_element(const Partition& lambda, int k, int n) {
  check_grassmannian_partition(lambda, k, n);
  const std::vector<int> zeta = upper_parts(lambda, k);
  std::set<int> zs(zeta.begin(), zeta.end()), used(zeta.begin(), zeta.end());
  std::vector<int> u(k + 1, 0);  // u[1] > u[2] > ... > u[k]
  for (int i = 1; i <= k; ++i) {
    const int target = lambda.col(i) - i + k + 1;
    int found = 0;
    for (int cand = 1; cand <= n; ++cand) {
      if (zs.count(cand)) continue;
      int above = 0;
      for (int z : zeta)
        if (z > cand) ++above;
      if (cand + above == target) {
        found = cand;
        break;
      }
    }
    if (!found) throw std::logic_error("no first-block entry for column " + std::to_string(i));
    u[i] = found;
    used.insert(found);
  }
  std::vector<int> w;
  for (int i = k; i >= 1; --i) w.push_back(u[i]);
  for (int z : zeta) w.push_back(-z);
  for (int v = 1; v <= n; ++v)
    if (!used.count(v)) w.push_back(v);
  return SignedPermutation(w);
}

SignedPermutation grassmannian_element_by_diagonals(const Partition& lambda, int k, int n) {
  check_grassmannian_partition(lambda, k, n);
  // Staircase with rows n, n-1, ..., 1 placed right of the first k columns;
  // diagonal s collects its boxes [r, c'] with r + c' = s (c' = c - k).
  auto outside = [&](int s) {
    int len = 0;
    for (int r = 1; r < s; ++r)
      if (s - r > std::max(lambda.row(r) - k, 0)) ++len;
    return len;
  };
  std::set<int> related;
  std::vector<int> first;
  for (int i = 1; i <= k; ++i) {
    int s = k + 2 + lambda.col(i) - i;
    related.insert(s);
    first.push_back(outside(s));
  }
  std::vector<int> last;
  for (int s = 2; s <= n + 1; ++s)
    if (!related.count(s) && outside(s) > 0) last.push_back(outside(s));
  std::sort(first.begin(), first.end());
  std::sort(last.begin(), last.end());
  std::vector<int> w = first;
  std::vector<int> zeta = upper_parts(lambda, k);
  for (int z : zeta) w.push_back(-z);
  w.insert(w.end(), last.begin(), last.end());
  return SignedPermutation(w);
}

Partition partition_of(const SignedPermutation& w, int k) {
  if (k < 0 || k > w.n()) throw std::invalid_argument("need 0 <= k <= n");
  if (!w.is_k_grassmannian(k)) throw std::invalid_argument(w.to_string() + " is not k-Grassmannian");
  std::vector<int> u(k + 1), zeta;
  for (int i = 1; i <= k; ++i) u[i] = w(k + 1 - i);
  for (int j = k + 1; j <= w.n(); ++j)
    if (w(j) < 0) zeta.push_back(-w(j));
  std::sort(zeta.begin(), zeta.end(), std::greater<>());
  std::vector<int> alpha(k + 1);
  for (int i = 1; i <= k; ++i) {
    int above = 0;
    for (int z : zeta)
      if (z > u[i]) ++above;
    alpha[i] = u[i] + i - k - 1 + above;
  }
  std::vector<int> parts;
  int rows = std::max(k >= 1 ? alpha[1] : 0, static_cast<int>(zeta.size()));
  for (int r = 1; r <= rows; ++r) {
    int left = 0;
    for (int i = 1; i <= k; ++i)
      if (alpha[i] >= r) ++left;
    parts.push_back(left + (r <= static_cast<int>(zeta.size()) ? zeta[r - 1] : 0));
  }
  return Partition(parts);
}

std::optional<SkewWitness> is_skew(const SignedPermutation& w, int k, int n) {
  SignedPermutation x = w.extended(n);
  const int l = x.length();
  for (const auto& lambda : grassmannian_partitions(k, n)) {
    if (lambda.size() < l) continue;
    SignedPermutation wl = grassmannian_element(lambda, k, n);
    SignedPermutation v = x.inverse() * wl;
    if (v.length() + l != wl.length() || !v.is_k_grassmannian(k)) continue;
    return SkewWitness{lambda, partition_of(v, k)};
  }
  return std::nullopt;
}

SignedPermutation skew_element(const Partition& lambda, const Partition& mu, int k, int n) {
  return grassmannian_element(lambda, k, n) * grassmannian_element(mu, k, n).inverse();
}

bool compatible_pair(const Partition& lambda, const Partition& mu, int k, int n) {
  return skew_element(lambda, mu, k, n).length() == lambda.size() - mu.size();
}

namespace {

// Non-identity v with l(v) + l(v^{-1} w) = l(w).
std::vector<SignedPermutation> left_prefixes(const SignedPermutation& w) {
  std::set<SignedPermutation> seen;
  std::vector<SignedPermutation> frontier{SignedPermutation::identity(w.n())};
  while (!frontier.empty()) {
    std::vector<SignedPermutation> next;
    for (const auto& v : frontier)
      for (int i = 0; i < w.n(); ++i) {
        SignedPermutation vs = v.times_generator(i);
        if (vs.length() != v.length() + 1 || !is_prefix(vs, w)) continue;
        if (seen.insert(vs).second) next.push_back(vs);
      }
    frontier = std::move(next);
  }
  return {seen.begin(), seen.end()};
}

}  // namespace

std::vector<UnimodalFactorization> unimodal_factorizations(const SignedPermutation& w, int r) {
  std::vector<UnimodalFactorization> out;
  std::map<SignedPermutation, int> unimodal_count;
  auto count = [&](const SignedPermutation& u) {
    auto it = unimodal_count.find(u);
    if (it == unimodal_count.end()) it = unimodal_count.emplace(u, count_unimodal_words(u)).first;
    return it->second;
  };
  UnimodalFactorization cur;
  std::function<void(const SignedPermutation&, int)> rec = [&](const SignedPermutation& x, int left) {
    if (left == 0) {
      if (x.length() == 0) out.push_back(cur);
      return;
    }
    if (x.length() < left) return;
    for (const auto& u : left_prefixes(x)) {
      int c = count(u);
      if (c == 0) continue;
      cur.factors.push_back(u);
      Integer saved = cur.unimodal_words;
      cur.unimodal_words *= c;
      rec(u.inverse() * x, left - 1);
      cur.unimodal_words = saved;
      cur.factors.pop_back();
    }
  };
  rec(w, r);
  return out;
}

std::vector<Partition> factorization_chain(const UnimodalFactorization& f, const Partition& mu, int k, int n) {
  const int r = static_cast<int>(f.factors.size());
  std::vector<Partition> chain{mu};
  SignedPermutation x = grassmannian_element(mu, k, n);
  for (int i = 1; i <= r; ++i) {
    x = f.factors[r - i].extended(n) * x;
    chain.push_back(partition_of(x, k));
  }
  return chain;
}

namespace {

std::vector<SignedPermutation> all_elements(int n) {
  std::vector<SignedPermutation> out;
  std::vector<int> perm(n);
  std::iota(perm.begin(), perm.end(), 1);
  do {
    for (unsigned mask = 0; mask < (1u << n); ++mask) {
      std::vector<int> w = perm;
      for (int i = 0; i < n; ++i)
        if (mask & (1u << i)) w[i] = -w[i];
      out.emplace_back(w);
    }
  } while (std::next_permutation(perm.begin(), perm.end()));
  return out;
}

NilCoxeterElement apply_word(NilCoxeterElement e, const IntVector& word) {
  for (int a : word) e = e.times_generator(a);
  return e;
}

}  // namespace

bool nilcoxeter_relations_hold(int n) {
  for (const auto& v : all_elements(n)) {
    // Start from u_v by following a reduced word.
    NilCoxeterElement e = apply_word(NilCoxeterElement::one(n, 1), reduced_words(v).front());
    for (int i = 0; i < n; ++i) {
      if (!apply_word(e, {i, i}).terms().empty()) return false;
      for (int j = i + 2; j < n; ++j)
        if (!(apply_word(e, {i, j}) == apply_word(e, {j, i}))) return false;
    }
    for (int i = 1; i + 1 < n; ++i)
      if (!(apply_word(e, {i, i + 1, i}) == apply_word(e, {i + 1, i, i + 1}))) return false;
    if (n >= 2 && !(apply_word(e, {0, 1, 0, 1}) == apply_word(e, {1, 0, 1, 0}))) return false;
  }
  return true;
}

bool c_factors_commute(int n) {
  NilCoxeterElement a = NilCoxeterElement::one(n, 2), b = NilCoxeterElement::one(n, 2);
  times_c_factor(a, 0, 2);
  times_c_factor(a, 1, 2);
  times_c_factor(b, 1, 2);
  times_c_factor(b, 0, 2);
  return a == b;
}

}  // namespace raising
