#include "raising/raising_operator.hpp"

#include <algorithm>
#include <cstdlib>
#include <functional>
#include <map>
#include <mutex>
#include <stdexcept>
#include <tuple>

namespace raising {

TPoly factor_coefficient(Factor f, int n) {
  if (n < 0) return {};
  if (n == 0) return 1;
  switch (f) {
    case Factor::One: return {};
    case Factor::OneMinusR: return n == 1 ? TPoly(-1) : TPoly();
    case Factor::OnePlusR: return n == 1 ? TPoly(1) : TPoly();
    case Factor::HallLittlewood:
      // 1 + sum_{n>=1} (t-1) t^{n-1} R^n
      return TPoly::monomial(1, n) - TPoly::monomial(1, n - 1);
    case Factor::HallLittlewoodInverse: return TPoly(std::vector<Integer>{1, -1});
    case Factor::InverseOnePlusR: return n % 2 ? TPoly(-1) : TPoly(1);
    case Factor::TypeC: return n % 2 ? TPoly(-2) : TPoly(2);
    case Factor::InverseOneMinusR: return 1;
  }
  return {};
}

bool factor_uses_t(Factor f) { return f == Factor::HallLittlewood || f == Factor::HallLittlewoodInverse; }

namespace {

int max_power(Factor f) {
  switch (f) {
    case Factor::One: return 0;
    case Factor::OneMinusR:
    case Factor::OnePlusR: return 1;
    default: return -1;  // unbounded
  }
}

}  // namespace

FactorSpec::FactorSpec(int length, Factor fill) : length_(length), kinds_(length * length, fill) {
  if (length < 0) throw std::invalid_argument("negative operator length");
}

FactorSpec FactorSpec::type_c(int length, const PairSet& d) {
  FactorSpec s(length, Factor::OneMinusR);
  for (auto [i, j] : d)
    if (j <= length) s.set(i, j, Factor::TypeC);
  return s;
}

Factor FactorSpec::at(int i, int j) const {
  if (i < 1 || j <= i || j > length_) throw std::out_of_range("factor index out of range");
  return kinds_[(i - 1) * length_ + (j - 1)];
}

void FactorSpec::set(int i, int j, Factor f) {
  if (i < 1 || j <= i || j > length_) throw std::out_of_range("factor index out of range");
  kinds_[(i - 1) * length_ + (j - 1)] = f;
}

bool FactorSpec::uses_t() const {
  for (int j = 2; j <= length_; ++j)
    for (int i = 1; i < j; ++i)
      if (factor_uses_t(at(i, j))) return true;
  return false;
}

namespace {

using MemoKey = std::tuple<FactorSpec, IntVector, Basis, std::optional<int>>;

struct Memo {
  std::mutex mutex;
  std::map<MemoKey, RingElement> table;
  size_t limit = 0;
  bool initialized = false;

  void init() {
    if (initialized) return;
    initialized = true;
    limit = 200000;
    if (const char* env = std::getenv("RAISING_MEMO_LIMIT")) limit = std::strtoull(env, nullptr, 10);
  }
};

Memo& memo() {
  static Memo m;
  return m;
}

RingElement expand_uncached(const FactorSpec& spec, const IntVector& alpha, Basis target, std::optional<int> k) {
  const int len = spec.length();
  IntVector start = alpha;
  start.resize(len, 0);
  std::map<IntVector, TPoly> states{{start, TPoly(1)}};

  // Column j only loses boxes to rows above it, and later columns never
  // touch it again, so once processed its tail can be stored sorted.
  for (int j = len; j >= 2; --j) {
    std::map<IntVector, TPoly> next;
    for (const auto& [vec, coeff] : states) {
      int budget = vec[j - 1];
      if (budget < 0) continue;
      IntVector cur = vec;
      std::function<void(int, int, const TPoly&)> rec = [&](int i, int remaining, const TPoly& c) {
        if (i == j) {
          IntVector out = cur;
          out[j - 1] = remaining;
          std::sort(out.begin() + (j - 1), out.end(), std::greater<>());
          auto [it, inserted] = next.try_emplace(std::move(out), c);
          if (!inserted) {
            it->second += c;
          }
          return;
        }
        Factor f = spec.at(i, j);
        int cap = max_power(f);
        int top = cap < 0 ? remaining : std::min(cap, remaining);
        for (int n = 0; n <= top; ++n) {
          TPoly fc = factor_coefficient(f, n);
          if (fc.is_zero()) continue;
          cur[i - 1] += n;
          rec(i + 1, remaining - n, n == 0 ? c : c * fc);
          cur[i - 1] -= n;
        }
      };
      rec(1, budget, coeff);
    }
    states.clear();
    for (auto& [v, c] : next)
      if (!c.is_zero()) states.emplace(v, std::move(c));
  }

  RingElement out(target, k);
  for (const auto& [vec, c] : states) out.add(vec, c);
  return out;
}

}  // namespace

RingElement expand_raising(const FactorSpec& spec, const IntVector& alpha, Basis target, std::optional<int> k) {
  if (!is_monomial_basis(target)) throw std::invalid_argument("expand_raising target must be a monomial basis");
  if (spec.length() < vector_length(alpha))
    throw std::invalid_argument("operator length " + std::to_string(spec.length()) + " is shorter than the index");
  if (spec.uses_t() && !basis_allows_t(target))
    throw std::invalid_argument("t-dependent operator applied in a t-free basis");

  Memo& m = memo();
  MemoKey key{spec, alpha, target, k};
  {
    std::lock_guard<std::mutex> lock(m.mutex);
    m.init();
    if (m.limit > 0) {
      auto it = m.table.find(key);
      if (it != m.table.end()) return it->second;
    }
  }
  RingElement result = expand_uncached(spec, alpha, target, k);
  {
    std::lock_guard<std::mutex> lock(m.mutex);
    if (m.limit > 0) {
      if (m.table.size() >= m.limit) m.table.clear();
      m.table.emplace(std::move(key), result);
    }
  }
  return result;
}

void set_raising_memo_limit(size_t entries) {
  Memo& m = memo();
  std::lock_guard<std::mutex> lock(m.mutex);
  m.init();
  m.limit = entries;
  if (entries == 0) m.table.clear();
}

size_t raising_memo_limit() {
  Memo& m = memo();
  std::lock_guard<std::mutex> lock(m.mutex);
  m.init();
  return m.limit;
}

size_t raising_memo_size() {
  Memo& m = memo();
  std::lock_guard<std::mutex> lock(m.mutex);
  return m.table.size();
}

void clear_raising_memo() {
  Memo& m = memo();
  std::lock_guard<std::mutex> lock(m.mutex);
  m.table.clear();
}

}  // namespace raising
