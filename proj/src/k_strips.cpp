#include "raising/k_strips.hpp"

#include <algorithm>
#include <cstdlib>
#include <functional>
#include <map>
#include <mutex>
#include <set>
#include <stdexcept>

#include "raising/ring_element.hpp"

namespace raising {

bool k_related(const Box& left, const Box& right, int k) {
  return left.col <= k && right.col > k && left.col + right.col == 2 * k + 2 + left.row - right.row;
}

bool k_prime_related(const Box& a, const Box& b, int k) {
  return std::abs(2 * a.col - 2 * k - 1) + 2 * a.row == std::abs(2 * b.col - 2 * k - 1) + 2 * b.row;
}

namespace {

// Is there nu inside lambda with lambda/nu a vertical strip in columns <= k
// and mu/nu a horizontal strip?
bool has_intermediate(const Partition& lambda, const Partition& mu, int k) {
  const int rows = std::max(lambda.length(), mu.length());
  std::function<bool(int, int)> rec = [&](int r, int prev) -> bool {
    if (r > rows) return true;
    int options[2] = {lambda.row(r), lambda.row(r) - 1};
    int count = lambda.row(r) >= 1 && lambda.row(r) <= k ? 2 : 1;
    for (int o = 0; o < count; ++o) {
      int v = options[o];
      if (v > prev) continue;
      if (v > mu.row(r) || v < mu.row(r + 1)) continue;
      if (rec(r + 1, v)) return true;
    }
    return false;
  };
  return rec(1, lambda.row(1));
}

int components_avoiding_column(const std::vector<Box>& boxes, int column) {
  int n = 0;
  for (const auto& comp : box_components(boxes, true)) {
    bool touches = std::any_of(comp.begin(), comp.end(), [&](const Box& b) { return b.col == column; });
    if (!touches) ++n;
  }
  return n;
}

}  // namespace

std::optional<int> pieri_relation(const Partition& lambda, const Partition& mu, int k) {
  if (k < 0) throw std::invalid_argument("k must be nonnegative");
  if (!is_k_strict(mu, k)) return std::nullopt;
  if (!has_intermediate(lambda, mu, k)) return std::nullopt;

  std::vector<Box> right_added;
  for (int r = 1; r <= mu.length(); ++r)
    for (int c = std::max(lambda.row(r), k) + 1; c <= mu.row(r); ++c) right_added.push_back({r, c});

  std::set<Box> mentioned;
  for (int i = 1; i <= k; ++i) {
    const int a = lambda.col(i), b = mu.col(i);
    if (b > a) continue;
    if (b == a) {
      Box bottom{a, i};
      int hits = 0;
      for (const auto& x : right_added)
        if (k_related(bottom, x, k)) {
          ++hits;
          mentioned.insert(x);
        }
      if (hits > 1) return std::nullopt;
    } else {
      std::optional<int> row;
      for (int r = b; r <= a; ++r) {
        Box left{r, i};
        int hits = 0;
        for (const auto& x : right_added)
          if (k_related(left, x, k)) {
            ++hits;
            mentioned.insert(x);
            if (row && *row != x.row) return std::nullopt;
            row = x.row;
          }
        if (hits != 1) return std::nullopt;
      }
    }
  }
  std::vector<Box> free_boxes;
  for (const auto& x : right_added)
    if (!mentioned.count(x)) free_boxes.push_back(x);
  return components_avoiding_column(free_boxes, k + 1);
}

std::vector<StripTerm> pieri_targets(const Partition& lambda, int p, int k) {
  if (p < 0) throw std::invalid_argument("pieri_targets needs p >= 0");
  if (!is_k_strict(lambda, k)) throw std::invalid_argument("lambda is not k-strict");
  std::set<Partition> candidates;
  std::vector<int> removable;
  for (int r = 1; r <= lambda.length(); ++r)
    if (lambda.row(r) <= k) removable.push_back(r);
  const int total = lambda.size() + p;
  for (unsigned mask = 0; mask < (1u << removable.size()); ++mask) {
    std::vector<int> parts = lambda.parts();
    for (size_t b = 0; b < removable.size(); ++b)
      if (mask & (1u << b)) parts[removable[b] - 1] -= 1;
    bool ok = true;
    for (size_t i = 1; i < parts.size(); ++i)
      if (parts[i] > parts[i - 1]) ok = false;
    if (!ok) continue;
    Partition nu(parts);
    for (auto& mu : add_horizontal_strips(nu, total - nu.size()))
      if (is_k_strict(mu, k)) candidates.insert(mu);
  }
  std::vector<StripTerm> out;
  for (const auto& mu : candidates)
    if (auto n = pieri_relation(lambda, mu, k)) out.push_back({mu, *n});
  std::sort(out.begin(), out.end(),
            [](const StripTerm& a, const StripTerm& b) { return IndexOrder{}(a.mu.parts(), b.mu.parts()); });
  return out;
}

StripAnalysis analyze_k_strip(const Partition& lambda, const Partition& mu, int k) {
  if (k < 0) throw std::invalid_argument("k must be nonnegative");
  if (!lambda.contains(mu)) throw std::invalid_argument("mu is not contained in lambda");
  StripAnalysis out;
  const auto skew = skew_boxes(lambda, mu);

  std::set<int> right_cols;
  std::vector<Box> left;
  for (const auto& b : skew) {
    if (!in_rim(lambda, b)) {
      out.failure = "box outside the rim";
      return out;
    }
    if (b.col > k) {
      if (!right_cols.insert(b.col).second) {
        out.failure = "right boxes are not a horizontal strip";
        return out;
      }
    } else {
      left.push_back(b);
    }
  }

  // Right boxes of mu, row 0 included, that are bottom boxes of lambda in
  // their column. Row-0 boxes past column 2k + l(lambda) cannot be related
  // to a left box, so one representative of that tail suffices.
  const int tail = std::max(lambda.row(1), 2 * k + lambda.length()) + 1;
  std::vector<Box> candidates;
  for (int c = k + 1; c <= tail; ++c) {
    int r = lambda.col(c);
    if (r <= mu.col(c)) candidates.push_back({r, c});
  }
  std::map<Box, std::vector<Box>> partners;  // left box -> R boxes
  for (const auto& x : candidates) {
    bool related = false;
    for (const auto& l : left)
      if (k_prime_related(l, x, k)) {
        related = true;
        partners[l].push_back(x);
      }
    (related ? out.r_boxes : out.a_boxes).push_back(x);
  }
  for (size_t i = 0; i < out.r_boxes.size(); ++i)
    for (size_t j = i + 1; j < out.r_boxes.size(); ++j)
      if (k_prime_related(out.r_boxes[i], out.r_boxes[j], k)) {
        out.failure = "two related boxes in R";
        return out;
      }
  std::map<int, std::vector<Box>> by_column;
  for (const auto& l : left) by_column[l.col].push_back(l);
  for (const auto& [c, boxes] : by_column) {
    if (boxes.size() < 2) continue;
    std::optional<int> row;
    for (const auto& l : boxes) {
      const auto& ps = partners[l];
      if (ps.size() != 1 || (row && *row != ps[0].row)) {
        out.failure = "column of the strip not matched by one row of R";
        return out;
      }
      row = ps[0].row;
    }
  }
  out.is_strip = true;
  out.n = components_avoiding_column(out.a_boxes, k + 1);
  return out;
}

bool is_k_horizontal_strip(const Partition& lambda, const Partition& mu, int k) {
  if (!is_k_strict(lambda, k) || !is_k_strict(mu, k)) throw std::invalid_argument("partitions must be k-strict");
  return analyze_k_strip(lambda, mu, k).is_strip;
}

int n_strip(const Partition& lambda, const Partition& mu, int k) {
  if (!is_k_strict(lambda, k) || !is_k_strict(mu, k)) throw std::invalid_argument("partitions must be k-strict");
  auto a = analyze_k_strip(lambda, mu, k);
  if (!a.is_strip) throw std::invalid_argument("not a k-horizontal strip: " + a.failure);
  return a.n;
}

namespace {

std::optional<int> oracle_relation(const Partition& lambda, const Partition& mu, int k) {
  if (!lambda.contains(mu)) throw std::invalid_argument("mu is not contained in lambda");
  int p = std::max(lambda.row(1) + 1, lambda.length() + 2 * k);
  int r = lambda.size() - mu.size();
  return pieri_relation(lambda, mu.with_first_row(p + r), k);
}

}  // namespace

int n_strip_oracle(const Partition& lambda, const Partition& mu, int k) {
  auto n = oracle_relation(lambda, mu, k);
  if (!n) throw std::invalid_argument("not a k-horizontal strip");
  return *n;
}

bool is_k_horizontal_strip_oracle(const Partition& lambda, const Partition& mu, int k) {
  return oracle_relation(lambda, mu, k).has_value();
}

std::vector<StripTerm> k_strips_below(const Partition& lambda, int k) {
  static std::mutex mutex;
  static std::map<std::pair<Partition, int>, std::vector<StripTerm>> cache;
  {
    std::lock_guard<std::mutex> lock(mutex);
    auto it = cache.find({lambda, k});
    if (it != cache.end()) return it->second;
  }
  std::vector<StripTerm> out;
  for (const auto& mu : subpartitions(lambda)) {
    if (!is_k_strict(mu, k)) continue;
    auto a = analyze_k_strip(lambda, mu, k);
    if (a.is_strip) out.push_back({mu, a.n});
  }
  std::lock_guard<std::mutex> lock(mutex);
  cache.emplace(std::make_pair(lambda, k), out);
  return out;
}

}  // namespace raising
