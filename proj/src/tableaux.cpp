#include "raising/tableaux.hpp"

#include <functional>
#include <map>
#include <stdexcept>

#include "raising/k_strips.hpp"

namespace raising {

IntVector KTableau::content() const {
  IntVector c(chain.size() > 0 ? chain.size() - 1 : 0, 0);
  for (size_t i = 1; i < chain.size(); ++i) c[i - 1] = chain[i].size() - chain[i - 1].size();
  return c;
}

std::string KTableau::to_string() const {
  std::string out;
  for (size_t r = 0; r < rows.size(); ++r) {
    if (r) out += "/";
    for (size_t c = 0; c < rows[r].size(); ++c) {
      if (c) out += " ";
      out += rows[r][c] == 0 ? "." : std::to_string(rows[r][c]);
    }
  }
  return out;
}

namespace {

std::vector<std::vector<int>> fill_rows(const std::vector<Partition>& chain) {
  const Partition& outer = chain.back();
  std::vector<std::vector<int>> rows(outer.length());
  for (int r = 1; r <= outer.length(); ++r) rows[r - 1].assign(outer.row(r), 0);
  for (size_t i = 1; i < chain.size(); ++i)
    for (const auto& b : skew_boxes(chain[i], chain[i - 1])) rows[b.row - 1][b.col - 1] = static_cast<int>(i);
  return rows;
}

}  // namespace

std::vector<KTableau> enumerate_k_tableaux(const Partition& lambda, const Partition& mu, int k, int m) {
  if (!is_k_strict(lambda, k) || !is_k_strict(mu, k)) throw std::invalid_argument("partitions must be k-strict");
  if (m < 0) throw std::invalid_argument("m must be nonnegative");
  std::vector<KTableau> out;
  if (!lambda.contains(mu)) return out;
  std::vector<Partition> chain(m + 1);
  chain[m] = lambda;
  std::function<void(int, int)> rec = [&](int level, int n) {
    if (level == 0) {
      if (chain[0] != mu) return;
      KTableau t;
      t.outer = lambda;
      t.inner = mu;
      t.k = k;
      t.chain = chain;
      t.n = n;
      t.rows = fill_rows(chain);
      out.push_back(std::move(t));
      return;
    }
    for (const auto& s : k_strips_below(chain[level], k)) {
      if (!s.mu.contains(mu)) continue;
      chain[level - 1] = s.mu;
      rec(level - 1, n + s.n);
    }
  };
  if (m == 0) {
    if (lambda == mu) rec(0, 0);
    return out;
  }
  rec(m, 0);
  return out;
}

Integer count_standard_k_tableaux(const Partition& lambda, const Partition& mu, int k) {
  if (!is_k_strict(lambda, k) || !is_k_strict(mu, k)) throw std::invalid_argument("partitions must be k-strict");
  if (!lambda.contains(mu)) return 0;
  std::map<Partition, Integer> memo;
  std::function<Integer(const Partition&)> rec = [&](const Partition& la) -> Integer {
    if (la == mu) return 1;
    if (auto it = memo.find(la); it != memo.end()) return it->second;
    Integer total = 0;
    for (const auto& s : k_strips_below(la, k))
      if (s.mu.size() + 1 == la.size() && s.mu.contains(mu)) total += rec(s.mu);
    memo.emplace(la, total);
    return total;
  };
  return rec(lambda);
}

Integer count_standard_k_tableaux_oracle(const Partition& lambda, const Partition& mu, int k) {
  if (!lambda.contains(mu)) return 0;
  std::map<Partition, Integer> memo;
  std::function<Integer(const Partition&)> rec = [&](const Partition& nu) -> Integer {
    if (nu == lambda) return 1;
    if (auto it = memo.find(nu); it != memo.end()) return it->second;
    Integer total = 0;
    for (int r = 1; r <= nu.length() + 1; ++r) {
      std::vector<int> parts = nu.parts();
      if (r > nu.length()) parts.push_back(0);
      parts[r - 1] += 1;
      if (r > 1 && parts[r - 1] > parts[r - 2]) continue;
      Partition next(parts);
      if (!lambda.contains(next) || !is_k_strict(next, k)) continue;
      if (is_k_horizontal_strip_oracle(next, nu, k)) total += rec(next);
    }
    memo.emplace(nu, total);
    return total;
  };
  return rec(mu);
}

std::string KBitableau::to_string() const {
  std::string out;
  for (size_t r = 0; r < rows.size(); ++r) {
    if (r) out += "/";
    for (size_t c = 0; c < rows[r].size(); ++c) {
      if (c) out += " ";
      out += std::to_string(rows[r][c].value) + (rows[r][c].marked ? "'" : "");
    }
  }
  return out;
}

namespace {

// Fillings of mu by 1..k, rows strictly increasing, columns weakly increasing.
std::vector<std::vector<std::vector<int>>> marked_fillings(const Partition& mu, int k) {
  std::vector<std::vector<std::vector<int>>> out;
  std::vector<std::vector<int>> rows(mu.length());
  for (int r = 1; r <= mu.length(); ++r) rows[r - 1].assign(mu.row(r), 0);
  std::vector<Box> order;
  for (int r = 1; r <= mu.length(); ++r)
    for (int c = 1; c <= mu.row(r); ++c) order.push_back({r, c});
  std::function<void(size_t)> rec = [&](size_t i) {
    if (i == order.size()) {
      out.push_back(rows);
      return;
    }
    auto [r, c] = order[i];
    int lo = 1;
    if (c > 1) lo = std::max(lo, rows[r - 1][c - 2] + 1);
    if (r > 1) lo = std::max(lo, rows[r - 2][c - 1]);
    for (int v = lo; v <= k; ++v) {
      rows[r - 1][c - 1] = v;
      rec(i + 1);
    }
    rows[r - 1][c - 1] = 0;
  };
  rec(0);
  return out;
}

}  // namespace

std::vector<KBitableau> enumerate_k_bitableaux(const Partition& lambda, int k, int max_unmarked) {
  if (!is_k_strict(lambda, k)) throw std::invalid_argument("lambda is not k-strict");
  std::vector<KBitableau> out;
  for (const auto& mu : subpartitions(lambda)) {
    if (mu.row(1) > k) continue;
    auto marked = marked_fillings(mu, k);
    if (marked.empty()) continue;
    auto unmarked = enumerate_k_tableaux(lambda, mu, k, max_unmarked);
    for (const auto& fill : marked)
      for (const auto& t : unmarked) {
        KBitableau b;
        b.shape = lambda;
        b.marked_shape = mu;
        b.n = t.n;
        b.x_content = t.content();
        b.y_content.assign(k, 0);
        b.rows.resize(lambda.length());
        for (int r = 1; r <= lambda.length(); ++r)
          for (int c = 1; c <= lambda.row(r); ++c) {
            if (mu.contains(Box{r, c})) {
              int v = fill[r - 1][c - 1];
              b.rows[r - 1].push_back({v, true});
              b.y_content[v - 1] += 1;
            } else {
              b.rows[r - 1].push_back({t.rows[r - 1][c - 1], false});
            }
          }
        out.push_back(std::move(b));
      }
  }
  return out;
}

}  // namespace raising
