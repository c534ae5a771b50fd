#include "raising/partition.hpp"

#include <algorithm>
#include <charconv>
#include <functional>
#include <numeric>
#include <set>
#include <stdexcept>

namespace raising {

Partition::Partition(std::vector<int> parts) : p_(std::move(parts)) {
  while (!p_.empty() && p_.back() == 0) p_.pop_back();
  for (size_t i = 0; i < p_.size(); ++i) {
    if (p_[i] < 0) throw std::invalid_argument("partition has a negative part");
    if (i > 0 && p_[i] > p_[i - 1]) throw std::invalid_argument("partition parts must be weakly decreasing");
  }
}

Partition Partition::sorted(std::vector<int> entries) {
  std::sort(entries.begin(), entries.end(), std::greater<>());
  return Partition(std::move(entries));
}

int Partition::size() const { return std::accumulate(p_.begin(), p_.end(), 0); }

int Partition::col(int c) const {
  if (c < 1) return 0;
  int n = 0;
  while (n < length() && p_[n] >= c) ++n;
  return n;
}

bool Partition::contains(const Partition& mu) const {
  if (mu.length() > length()) return false;
  for (int i = 0; i < mu.length(); ++i)
    if (mu.p_[i] > p_[i]) return false;
  return true;
}

int Partition::multiplicity(int part) const {
  return static_cast<int>(std::count(p_.begin(), p_.end(), part));
}

Partition Partition::conjugate() const {
  std::vector<int> c;
  for (int j = 1; j <= row(1); ++j) c.push_back(col(j));
  return Partition(std::move(c));
}

Partition Partition::with_first_row(int p) const {
  std::vector<int> v{p};
  v.insert(v.end(), p_.begin(), p_.end());
  return Partition(std::move(v));
}

std::string Partition::to_string() const { return "(" + format_int_list(p_) + ")"; }

IntVector parse_int_list(std::string_view text) {
  IntVector out;
  std::string_view s = text;
  auto strip = [](std::string_view v) {
    while (!v.empty() && (v.front() == ' ' || v.front() == '(' || v.front() == '[')) v.remove_prefix(1);
    while (!v.empty() && (v.back() == ' ' || v.back() == ')' || v.back() == ']')) v.remove_suffix(1);
    return v;
  };
  s = strip(s);
  if (s.empty()) return out;
  while (true) {
    size_t comma = s.find(',');
    std::string_view tok = strip(s.substr(0, comma));
    if (!tok.empty() && tok.front() == '+') tok.remove_prefix(1);
    int value = 0;
    auto [ptr, ec] = std::from_chars(tok.data(), tok.data() + tok.size(), value);
    if (tok.empty() || ec != std::errc() || ptr != tok.data() + tok.size())
      throw std::invalid_argument("bad integer list: '" + std::string(text) + "'");
    out.push_back(value);
    if (comma == std::string_view::npos) break;
    s = s.substr(comma + 1);
  }
  return out;
}

std::string format_int_list(const IntVector& v) {
  std::string out;
  for (size_t i = 0; i < v.size(); ++i) {
    if (i) out += ",";
    out += std::to_string(v[i]);
  }
  return out;
}

bool is_strict(const Partition& lambda) {
  const auto& p = lambda.parts();
  for (size_t i = 1; i < p.size(); ++i)
    if (p[i] == p[i - 1]) return false;
  return true;
}

bool is_k_strict(const Partition& lambda, int k) {
  const auto& p = lambda.parts();
  for (size_t i = 1; i < p.size(); ++i)
    if (p[i] == p[i - 1] && p[i] > k) return false;
  return true;
}

int vector_sum(const IntVector& v) { return std::accumulate(v.begin(), v.end(), 0); }

int vector_length(const IntVector& v) {
  int l = static_cast<int>(v.size());
  while (l > 0 && v[l - 1] == 0) --l;
  return l;
}

IntVector trimmed(IntVector v) {
  v.resize(vector_length(v));
  return v;
}

bool dominates(const IntVector& a, const IntVector& b) {
  if (vector_sum(a) != vector_sum(b)) throw std::invalid_argument("dominance needs vectors of equal size");
  size_t n = std::max(a.size(), b.size());
  long sa = 0, sb = 0;
  for (size_t i = 0; i < n; ++i) {
    sa += i < a.size() ? a[i] : 0;
    sb += i < b.size() ? b[i] : 0;
    if (sa < sb) return false;
  }
  return true;
}

namespace {

void partitions_rec(int remaining, int max_part, int max_length, std::vector<int>& cur,
                    std::vector<Partition>& out) {
  if (remaining == 0) {
    out.emplace_back(cur);
    return;
  }
  if (max_length == 0) return;
  for (int part = std::min(remaining, max_part); part >= 1; --part) {
    cur.push_back(part);
    partitions_rec(remaining - part, part, max_length - 1, cur, out);
    cur.pop_back();
  }
}

}  // namespace

std::vector<Partition> partitions_of(int n, int max_part, int max_length) {
  std::vector<Partition> out;
  if (n < 0) return out;
  std::vector<int> cur;
  partitions_rec(n, max_part < 0 ? n : max_part, max_length < 0 ? n + 1 : max_length, cur, out);
  return out;
}

std::vector<Partition> strict_partitions_of(int n, int max_length) {
  std::vector<Partition> out;
  for (auto& p : partitions_of(n, -1, max_length))
    if (is_strict(p)) out.push_back(p);
  return out;
}

std::vector<Partition> k_strict_partitions_of(int n, int k, int max_length) {
  std::vector<Partition> out;
  for (auto& p : partitions_of(n, -1, max_length))
    if (is_k_strict(p, k)) out.push_back(p);
  return out;
}

std::vector<Partition> partitions_in_box(int rows, int cols) {
  std::vector<Partition> out;
  for (int n = 0; n <= rows * cols; ++n)
    for (auto& p : partitions_of(n, cols, rows)) out.push_back(p);
  return out;
}

std::vector<Partition> subpartitions(const Partition& lambda) {
  std::vector<Partition> out;
  std::vector<int> cur;
  std::function<void(int, int)> rec = [&](int r, int bound) {
    if (r > lambda.length()) {
      out.emplace_back(cur);
      return;
    }
    for (int v = std::min(bound, lambda.row(r)); v >= 0; --v) {
      cur.push_back(v);
      rec(r + 1, v);
      cur.pop_back();
    }
  };
  rec(1, lambda.row(1));
  std::sort(out.begin(), out.end(), [](const Partition& a, const Partition& b) {
    if (a.size() != b.size()) return a.size() < b.size();
    return a.parts() > b.parts();
  });
  return out;
}

std::vector<IntVector> weak_compositions(int n, int parts) {
  std::vector<IntVector> out;
  if (parts == 0) {
    if (n == 0) out.emplace_back();
    return out;
  }
  IntVector cur(parts, 0);
  std::function<void(int, int)> rec = [&](int i, int remaining) {
    if (i == parts - 1) {
      cur[i] = remaining;
      out.push_back(cur);
      return;
    }
    for (int v = remaining; v >= 0; --v) {
      cur[i] = v;
      rec(i + 1, remaining - v);
    }
  };
  rec(0, n);
  return out;
}

std::vector<Box> skew_boxes(const Partition& lambda, const Partition& mu) {
  std::vector<Box> out;
  for (int r = 1; r <= lambda.length(); ++r)
    for (int c = mu.row(r) + 1; c <= lambda.row(r); ++c) out.push_back({r, c});
  return out;
}

std::string to_string(StripType t) {
  switch (t) {
    case StripType::Horizontal: return "horizontal";
    case StripType::Vertical: return "vertical";
    case StripType::Both: return "both";
    case StripType::Neither: return "neither";
  }
  return "neither";
}

bool is_horizontal_strip(const Partition& lambda, const Partition& mu) {
  if (!lambda.contains(mu)) return false;
  for (int r = 2; r <= lambda.length(); ++r)
    if (lambda.row(r) > mu.row(r - 1)) return false;
  return true;
}

bool is_vertical_strip(const Partition& lambda, const Partition& mu) {
  if (!lambda.contains(mu)) return false;
  for (int r = 1; r <= lambda.length(); ++r)
    if (lambda.row(r) - mu.row(r) > 1) return false;
  return true;
}

StripType strip_type(const Partition& lambda, const Partition& mu) {
  if (!lambda.contains(mu)) throw std::invalid_argument("strip_type: mu is not contained in lambda");
  bool h = is_horizontal_strip(lambda, mu), v = is_vertical_strip(lambda, mu);
  if (h && v) return StripType::Both;
  if (h) return StripType::Horizontal;
  if (v) return StripType::Vertical;
  return StripType::Neither;
}

std::vector<Partition> add_horizontal_strips(const Partition& nu, int size) {
  std::vector<Partition> out;
  if (size < 0) return out;
  int len = nu.length() + 1;
  std::vector<int> cur(len, 0);
  std::function<void(int, int)> rec = [&](int r, int remaining) {
    if (r > len) {
      if (remaining == 0) out.emplace_back(cur);
      return;
    }
    int lo = nu.row(r);
    int hi = r == 1 ? lo + remaining : std::min(nu.row(r - 1), lo + remaining);
    for (int v = hi; v >= lo; --v) {
      cur[r - 1] = v;
      rec(r + 1, remaining - (v - lo));
    }
  };
  rec(1, size);
  return out;
}

std::vector<Partition> remove_horizontal_strips(const Partition& lambda) {
  std::vector<Partition> out;
  for (auto& mu : subpartitions(lambda))
    if (is_horizontal_strip(lambda, mu)) out.push_back(mu);
  return out;
}

std::vector<Partition> remove_vertical_strips(const Partition& lambda) {
  std::vector<Partition> out;
  for (auto& mu : subpartitions(lambda))
    if (is_vertical_strip(lambda, mu)) out.push_back(mu);
  return out;
}

bool in_rim(const Partition& lambda, const Box& b) {
  return lambda.contains(b) && !lambda.contains(Box{b.row + 1, b.col + 1});
}

std::vector<Box> shifted_boxes(const Partition& lambda) {
  std::vector<Box> out;
  for (int r = 1; r <= lambda.length(); ++r)
    for (int c = r; c < r + lambda.row(r); ++c) out.push_back({r, c});
  return out;
}

std::vector<Box> shifted_skew_boxes(const Partition& lambda, const Partition& mu) {
  std::vector<Box> out;
  for (int r = 1; r <= lambda.length(); ++r)
    for (int c = r + mu.row(r); c < r + lambda.row(r); ++c) out.push_back({r, c});
  return out;
}

std::vector<std::vector<Box>> box_components(const std::vector<Box>& boxes, bool corners) {
  std::set<Box> remaining(boxes.begin(), boxes.end());
  std::vector<std::vector<Box>> out;
  while (!remaining.empty()) {
    std::vector<Box> comp, stack{*remaining.begin()};
    remaining.erase(remaining.begin());
    while (!stack.empty()) {
      Box b = stack.back();
      stack.pop_back();
      comp.push_back(b);
      for (int dr = -1; dr <= 1; ++dr)
        for (int dc = -1; dc <= 1; ++dc) {
          if (dr == 0 && dc == 0) continue;
          if (!corners && dr != 0 && dc != 0) continue;
          auto it = remaining.find(Box{b.row + dr, b.col + dc});
          if (it != remaining.end()) {
            stack.push_back(*it);
            remaining.erase(it);
          }
        }
    }
    std::sort(comp.begin(), comp.end());
    out.push_back(std::move(comp));
  }
  return out;
}

}  // namespace raising
