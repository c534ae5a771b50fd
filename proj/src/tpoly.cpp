#include "raising/tpoly.hpp"

#include <algorithm>

namespace raising {

TPoly::TPoly(long c) {
  if (c != 0) c_.emplace_back(c);
}

TPoly::TPoly(const Integer& c) {
  if (c != 0) c_.push_back(c);
}

TPoly::TPoly(std::vector<Integer> coeffs) : c_(std::move(coeffs)) { trim(); }

TPoly TPoly::t() { return monomial(1, 1); }

TPoly TPoly::monomial(const Integer& c, int degree) {
  TPoly p;
  if (c == 0) return p;
  p.c_.assign(degree + 1, Integer(0));
  p.c_[degree] = c;
  return p;
}

Integer TPoly::coeff(int d) const {
  if (d < 0 || d >= static_cast<int>(c_.size())) return 0;
  return c_[d];
}

void TPoly::trim() {
  while (!c_.empty() && c_.back() == 0) c_.pop_back();
}

TPoly& TPoly::operator+=(const TPoly& o) {
  if (o.c_.size() > c_.size()) c_.resize(o.c_.size(), Integer(0));
  for (size_t i = 0; i < o.c_.size(); ++i) c_[i] += o.c_[i];
  trim();
  return *this;
}

TPoly& TPoly::operator-=(const TPoly& o) {
  if (o.c_.size() > c_.size()) c_.resize(o.c_.size(), Integer(0));
  for (size_t i = 0; i < o.c_.size(); ++i) c_[i] -= o.c_[i];
  trim();
  return *this;
}

TPoly operator*(const TPoly& a, const TPoly& b) {
  if (a.is_zero() || b.is_zero()) return {};
  std::vector<Integer> r(a.c_.size() + b.c_.size() - 1, Integer(0));
  for (size_t i = 0; i < a.c_.size(); ++i) {
    if (a.c_[i] == 0) continue;
    for (size_t j = 0; j < b.c_.size(); ++j) r[i + j] += a.c_[i] * b.c_[j];
  }
  return TPoly(std::move(r));
}

TPoly& TPoly::operator*=(const TPoly& o) { return *this = *this * o; }

TPoly TPoly::operator-() const {
  TPoly r = *this;
  for (auto& x : r.c_) x = -x;
  return r;
}

std::strong_ordering TPoly::operator<=>(const TPoly& o) const {
  if (c_.size() != o.c_.size()) return c_.size() <=> o.c_.size();
  for (size_t i = c_.size(); i-- > 0;) {
    int s = cmp(c_[i], o.c_[i]);
    if (s != 0) return s < 0 ? std::strong_ordering::less : std::strong_ordering::greater;
  }
  return std::strong_ordering::equal;
}

TPoly TPoly::pow(unsigned n) const {
  TPoly r(1), b = *this;
  while (n) {
    if (n & 1) r *= b;
    n >>= 1;
    if (n) b *= b;
  }
  return r;
}

Integer TPoly::evaluate(const Integer& t) const {
  Integer r = 0;
  for (size_t i = c_.size(); i-- > 0;) r = r * t + c_[i];
  return r;
}

std::string TPoly::to_string() const {
  if (c_.empty()) return "0";
  std::string out;
  bool first = true;
  for (size_t d = 0; d < c_.size(); ++d) {
    const Integer& c = c_[d];
    if (c == 0) continue;
    Integer a = abs(c);
    if (first) {
      if (c < 0) out += "-";
    } else {
      out += c < 0 ? " - " : " + ";
    }
    first = false;
    if (d == 0) {
      out += a.get_str();
      continue;
    }
    if (a != 1) out += a.get_str();
    out += "t";
    if (d > 1) out += "^" + std::to_string(d);
  }
  return out;
}

}  // namespace raising
