#include "raising/polynomial.hpp"

#include <numeric>
#include <stdexcept>

namespace raising {

Poly::Poly(int nvars, int max_degree) : nvars_(nvars), max_degree_(max_degree) {}

Poly Poly::constant(int nvars, const Integer& c, int max_degree) {
  Poly p(nvars, max_degree);
  p.add(Exponent(nvars, 0), c);
  return p;
}

Poly Poly::variable(int nvars, int var, int max_degree) {
  Exponent e(nvars, 0);
  e.at(var) = 1;
  return monomial(nvars, e, 1, max_degree);
}

Poly Poly::monomial(int nvars, const Exponent& e, const Integer& c, int max_degree) {
  Poly p(nvars, max_degree);
  p.add(e, c);
  return p;
}

Integer Poly::coeff(const Exponent& e) const {
  auto it = terms_.find(e);
  return it == terms_.end() ? Integer(0) : it->second;
}

int Poly::total_degree() const {
  int d = -1;
  for (const auto& [e, c] : terms_) d = std::max(d, std::accumulate(e.begin(), e.end(), 0));
  return d;
}

bool Poly::is_homogeneous() const {
  int d = -1;
  for (const auto& [e, c] : terms_) {
    int s = std::accumulate(e.begin(), e.end(), 0);
    if (d >= 0 && s != d) return false;
    d = s;
  }
  return true;
}

bool Poly::nonnegative() const {
  for (const auto& [e, c] : terms_)
    if (c < 0) return false;
  return true;
}

void Poly::add(const Exponent& e, const Integer& c) {
  if (static_cast<int>(e.size()) != nvars_) throw std::invalid_argument("exponent length mismatch");
  if (c == 0) return;
  if (max_degree_ >= 0 && std::accumulate(e.begin(), e.end(), 0) > max_degree_) return;
  auto [it, inserted] = terms_.try_emplace(e, c);
  if (!inserted) {
    it->second += c;
    if (it->second == 0) terms_.erase(it);
  }
}

Poly& Poly::operator+=(const Poly& o) {
  if (o.nvars_ != nvars_) throw std::invalid_argument("polynomials in different rings");
  for (const auto& [e, c] : o.terms_) add(e, c);
  return *this;
}

Poly& Poly::operator-=(const Poly& o) {
  if (o.nvars_ != nvars_) throw std::invalid_argument("polynomials in different rings");
  for (const auto& [e, c] : o.terms_) add(e, -c);
  return *this;
}

Poly& Poly::operator*=(const Integer& c) {
  if (c == 0) terms_.clear();
  for (auto& [e, x] : terms_) x *= c;
  return *this;
}

Poly operator*(const Poly& a, const Poly& b) {
  if (a.nvars_ != b.nvars_) throw std::invalid_argument("polynomials in different rings");
  int cap = a.max_degree_;
  if (b.max_degree_ >= 0 && (cap < 0 || b.max_degree_ < cap)) cap = b.max_degree_;
  Poly r(a.nvars_, cap);
  Exponent e(a.nvars_);
  for (const auto& [ea, ca] : a.terms_)
    for (const auto& [eb, cb] : b.terms_) {
      for (int i = 0; i < a.nvars_; ++i) e[i] = ea[i] + eb[i];
      r.add(e, ca * cb);
    }
  return r;
}

Poly Poly::operator-() const {
  Poly r = *this;
  for (auto& [e, c] : r.terms_) c = -c;
  return r;
}

Poly Poly::pow(unsigned n) const {
  Poly r = constant(nvars_, 1, max_degree_);
  for (unsigned i = 0; i < n; ++i) r = r * *this;
  return r;
}

Poly Poly::embed(int new_nvars, const std::vector<int>& map) const {
  if (static_cast<int>(map.size()) != nvars_) throw std::invalid_argument("embed map has the wrong size");
  Poly r(new_nvars, max_degree_);
  for (const auto& [e, c] : terms_) {
    Exponent f(new_nvars, 0);
    for (int i = 0; i < nvars_; ++i) f.at(map[i]) += e[i];
    r.add(f, c);
  }
  return r;
}

Poly Poly::drop_variables(int first, int count) const {
  Poly r(nvars_ - count, max_degree_);
  for (const auto& [e, c] : terms_) {
    bool vanishes = false;
    for (int i = first; i < first + count; ++i)
      if (e[i] != 0) vanishes = true;
    if (vanishes) continue;
    Exponent f;
    for (int i = 0; i < nvars_; ++i)
      if (i < first || i >= first + count) f.push_back(e[i]);
    r.add(f, c);
  }
  return r;
}

Poly Poly::substitute(int var, const Integer& value) const {
  Poly r(nvars_, max_degree_);
  for (const auto& [e, c] : terms_) {
    Exponent f = e;
    Integer v;
    mpz_pow_ui(v.get_mpz_t(), value.get_mpz_t(), e[var]);
    f[var] = 0;
    r.add(f, c * v);
  }
  return r;
}

Poly Poly::coefficient_of_power(int var, int d) const {
  Poly r(nvars_, max_degree_);
  for (const auto& [e, c] : terms_) {
    if (e[var] != d) continue;
    Exponent f = e;
    f[var] = 0;
    r.add(f, c);
  }
  return r;
}

std::string Poly::to_string(const std::vector<std::string>& names) const {
  if (terms_.empty()) return "0";
  std::string out;
  bool first = true;
  // Highest exponents first reads more naturally.
  for (auto it = terms_.rbegin(); it != terms_.rend(); ++it) {
    const auto& [e, c] = *it;
    std::string mono;
    for (int i = 0; i < nvars_; ++i) {
      if (e[i] == 0) continue;
      if (!mono.empty()) mono += "*";
      mono += i < static_cast<int>(names.size()) ? names[i] : "z" + std::to_string(i + 1);
      if (e[i] > 1) mono += "^" + std::to_string(e[i]);
    }
    Integer a = abs(c);
    if (first)
      out += c < 0 ? "-" : "";
    else
      out += c < 0 ? " - " : " + ";
    first = false;
    if (mono.empty())
      out += a.get_str();
    else if (a == 1)
      out += mono;
    else
      out += a.get_str() + "*" + mono;
  }
  return out;
}

std::vector<std::string> variable_names(int m, const std::vector<std::string>& extra) {
  std::vector<std::string> out = variable_names("x", m);
  out.insert(out.end(), extra.begin(), extra.end());
  return out;
}

std::vector<std::string> variable_names(const std::string& prefix, int m) {
  std::vector<std::string> out;
  for (int i = 1; i <= m; ++i) out.push_back(prefix + std::to_string(i));
  return out;
}

namespace {

std::vector<Poly> series_product(const std::vector<Poly>& a, const std::vector<Poly>& b, int cap, int nvars) {
  std::vector<Poly> r(cap + 1, Poly(nvars));
  for (int i = 0; i <= cap; ++i) {
    if (a[i].is_zero()) continue;
    for (int j = 0; i + j <= cap; ++j) {
      if (b[j].is_zero()) continue;
      r[i + j] += a[i] * b[j];
    }
  }
  return r;
}

}  // namespace

std::vector<Poly> series_coefficients(Series s, const SeriesLayout& layout, int cap) {
  const int nv = layout.nvars;
  if (cap < 0) return {};
  std::vector<Poly> acc(cap + 1, Poly(nv));
  acc[0] = Poly::constant(nv, 1);
  Poly t_var(nv);
  if (s == Series::Q) t_var = Poly::variable(nv, layout.extra_first);

  for (int i = 0; i < layout.m; ++i) {
    Poly x = Poly::variable(nv, layout.x_first + i);
    std::vector<Poly> f(cap + 1, Poly(nv));
    f[0] = Poly::constant(nv, 1);
    Poly xp = Poly::constant(nv, 1);
    for (int n = 1; n <= cap; ++n) {
      xp = xp * x;
      switch (s) {
        case Series::H: f[n] = xp; break;
        case Series::E:
          if (n == 1) f[n] = xp;
          break;
        case Series::Q: f[n] = xp - t_var * xp; break;
        case Series::QMinusOne:
        case Series::Theta: f[n] = Integer(2) * xp; break;
      }
    }
    acc = series_product(acc, f, cap, nv);
  }
  if (s == Series::Theta) {
    for (int j = 0; j < layout.extra_count; ++j) {
      std::vector<Poly> f(cap + 1, Poly(nv));
      f[0] = Poly::constant(nv, 1);
      if (cap >= 1) f[1] = Poly::variable(nv, layout.extra_first + j);
      acc = series_product(acc, f, cap, nv);
    }
  }
  return acc;
}

}  // namespace raising
