#pragma once

#include <map>
#include <string>
#include <vector>

#include "raising/tpoly.hpp"

namespace raising {

using Exponent = std::vector<int>;

// Sparse polynomial over Z in a fixed number of variables. Optionally
// truncated: terms of total degree above `max_degree` are discarded.
class Poly {
 public:
  explicit Poly(int nvars = 0, int max_degree = -1);
  static Poly constant(int nvars, const Integer& c, int max_degree = -1);
  static Poly variable(int nvars, int var, int max_degree = -1);
  static Poly monomial(int nvars, const Exponent& e, const Integer& c = 1, int max_degree = -1);

  int nvars() const { return nvars_; }
  int max_degree() const { return max_degree_; }
  const std::map<Exponent, Integer>& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }
  Integer coeff(const Exponent& e) const;
  int total_degree() const;
  bool is_homogeneous() const;
  bool nonnegative() const;

  void add(const Exponent& e, const Integer& c);
  Poly& operator+=(const Poly& o);
  Poly& operator-=(const Poly& o);
  Poly& operator*=(const Integer& c);
  friend Poly operator+(Poly a, const Poly& b) { return a += b; }
  friend Poly operator-(Poly a, const Poly& b) { return a -= b; }
  friend Poly operator*(const Poly& a, const Poly& b);
  friend Poly operator*(Integer c, Poly a) { return a *= c; }
  Poly operator-() const;
  bool operator==(const Poly& o) const { return nvars_ == o.nvars_ && terms_ == o.terms_; }

  Poly pow(unsigned n) const;
  // Moves variable i to position map[i] in a ring with new_nvars variables.
  Poly embed(int new_nvars, const std::vector<int>& map) const;
  // Sets variables in [first, first + count) to zero and removes them.
  Poly drop_variables(int first, int count) const;
  // Sets variable `var` to the integer value (keeps the variable slot).
  Poly substitute(int var, const Integer& value) const;
  // Sum of terms whose exponent in `var` equals d, with that exponent cleared.
  Poly coefficient_of_power(int var, int d) const;

  std::string to_string(const std::vector<std::string>& names) const;

 private:
  int nvars_;
  int max_degree_;
  std::map<Exponent, Integer> terms_;
};

// Variable names x1..xm followed by the given extra names.
std::vector<std::string> variable_names(int m, const std::vector<std::string>& extra = {});
std::vector<std::string> variable_names(const std::string& prefix, int m);

// Coefficients of z^0..z^cap in generating functions. The polynomial ring has
// nvars variables; x occupies [x_first, x_first+m), and the extra block
// (t for q, y for theta) sits at `extra_first`.
enum class Series {
  H,      // prod 1/(1 - x_i z)
  E,      // prod (1 + x_i z)
  Q,      // prod (1 - t x_i z)/(1 - x_i z), t a variable
  QMinusOne,  // prod (1 + x_i z)/(1 - x_i z)
  Theta,  // prod (1 + x_i z)/(1 - x_i z) * prod_{j<=k} (1 + y_j z)
};

struct SeriesLayout {
  int nvars = 0;
  int x_first = 0;
  int m = 0;
  int extra_first = 0;
  int extra_count = 0;
};

std::vector<Poly> series_coefficients(Series s, const SeriesLayout& layout, int cap);

}  // namespace raising
