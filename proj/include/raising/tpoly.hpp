#pragma once

#include <gmpxx.h>

#include <compare>
#include <string>
#include <vector>

namespace raising {

using Integer = mpz_class;

// Polynomial in one indeterminate t with arbitrary-precision integer
// coefficients. Stored low degree first; no trailing zeros, so the zero
// polynomial has an empty coefficient vector.
class TPoly {
 public:
  TPoly() = default;
  TPoly(long c);  // NOLINT(google-explicit-constructor)
  TPoly(const Integer& c);  // NOLINT(google-explicit-constructor)
  explicit TPoly(std::vector<Integer> coeffs);

  static TPoly t();
  static TPoly monomial(const Integer& c, int degree);

  bool is_zero() const { return c_.empty(); }
  bool is_constant() const { return c_.size() <= 1; }
  int degree() const { return static_cast<int>(c_.size()) - 1; }
  Integer coeff(int d) const;
  const std::vector<Integer>& coeffs() const { return c_; }
  Integer constant() const { return coeff(0); }

  TPoly& operator+=(const TPoly& o);
  TPoly& operator-=(const TPoly& o);
  TPoly& operator*=(const TPoly& o);
  TPoly operator-() const;
  friend TPoly operator+(TPoly a, const TPoly& b) { return a += b; }
  friend TPoly operator-(TPoly a, const TPoly& b) { return a -= b; }
  friend TPoly operator*(const TPoly& a, const TPoly& b);

  bool operator==(const TPoly& o) const { return c_ == o.c_; }
  std::strong_ordering operator<=>(const TPoly& o) const;

  TPoly pow(unsigned n) const;
  Integer evaluate(const Integer& t) const;

  // Human-readable form, e.g. "1 - t^2" or "-2".
  std::string to_string() const;

 private:
  void trim();
  std::vector<Integer> c_;
};

}  // namespace raising
