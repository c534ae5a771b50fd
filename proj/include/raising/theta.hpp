#pragma once

#include <map>
#include <string>
#include <vector>

#include "raising/partition.hpp"
#include "raising/polynomial.hpp"
#include "raising/ring_element.hpp"

namespace raising {

// Theta polynomials live in variables x1..xm, y1..yk (in that order).
// Skew polynomials F use x1..xm only.

// w_r -> theta_r(x; y), the z^r coefficient of
// prod_i (1 + x_i z)/(1 - x_i z) prod_{j <= k} (1 + y_j z).
Poly realize_w(const RingElement& e, int k, int m);
// w_r -> e_r(y1..yk).
Poly realize_w_elementary(const RingElement& e, int k);

enum class ThetaMode { Raising, Tableau, Reduction };
Poly theta(const Partition& lambda, int k, int m, ThetaMode mode);

// sum over k-tableaux of shape lambda/mu with entries <= m of 2^{n(T)} x^T.
Poly skew_f(const Partition& lambda, const Partition& mu, int k, int m);
// The same sum taken tableau by tableau.
Poly skew_f_tableaux(const Partition& lambda, const Partition& mu, int k, int m);
// det(q_{lambda_i - mu_j + j - i}(x)) with q_r the coefficients of
// prod (1 + x_i z)/(1 - x_i z).
Poly skew_f_determinant(const Partition& lambda, const Partition& mu, int m);

// Schur Q-functions (k = 0); reject non-strict input.
Poly schur_q(const Partition& lambda, int m);
Poly skew_schur_q(const Partition& lambda, const Partition& mu, int m);

// s_{mu'}(y1..yk) from semistandard tableaux of the conjugate shape.
Poly schur_s(const Partition& mu, int k);
// Skew Schur function s_{lambda/mu}(x1..xm).
Poly skew_schur_s(const Partition& lambda, const Partition& mu, int m);

// Expansion of a symmetric polynomial in x1..xm in Schur Q-functions by
// repeatedly cancelling the lexicographically largest monomial. Needs m at
// least the longest strict partition of each degree present; throws
// std::domain_error if f is not in the span.
std::map<Partition, Integer> q_expansion(const Poly& f, int m);

struct PolyIdentity {
  std::string name;
  bool holds = false;
  Poly lhs;
  Poly rhs;
};

// The four splitting identities for theta and F, in variable blocks
// x (m), x' (mprime), y (k).
std::vector<PolyIdentity> master_identities(const Partition& lambda, int k, int m, int mprime);

}  // namespace raising
