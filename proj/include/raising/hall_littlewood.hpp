#pragma once

#include "raising/identity_report.hpp"
#include "raising/partition.hpp"
#include "raising/polynomial.hpp"
#include "raising/ring_element.hpp"

namespace raising {

// V_alpha = prod_{i<j} (1 - R_ij)/(1 - t R_ij) v_alpha in the v-monomial basis.
RingElement giambelli_v(const IntVector& alpha);
// Same element by peeling off the last row.
RingElement giambelli_v_recursive(const IntVector& alpha);
RingElement to_V_basis(const RingElement& e);

// For mu/lambda a horizontal strip: product of (1 - t^{m_c(lambda)}) over
// columns c >= 1 with no box of mu/lambda in column c but one in column c+1.
TPoly psi(const Partition& mu, const Partition& lambda);
// For lambda/mu a horizontal strip: product of (1 - t^{m_c(lambda)}) over
// columns c with a box of lambda/mu in column c but none in column c+1.
TPoly phi(const Partition& lambda, const Partition& mu);

// v_p V_lambda = sum psi_{mu/lambda} V_mu over horizontal p-strips (V basis).
RingElement pieri_v(int p, const Partition& lambda);
RingElement pieri_v_oracle(int p, const Partition& lambda);

// sum_{alpha >= 0} (1-t)^{#alpha} V_{lambda - alpha} against
// sum_{lambda/mu horizontal} phi_{lambda/mu} V_mu, both in the v basis.
IdentityReport mirror_v(const Partition& lambda);

// V_(a,r,s,b) + V_(a,s-1,r+1,b) = t (V_(a,r+1,s-1,b) + V_(a,s,r,b)).
IdentityReport commutation_v(const IntVector& prefix, int r, int s, const IntVector& suffix);
// V_(a,c,c+d,b) + (1-t) sum_{i=1}^{d-1} V_(a,c+i,c+d-i,b) = t V_(a,c+d,c,b).
IdentityReport exchange_v(const IntVector& prefix, int c, int d, const IntVector& suffix);

// Substitutes v_r by h_r(x), e_r(x) or q_r(x;t) in an element of the
// v-monomial basis. The result lives in variables x1..xm, t (t last).
// The e-series needs a t-free element (specialize at t = -1 first).
enum class VSeries { H, E, Q };
Poly realize_v(const RingElement& e, int m, VSeries series);
Poly tpoly_as_poly(const TPoly& c, int nvars, int t_var);

// Q_lambda(x1..xm; t) by the Pieri reduction on the last variable or by
// substituting q_r into the Giambelli expansion.
enum class HLMode { Reduction, Realization };
Poly hl_function(const Partition& lambda, int m, HLMode mode);

}  // namespace raising
