#pragma once

#include <vector>

#include "raising/identity_report.hpp"
#include "raising/partition.hpp"
#include "raising/ring_element.hpp"

namespace raising {

// U_alpha = prod_{i<j} (1 - R_ij) u_alpha, in the u-monomial basis.
RingElement giambelli_u(const IntVector& alpha);
// det(u_{alpha_i + j - i}) expanded over permutations.
RingElement jacobi_trudi_u(const IntVector& alpha);

// Rewrites a u-monomial element in the U basis.
RingElement to_U_basis(const RingElement& e);

// u_p U_lambda = sum of U_nu over horizontal p-strips nu/lambda (U basis).
RingElement pieri_u(int p, const Partition& lambda);
// Same product computed in the ring and converted back to the U basis.
RingElement pieri_u_oracle(int p, const Partition& lambda);

// U_(p,lambda) against sum_r (-1)^r u_{p+r} sum_{lambda/mu vertical r-strip} U_mu,
// both in the u-monomial basis. Requires p >= lambda_1.
IdentityReport toprow_recursion_u(int p, const Partition& lambda);

// Downward: sum_{alpha >= 0, len(alpha) <= l(lambda)} U_{lambda - alpha}
// against the horizontal strips mu inside lambda.
// Upward: for each degree d in [|lambda|, cap] the sum of U_{lambda + alpha}
// with len(alpha) <= l(lambda)+1 against the horizontal strips mu over lambda.
struct MirrorUReport {
  bool holds = false;
  std::vector<Partition> down_partners;
  std::vector<IdentityReport> instances;
};
MirrorUReport mirror_u(const Partition& lambda, int degree_cap = -1);

}  // namespace raising
