#pragma once

#include <utility>
#include <vector>

#include "raising/identity_report.hpp"
#include "raising/k_strips.hpp"
#include "raising/pair_set.hpp"
#include "raising/ring_element.hpp"

namespace raising {

// Normal form in B^(k): repeatedly rewrite a product w_r w_r (r > k) with
// w_r^2 = -2 sum_{i=1}^r (-1)^i w_{r+i} w_{r-i} until every index is
// k-strict. The strategy picks which equal pair is rewritten first.
enum class StraightenStrategy { LeftmostPair, RightmostPair };
RingElement straighten(const RingElement& e, int k, StraightenStrategy s = StraightenStrategy::LeftmostPair);
RingElement straighten_monomial(const IntVector& index, int k,
                                StraightenStrategy s = StraightenStrategy::LeftmostPair);

// R^D w_alpha before reduction modulo the relations.
RingElement giambelli_w_raw(const IntVector& alpha, const PairSet& d, int k);
// W^D_alpha in normal form.
RingElement giambelli_w(const IntVector& alpha, const PairSet& d, int k);
// W_lambda = R^{C(lambda)} w_lambda in normal form; lambda must be k-strict.
RingElement giambelli_w(const Partition& lambda, int k);

RingElement to_W_basis(const RingElement& e, int k);

// w_p W_lambda by the combinatorial rule (W basis).
RingElement pieri_w(int p, const Partition& lambda, int k);
// Same product computed in B^(k) and converted to the W basis.
RingElement pieri_w_oracle(int p, const Partition& lambda, int k);

// sum_{alpha >= 0} 2^{#alpha} W^{C(lambda)}_{lambda - alpha} against
// sum_{mu k-horizontal strip of lambda} 2^{n} W_mu, compared in the W basis.
IdentityReport mirror_w(const Partition& lambda, int k);

struct RecursionTerm {
  int r = 0;
  Partition mu;
  int n = 0;
  bool operator==(const RecursionTerm&) const = default;
};
struct TopRowRecursion {
  std::vector<RecursionTerm> terms;
  IdentityReport report;
};
// W_(p,lambda) = sum_r (-1)^r sum 2^{n(lambda/mu)} w_{p+r} W_mu over
// k-horizontal strips; needs p >= max(lambda_1 + 1, l(lambda) + 2k).
TopRowRecursion toprow_recursion_w(int p, const Partition& lambda, int k);

// W^D_alpha with an unsorted index.
struct DIndexed {
  IntVector alpha;
  PairSet d;
  bool operator==(const DIndexed&) const = default;
};
RingElement evaluate(const DIndexed& x, int k);
// W^D_alpha = W^{D+(i,j)}_alpha + W^{D+(i,j)}_{R_ij alpha} for (i,j) outside D.
std::pair<DIndexed, DIndexed> mitosis(const DIndexed& x, int i, int j);

// Conditions for the pair (j, j+1) relative to D.
bool tame_case_a(const PairSet& d, int j);  // (j,j+1) not in D, columns j and j+1 agree
bool tame_case_b(const PairSet& d, int j);  // (j,j+1) in D, rows j and j+1 agree

struct TameReport {
  bool applicable = false;
  char which = 0;  // 'a' or 'b'
  IdentityReport report;
};
// With r at position j: case (a) W^D_(..,r,s,..) = -W^D_(..,s-1,r+1,..);
// case (b), when r + s > 2k, W^D_(..,r,s,..) = -W^D_(..,s,r,..).
TameReport check_tame(const PairSet& d, const IntVector& prefix, int r, int s, const IntVector& suffix, int k);

// Pf(W_(alpha_i, alpha_j)) for k = 0, with alpha padded to even length.
RingElement pfaffian_w(const IntVector& alpha);

}  // namespace raising
