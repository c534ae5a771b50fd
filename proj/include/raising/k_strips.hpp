#pragma once

#include <optional>
#include <string>
#include <vector>

#include "raising/partition.hpp"

namespace raising {

// [r,c] and [r',c'] with c <= k < c' and c + c' = 2k + 2 + r - r'.
bool k_related(const Box& left, const Box& right, int k);
// |c - k - 1/2| + r = |c' - k - 1/2| + r'.
bool k_prime_related(const Box& a, const Box& b, int k);

// The relation lambda -> mu of the type C Pieri rule. Returns N(lambda, mu)
// when mu is k-strict, arises from lambda by removing a vertical strip from
// the first k columns and adding a horizontal strip, and the column
// conditions hold; nullopt otherwise.
std::optional<int> pieri_relation(const Partition& lambda, const Partition& mu, int k);

struct StripTerm {
  Partition mu;
  int n = 0;  // the coefficient is 2^n
  bool operator==(const StripTerm&) const = default;
};

// All mu with lambda -> mu and |mu| = |lambda| + p, in IndexOrder.
std::vector<StripTerm> pieri_targets(const Partition& lambda, int p, int k);

// Direct test of mu being a k-horizontal strip of lambda, using the rim
// description with a virtual row 0 above the diagram.
struct StripAnalysis {
  bool is_strip = false;
  int n = 0;
  std::vector<Box> r_boxes;
  std::vector<Box> a_boxes;
  std::string failure;
};
StripAnalysis analyze_k_strip(const Partition& lambda, const Partition& mu, int k);

bool is_k_horizontal_strip(const Partition& lambda, const Partition& mu, int k);
int n_strip(const Partition& lambda, const Partition& mu, int k);
// n through the Pieri relation lambda -> (p + r, mu), p = max(lambda_1 + 1,
// l(lambda) + 2k), r = |lambda| - |mu|. Throws if the relation fails.
int n_strip_oracle(const Partition& lambda, const Partition& mu, int k);
bool is_k_horizontal_strip_oracle(const Partition& lambda, const Partition& mu, int k);

// All k-strict mu inside lambda with mu a k-horizontal strip of lambda.
std::vector<StripTerm> k_strips_below(const Partition& lambda, int k);

}  // namespace raising
