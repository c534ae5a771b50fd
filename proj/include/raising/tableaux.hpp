#pragma once

#include <string>
#include <vector>

#include "raising/partition.hpp"
#include "raising/tpoly.hpp"

namespace raising {

// A k-tableau of shape lambda/mu with entries 1..m: a chain
// mu = chain[0] c chain[1] c ... c chain[m] = lambda of k-strict partitions
// whose consecutive quotients are k-horizontal strips.
struct KTableau {
  Partition outer;
  Partition inner;
  int k = 0;
  std::vector<Partition> chain;
  int n = 0;  // sum of n over the strips; the weight is 2^n
  // rows[r][c] is the entry in box [r+1, c+1]; 0 marks boxes of inner.
  std::vector<std::vector<int>> rows;

  IntVector content() const;
  std::string to_string() const;
};

// Entries at most m, in a fixed order: lexicographic in the chain read from
// the outside in.
std::vector<KTableau> enumerate_k_tableaux(const Partition& lambda, const Partition& mu, int k, int m);

// Tableaux with entries 1..|lambda/mu|, each used once.
Integer count_standard_k_tableaux(const Partition& lambda, const Partition& mu, int k);
// Independent count building the chain upward with the Pieri-relation test.
Integer count_standard_k_tableaux_oracle(const Partition& lambda, const Partition& mu, int k);

struct Letter {
  int value = 0;
  bool marked = false;
  bool operator==(const Letter&) const = default;
};

// A k-bitableau: marked letters 1'..k' fill a subshape with at most k
// columns (rows strict, columns weak); unmarked letters 1..m fill the rest
// as a k-tableau.
struct KBitableau {
  Partition shape;
  Partition marked_shape;
  std::vector<std::vector<Letter>> rows;
  int n = 0;
  IntVector x_content;  // multiplicity of each unmarked letter
  IntVector y_content;  // multiplicity of each marked letter

  std::string to_string() const;
};

std::vector<KBitableau> enumerate_k_bitableaux(const Partition& lambda, int k, int max_unmarked);

}  // namespace raising
