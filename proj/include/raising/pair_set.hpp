#pragma once

#include <set>
#include <string>
#include <string_view>
#include <utility>

#include "raising/partition.hpp"

namespace raising {

// A finite set of pairs (i,j) with 1 <= i < j, used as the denominator set
// of a type C raising operator.
using PairSet = std::set<std::pair<int, int>>;

// Order ideal test: (i,j) in D forces (i',j') in D whenever
// i' <= i, j' <= j and i' < j'.
bool is_valid_pair_set(const PairSet& d);

// {(i,j) : lambda_i + lambda_j > 2k + j - i, j <= length(lambda)}.
PairSet cset(const Partition& lambda, int k);

// Pairs (i,j) outside c with j <= bound such that i == 1 or (i-1,j-1) in c.
PairSet outside_rim(const PairSet& c, int bound);

// "12,13,23" style literal; multi-digit indices may be written "1-12".
PairSet parse_pair_set(std::string_view text);
std::string format_pair_set(const PairSet& d);

}  // namespace raising
