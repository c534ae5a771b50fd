#pragma once

#include <stdexcept>
#include <vector>

namespace raising {

// Pfaffian of an antisymmetric matrix over a commutative ring, by expansion
// along the first row. T needs +, unary -, == ; mul supplies the product so
// callers can reduce modulo relations after each multiplication.
template <class T, class Mul>
T pfaffian(const std::vector<std::vector<T>>& m, const T& zero, const T& one, Mul mul) {
  const size_t n = m.size();
  if (n % 2) throw std::invalid_argument("pfaffian needs an even-sized matrix");
  for (size_t i = 0; i < n; ++i) {
    if (m[i].size() != n) throw std::invalid_argument("pfaffian needs a square matrix");
    if (!(m[i][i] == zero)) throw std::invalid_argument("pfaffian needs a zero diagonal");
    for (size_t j = i + 1; j < n; ++j)
      if (!(m[j][i] == -m[i][j])) throw std::invalid_argument("pfaffian needs an antisymmetric matrix");
  }

  std::vector<size_t> rows(n);
  for (size_t i = 0; i < n; ++i) rows[i] = i;

  auto rec = [&](auto&& self, const std::vector<size_t>& idx) -> T {
    if (idx.empty()) return one;
    T total = zero;
    for (size_t pos = 1; pos < idx.size(); ++pos) {
      const T& entry = m[idx[0]][idx[pos]];
      if (entry == zero) continue;
      std::vector<size_t> rest;
      for (size_t q = 1; q < idx.size(); ++q)
        if (q != pos) rest.push_back(idx[q]);
      T term = mul(entry, self(self, rest));
      if (pos % 2 == 1)
        total = total + term;
      else
        total = total + (-term);
    }
    return total;
  };
  return rec(rec, rows);
}

}  // namespace raising
