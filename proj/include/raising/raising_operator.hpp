#pragma once

#include <compare>
#include <cstddef>
#include <optional>
#include <string>
#include <vector>

#include "raising/pair_set.hpp"
#include "raising/ring_element.hpp"

namespace raising {

// One factor f(R_ij) of a raising operator, given by its power series in R.
enum class Factor {
  One,          // 1
  OneMinusR,    // 1 - R
  HallLittlewood,  // (1 - R) / (1 - tR)
  HallLittlewoodInverse,  // (1 - tR) / (1 - R)
  InverseOnePlusR,  // (1 + R)^{-1}
  TypeC,        // (1 - R) / (1 + R)
  OnePlusR,     // 1 + R
  InverseOneMinusR,  // (1 - R)^{-1}
};

// Coefficient of R^n in the series of f.
TPoly factor_coefficient(Factor f, int n);
bool factor_uses_t(Factor f);

// The operator prod_{1 <= i < j <= length} f_ij(R_ij).
class FactorSpec {
 public:
  FactorSpec() = default;
  FactorSpec(int length, Factor fill);
  // Pairs in d get TypeC, the rest OneMinusR; pairs beyond length ignored.
  static FactorSpec type_c(int length, const PairSet& d);

  int length() const { return length_; }
  Factor at(int i, int j) const;  // 1-based, i < j
  void set(int i, int j, Factor f);
  bool uses_t() const;

  auto operator<=>(const FactorSpec&) const = default;

 private:
  int length_ = 0;
  std::vector<Factor> kinds_;  // row-major length x length
};

// Applies the operator to the monomial with index alpha and returns the
// result in the monomial basis `target`. Monomials with a negative final
// entry vanish. Requires spec.length() >= vector_length(alpha); rejects a
// t-dependent operator with a t-free target.
RingElement expand_raising(const FactorSpec& spec, const IntVector& alpha, Basis target,
                           std::optional<int> k = std::nullopt);

// Memo table for expand_raising. The limit is read from RAISING_MEMO_LIMIT
// (entries; 0 disables) on first use.
void set_raising_memo_limit(size_t entries);
size_t raising_memo_limit();
size_t raising_memo_size();
void clear_raising_memo();

}  // namespace raising
