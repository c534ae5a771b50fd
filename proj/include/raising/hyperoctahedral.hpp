#pragma once

#include <compare>
#include <map>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "raising/partition.hpp"
#include "raising/polynomial.hpp"

namespace raising {

// Element of B_n in window notation w(1), ..., w(n). s_0 negates the first
// entry and s_i (i >= 1) swaps positions i and i+1; the word a_1..a_l stands
// for s_{a_1} ... s_{a_l}.
class SignedPermutation {
 public:
  SignedPermutation() = default;
  explicit SignedPermutation(std::vector<int> window);
  static SignedPermutation identity(int n);
  static SignedPermutation generator(int i, int n);
  static SignedPermutation from_word(const IntVector& word, int n);

  int n() const { return static_cast<int>(w_.size()); }
  const std::vector<int>& window() const { return w_; }
  // w(i) for 1 <= |i| <= n, with w(-i) = -w(i).
  int operator()(int i) const;

  // (w o)(i) = w(o(i)); the smaller rank is extended first.
  SignedPermutation operator*(const SignedPermutation& o) const;
  SignedPermutation inverse() const;
  SignedPermutation times_generator(int i) const;  // w s_i
  SignedPermutation extended(int n) const;

  int length() const;
  bool has_right_descent(int i) const;
  // No right descent except possibly at k.
  bool is_k_grassmannian(int k) const;
  bool is_unsigned() const;

  std::string to_string() const;
  auto operator<=>(const SignedPermutation&) const = default;

 private:
  std::vector<int> w_;
};

SignedPermutation parse_signed_permutation(std::string_view text);

bool is_reduced_word(const IntVector& word, int n);
// Reduced words in lexicographic order.
std::vector<IntVector> reduced_words(const SignedPermutation& w);
Integer count_reduced_words(const SignedPermutation& w);
// a_1 > ... > a_r < ... < a_l for some r.
bool is_unimodal(const IntVector& word);
int count_unimodal_words(const SignedPermutation& w);

// Element of the nilCoxeter algebra of B_n with polynomial coefficients.
class NilCoxeterElement {
 public:
  NilCoxeterElement(int n, int nvars);
  static NilCoxeterElement one(int n, int nvars);

  int n() const { return n_; }
  const std::map<SignedPermutation, Poly>& terms() const { return terms_; }
  Poly coeff(const SignedPermutation& w) const;

  // Right multiplication by (1 + c u_i). With a target, terms that can no
  // longer reach it are dropped.
  void times_factor(int i, const Poly& c, const std::optional<SignedPermutation>& target = std::nullopt);
  // Right multiplication by u_i.
  NilCoxeterElement times_generator(int i) const;
  bool operator==(const NilCoxeterElement& o) const { return terms_ == o.terms_; }

 private:
  int n_;
  int nvars_;
  std::map<SignedPermutation, Poly> terms_;
};

// Right multiplication by C(x_var) or A_i(x_var) in the nilCoxeter algebra.
void times_c_factor(NilCoxeterElement& e, int var, int nvars,
                    const std::optional<SignedPermutation>& target = std::nullopt);
void times_a_factor(NilCoxeterElement& e, int first, int var, int nvars,
                    const std::optional<SignedPermutation>& target = std::nullopt);

// Coefficient of u_w in C(x1) ... C(xm).
Poly stanley_c(const SignedPermutation& w, int m);
// Coefficient of u_w in C(x1)...C(xm) A_1(y1) ... A_{n-1}(y_{n-1}); variables
// x1..xm, y1..y_{n-1}.
Poly schubert_bh(const SignedPermutation& w, int m);
// Type A: coefficient of u_w in A_1(x1) ... A_1(xm); w must be unsigned.
Poly stanley_a(const SignedPermutation& w, int m);

// k-strict partitions fitting in the (n-k) x (n+k) rectangle.
std::vector<Partition> grassmannian_partitions(int k, int n);
SignedPermutation grassmannian_element(const Partition& lambda, int k, int n);
// The same element read off the diagonals of the staircase outside lambda.
SignedPermutation grassmannian_element_by_diagonals(const Partition& lambda, int k, int n);
Partition partition_of(const SignedPermutation& w, int k);

struct SkewWitness {
  Partition lambda;
  Partition mu;
};
// Searches P(k,n) for lambda with w_lambda = w v reduced and v k-Grassmannian.
std::optional<SkewWitness> is_skew(const SignedPermutation& w, int k, int n);
SignedPermutation skew_element(const Partition& lambda, const Partition& mu, int k, int n);
// l(w_lambda w_mu^{-1}) == |lambda| - |mu|.
bool compatible_pair(const Partition& lambda, const Partition& mu, int k, int n);

// Reduced factorizations w = u_1 ... u_r into non-identity unimodal elements.
struct UnimodalFactorization {
  std::vector<SignedPermutation> factors;
  Integer unimodal_words = 1;  // product of the unimodal word counts
};
std::vector<UnimodalFactorization> unimodal_factorizations(const SignedPermutation& w, int r);
// Chain mu = lambda^0 c ... c lambda^r with w_{lambda^i} = u_{r-i+1} ... u_r w_mu.
std::vector<Partition> factorization_chain(const UnimodalFactorization& f, const Partition& mu, int k, int n);

// Checks u_i^2 = 0, commutation, braid and the 4-term s_0 s_1 relation on
// the nilCoxeter algebra of B_n.
bool nilcoxeter_relations_hold(int n);
// C(x1) C(x2) == C(x2) C(x1) in B_n.
bool c_factors_commute(int n);

}  // namespace raising
