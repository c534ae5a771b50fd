#pragma once

#include <functional>
#include <map>
#include <optional>
#include <string>

#include "raising/partition.hpp"
#include "raising/tpoly.hpp"

namespace raising {

// Monomial bases u, v, w (products of generators) and the distinguished
// bases U, V, W defined by raising operators.
enum class Basis { UMonomial, VMonomial, WMonomial, U, V, W };

std::string basis_tag(Basis b);
Basis basis_from_tag(const std::string& tag);
bool is_monomial_basis(Basis b);
// v and V carry coefficients in Z[t]; the others are over Z.
bool basis_allows_t(Basis b);
Basis monomial_basis_of(Basis b);
Basis distinguished_basis_of(Basis b);

// Orders indices by total size, then lexicographically. Within one degree
// this is a linear extension of dominance, least dominant first.
struct IndexOrder {
  bool operator()(const IntVector& a, const IntVector& b) const;
};

// Sorted decreasing with zeros removed; nullopt if an entry is negative
// (generators of negative degree vanish).
std::optional<IntVector> normalize_monomial_index(IntVector index);

class RingElement {
 public:
  using Terms = std::map<IntVector, TPoly, IndexOrder>;

  explicit RingElement(Basis basis = Basis::UMonomial, std::optional<int> k = std::nullopt);
  static RingElement monomial(Basis basis, const IntVector& index, const TPoly& coeff = 1,
                              std::optional<int> k = std::nullopt);
  static RingElement one(Basis basis, std::optional<int> k = std::nullopt);

  Basis basis() const { return basis_; }
  std::optional<int> k() const { return k_; }
  const Terms& terms() const { return terms_; }
  size_t size() const { return terms_.size(); }
  bool is_zero() const { return terms_.empty(); }
  TPoly coeff(const IntVector& index) const;

  // Adds c times the basis element with this index. Monomial-basis indices
  // are normalized first.
  void add(const IntVector& index, const TPoly& c);

  RingElement& operator+=(const RingElement& o);
  RingElement& operator-=(const RingElement& o);
  RingElement& operator*=(const TPoly& c);
  RingElement operator-() const;
  friend RingElement operator+(RingElement a, const RingElement& b) { return a += b; }
  friend RingElement operator-(RingElement a, const RingElement& b) { return a -= b; }
  friend RingElement operator*(const TPoly& c, RingElement a) { return a *= c; }
  bool operator==(const RingElement& o) const;

  RingElement with_basis(Basis b) const;
  RingElement specialize_t(const Integer& t) const;
  bool t_free() const;

  std::string to_string() const;

 private:
  void check_compatible(const RingElement& o) const;
  Basis basis_;
  std::optional<int> k_;
  Terms terms_;
};

// Product in a monomial basis: indices concatenate, coefficients multiply.
RingElement multiply_monomial(const RingElement& a, const RingElement& b);
// Multiplication by the generator of degree r >= 0.
RingElement multiply_monomial(const RingElement& e, int r);

// Expansion of a distinguished basis element in the monomial basis.
using ExpansionFn = std::function<RingElement(const IntVector&)>;

// Rewrites a monomial-basis element in a distinguished basis whose members
// are unitriangular with respect to dominance. Throws if an expansion does
// not have leading coefficient 1 on its own index.
RingElement change_basis_unitriangular(const RingElement& e, Basis target, const ExpansionFn& expand);
RingElement expand_to_monomials(const RingElement& e, const ExpansionFn& expand);

}  // namespace raising
