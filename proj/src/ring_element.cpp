#include "raising/ring_element.hpp"

#include <algorithm>
#include <stdexcept>

namespace raising {

std::string basis_tag(Basis b) {
  switch (b) {
    case Basis::UMonomial: return "u";
    case Basis::VMonomial: return "v";
    case Basis::WMonomial: return "w";
    case Basis::U: return "U";
    case Basis::V: return "V";
    case Basis::W: return "W";
  }
  return "u";
}

Basis basis_from_tag(const std::string& tag) {
  if (tag == "u") return Basis::UMonomial;
  if (tag == "v") return Basis::VMonomial;
  if (tag == "w") return Basis::WMonomial;
  if (tag == "U") return Basis::U;
  if (tag == "V") return Basis::V;
  if (tag == "W") return Basis::W;
  throw std::invalid_argument("unknown basis tag '" + tag + "'");
}

bool is_monomial_basis(Basis b) {
  return b == Basis::UMonomial || b == Basis::VMonomial || b == Basis::WMonomial;
}

bool basis_allows_t(Basis b) { return b == Basis::VMonomial || b == Basis::V; }

Basis monomial_basis_of(Basis b) {
  switch (b) {
    case Basis::U: return Basis::UMonomial;
    case Basis::V: return Basis::VMonomial;
    case Basis::W: return Basis::WMonomial;
    default: return b;
  }
}

Basis distinguished_basis_of(Basis b) {
  switch (b) {
    case Basis::UMonomial: return Basis::U;
    case Basis::VMonomial: return Basis::V;
    case Basis::WMonomial: return Basis::W;
    default: return b;
  }
}

bool IndexOrder::operator()(const IntVector& a, const IntVector& b) const {
  int sa = vector_sum(a), sb = vector_sum(b);
  if (sa != sb) return sa < sb;
  return a < b;
}

std::optional<IntVector> normalize_monomial_index(IntVector index) {
  for (int x : index)
    if (x < 0) return std::nullopt;
  std::sort(index.begin(), index.end(), std::greater<>());
  while (!index.empty() && index.back() == 0) index.pop_back();
  return index;
}

RingElement::RingElement(Basis basis, std::optional<int> k) : basis_(basis), k_(k) {}

RingElement RingElement::monomial(Basis basis, const IntVector& index, const TPoly& coeff,
                                  std::optional<int> k) {
  RingElement e(basis, k);
  e.add(index, coeff);
  return e;
}

RingElement RingElement::one(Basis basis, std::optional<int> k) { return monomial(basis, {}, 1, k); }

TPoly RingElement::coeff(const IntVector& index) const {
  auto it = terms_.find(index);
  return it == terms_.end() ? TPoly() : it->second;
}

void RingElement::add(const IntVector& index, const TPoly& c) {
  if (c.is_zero()) return;
  if (!basis_allows_t(basis_) && !c.is_constant())
    throw std::invalid_argument("basis " + basis_tag(basis_) + " does not admit t-dependent coefficients");
  IntVector key = index;
  if (is_monomial_basis(basis_)) {
    auto n = normalize_monomial_index(index);
    if (!n) return;
    key = std::move(*n);
  } else {
    key = trimmed(index);
  }
  auto [it, inserted] = terms_.try_emplace(key, c);
  if (!inserted) {
    it->second += c;
    if (it->second.is_zero()) terms_.erase(it);
  }
}

void RingElement::check_compatible(const RingElement& o) const {
  if (basis_ != o.basis_) throw std::invalid_argument("ring elements in different bases");
  if (k_ && o.k_ && *k_ != *o.k_) throw std::invalid_argument("ring elements with different k");
}

RingElement& RingElement::operator+=(const RingElement& o) {
  check_compatible(o);
  if (!k_) k_ = o.k_;
  for (const auto& [idx, c] : o.terms_) add(idx, c);
  return *this;
}

RingElement& RingElement::operator-=(const RingElement& o) {
  check_compatible(o);
  if (!k_) k_ = o.k_;
  for (const auto& [idx, c] : o.terms_) add(idx, -c);
  return *this;
}

RingElement& RingElement::operator*=(const TPoly& c) {
  if (c.is_zero()) {
    terms_.clear();
    return *this;
  }
  if (!basis_allows_t(basis_) && !c.is_constant())
    throw std::invalid_argument("basis " + basis_tag(basis_) + " does not admit t-dependent coefficients");
  for (auto& [idx, x] : terms_) x *= c;
  return *this;
}

RingElement RingElement::operator-() const {
  RingElement r = *this;
  for (auto& [idx, x] : r.terms_) x = -x;
  return r;
}

bool RingElement::operator==(const RingElement& o) const {
  return basis_ == o.basis_ && terms_ == o.terms_ && (!k_ || !o.k_ || *k_ == *o.k_);
}

RingElement RingElement::with_basis(Basis b) const {
  RingElement r(b, k_);
  for (const auto& [idx, c] : terms_) r.add(idx, c);
  return r;
}

RingElement RingElement::specialize_t(const Integer& t) const {
  RingElement r(basis_, k_);
  for (const auto& [idx, c] : terms_) r.add(idx, TPoly(c.evaluate(t)));
  return r;
}

bool RingElement::t_free() const {
  for (const auto& [idx, c] : terms_)
    if (!c.is_constant()) return false;
  return true;
}

std::string RingElement::to_string() const {
  if (terms_.empty()) return "0";
  std::string out;
  bool first = true;
  for (const auto& [idx, c] : terms_) {
    std::string name = idx.empty() && is_monomial_basis(basis_) ? "1"
                                                                : basis_tag(basis_) + "[" + format_int_list(idx) + "]";
    std::string coef;
    bool negative = false;
    if (c.is_constant()) {
      Integer a = c.constant();
      negative = a < 0;
      if (negative) a = -a;
      if (a != 1) coef = a.get_str();
    } else {
      coef = "(" + c.to_string() + ")";
    }
    if (first)
      out += negative ? "-" : "";
    else
      out += negative ? " - " : " + ";
    first = false;
    if (coef.empty())
      out += name;
    else if (name == "1")
      out += coef;
    else
      out += coef + "*" + name;
  }
  return out;
}

RingElement multiply_monomial(const RingElement& a, const RingElement& b) {
  if (!is_monomial_basis(a.basis()) || a.basis() != b.basis())
    throw std::invalid_argument("multiply_monomial needs two elements in the same monomial basis");
  std::optional<int> k = a.k() ? a.k() : b.k();
  if (a.k() && b.k() && *a.k() != *b.k()) throw std::invalid_argument("ring elements with different k");
  RingElement r(a.basis(), k);
  for (const auto& [ia, ca] : a.terms()) {
    for (const auto& [ib, cb] : b.terms()) {
      IntVector idx = ia;
      idx.insert(idx.end(), ib.begin(), ib.end());
      r.add(idx, ca * cb);
    }
  }
  return r;
}

RingElement multiply_monomial(const RingElement& e, int r) {
  if (r < 0) throw std::invalid_argument("generator degree must be nonnegative");
  return multiply_monomial(e, RingElement::monomial(e.basis(), {r}, 1, e.k()));
}

RingElement change_basis_unitriangular(const RingElement& e, Basis target, const ExpansionFn& expand) {
  if (!is_monomial_basis(e.basis())) throw std::invalid_argument("change_basis_unitriangular expects a monomial basis");
  RingElement rest = e, out(target, e.k());
  while (!rest.is_zero()) {
    auto [idx, c] = *rest.terms().begin();
    RingElement ex = expand(idx);
    if (ex.coeff(idx) != TPoly(1))
      throw std::domain_error("expansion of " + basis_tag(target) + "[" + format_int_list(idx) +
                              "] is not unitriangular");
    for (const auto& [j, cj] : ex.terms())
      if (IndexOrder{}(j, idx)) throw std::domain_error("expansion has a term below its leading index");
    out.add(idx, c);
    rest -= c * ex.with_basis(rest.basis());
  }
  return out;
}

RingElement expand_to_monomials(const RingElement& e, const ExpansionFn& expand) {
  RingElement out(monomial_basis_of(e.basis()), e.k());
  for (const auto& [idx, c] : e.terms()) out += c * expand(idx).with_basis(out.basis());
  return out;
}

}  // namespace raising
