#include "raising/serialize.hpp"

#include <cstdint>
#include <stdexcept>

namespace raising {

Json integer_to_json(const Integer& n) {
  if (n.fits_slong_p()) return static_cast<std::int64_t>(n.get_si());
  return n.get_str();
}

Integer integer_from_json(const Json& j) {
  if (j.is_number_integer()) return Integer(std::to_string(j.get<std::int64_t>()));
  if (j.is_string()) return Integer(j.get<std::string>());
  throw std::invalid_argument("expected an integer");
}

Json to_json(const TPoly& p) {
  Json out = Json::array();
  for (const auto& c : p.coeffs()) out.push_back(integer_to_json(c));
  return out;
}

TPoly tpoly_from_json(const Json& j) {
  std::vector<Integer> c;
  for (const auto& x : j) c.push_back(integer_from_json(x));
  return TPoly(std::move(c));
}

Json to_json(const RingElement& e) {
  Json out;
  out["basis"] = basis_tag(e.basis());
  out["k"] = e.k() ? Json(*e.k()) : Json(nullptr);
  Json terms = Json::array();
  for (const auto& [index, c] : e.terms()) terms.push_back({{"index", index}, {"coeff", to_json(c)}});
  out["terms"] = std::move(terms);
  return out;
}

RingElement ring_element_from_json(const Json& j) {
  std::optional<int> k;
  if (j.contains("k") && !j["k"].is_null()) k = j["k"].get<int>();
  RingElement e(basis_from_tag(j.at("basis").get<std::string>()), k);
  for (const auto& t : j.at("terms")) e.add(t.at("index").get<IntVector>(), tpoly_from_json(t.at("coeff")));
  return e;
}

Json to_json(const Poly& p, const std::vector<std::string>& names) {
  Json out;
  out["variables"] = names;
  Json terms = Json::array();
  for (const auto& [e, c] : p.terms()) terms.push_back({{"exponent", e}, {"coeff", integer_to_json(c)}});
  out["terms"] = std::move(terms);
  return out;
}

Json to_json(const IdentityReport& r) {
  Json out;
  out["identity"] = r.identity;
  out["holds"] = r.holds;
  if (!r.detail.empty()) out["detail"] = r.detail;
  out["lhs"] = to_json(r.lhs);
  out["rhs"] = to_json(r.rhs);
  if (!r.holds) out["difference"] = to_json(r.lhs - r.rhs);
  return out;
}

Json to_json(const KTableau& t) {
  Json out;
  out["outer"] = t.outer.parts();
  out["inner"] = t.inner.parts();
  out["k"] = t.k;
  out["n"] = t.n;
  out["rows"] = t.rows;
  return out;
}

Json to_json(const KBitableau& t) {
  Json rows = Json::array();
  for (const auto& row : t.rows) {
    Json r = Json::array();
    for (const auto& l : row) r.push_back(std::to_string(l.value) + (l.marked ? "'" : ""));
    rows.push_back(std::move(r));
  }
  Json out;
  out["shape"] = t.shape.parts();
  out["marked_shape"] = t.marked_shape.parts();
  out["n"] = t.n;
  out["rows"] = std::move(rows);
  return out;
}

}  // namespace raising
