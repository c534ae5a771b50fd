#include <doctest.h>

#include <functional>
#include <random>

#include "raising/pfaffian.hpp"
#include "raising/polynomial.hpp"
#include "raising/raising_operator.hpp"
#include "raising/ring_element.hpp"
#include "raising/serialize.hpp"
#include "raising/type_a.hpp"
#include "raising/type_c.hpp"

using namespace raising;

namespace {

TPoly random_tpoly(std::mt19937& rng) {
  std::uniform_int_distribution<int> deg(0, 4), coef(-50, 50);
  std::vector<Integer> c(deg(rng) + 1);
  for (auto& x : c) x = coef(rng);
  return TPoly(c);
}

Poly random_poly(std::mt19937& rng, int nvars) {
  std::uniform_int_distribution<int> e(0, 3), coef(-20, 20), terms(0, 5);
  Poly p(nvars);
  for (int i = terms(rng); i > 0; --i) {
    Exponent x(nvars);
    for (auto& v : x) v = e(rng);
    p.add(x, coef(rng));
  }
  return p;
}

// Sums prod_{i<j} c_{f_ij}(n_ij) over all exponent matrices n_ij <= |alpha|
// directly, with no column ordering or state merging.
RingElement brute_force_raising(const FactorSpec& spec, const IntVector& alpha, Basis target) {
  const int L = spec.length();
  std::vector<std::pair<int, int>> pairs;
  for (int i = 1; i <= L; ++i)
    for (int j = i + 1; j <= L; ++j) pairs.push_back({i, j});
  int bound = 0;
  for (int a : alpha) bound += std::max(a, 0);
  RingElement out(target);
  std::vector<int> n(pairs.size(), 0);
  std::function<void(size_t)> rec = [&](size_t p) {
    if (p == pairs.size()) {
      IntVector nu = alpha;
      nu.resize(L, 0);
      TPoly c = 1;
      for (size_t q = 0; q < pairs.size(); ++q) {
        nu[pairs[q].first - 1] += n[q];
        nu[pairs[q].second - 1] -= n[q];
        c *= factor_coefficient(spec.at(pairs[q].first, pairs[q].second), n[q]);
        if (c.is_zero()) return;
      }
      out.add(nu, c);
      return;
    }
    for (n[p] = 0; n[p] <= bound; ++n[p]) rec(p + 1);
    n[p] = 0;
  };
  rec(0);
  return out;
}

}  // namespace

TEST_CASE("TPoly arithmetic") {
  TPoly t = TPoly::t();
  CHECK((1 - t) * (1 + t) == 1 - t.pow(2));
  CHECK((1 - t.pow(2)).to_string() == "1 - t^2");
  CHECK((TPoly(-2) * t).to_string() == "-2t");
  CHECK(TPoly().to_string() == "0");
  CHECK((t - t).is_zero());
  CHECK((t.pow(3) - 2 * t).degree() == 3);
  CHECK((1 - t).pow(3).evaluate(2) == -1);
  std::mt19937 rng(12345);
  for (int i = 0; i < 200; ++i) {
    TPoly a = random_tpoly(rng), b = random_tpoly(rng), c = random_tpoly(rng);
    CHECK((a + b) + c == a + (b + c));
    CHECK(a * (b + c) == a * b + a * c);
    CHECK((a * b) * c == a * (b * c));
    CHECK(a - a == TPoly());
  }
  // Arbitrary precision.
  TPoly big = TPoly(Integer("123456789012345678901234567890"));
  CHECK((big * big).constant() == Integer("15241578753238836750495351562536198787501905199875019052100"));
}

TEST_CASE("Poly arithmetic") {
  std::mt19937 rng(777);
  for (int i = 0; i < 200; ++i) {
    Poly a = random_poly(rng, 3), b = random_poly(rng, 3), c = random_poly(rng, 3);
    CHECK((a + b) + c == a + (b + c));
    CHECK(a * (b + c) == a * b + a * c);
    CHECK((a * b) * c == a * (b * c));
  }
  Poly x = Poly::variable(2, 0), y = Poly::variable(2, 1);
  Poly f = (x + y).pow(2);
  CHECK(f.coeff({1, 1}) == 2);
  CHECK(f.is_homogeneous());
  CHECK(f.total_degree() == 2);
  CHECK(f.substitute(1, 0) == x * x);
  CHECK(f.coefficient_of_power(0, 1) == Integer(2) * y);
  CHECK(f.to_string({"x1", "x2"}) == "x1^2 + 2*x1*x2 + x2^2");
  CHECK(f.drop_variables(1, 1) == Poly::variable(1, 0).pow(2));
  Poly capped(2, 2);
  capped += Poly::monomial(2, {2, 1}, 5);
  CHECK(capped.is_zero());
}

TEST_CASE("generating series") {
  // q-series, one variable: q_r = x^r (1 - t).
  auto q = series_coefficients(Series::Q, SeriesLayout{2, 0, 1, 1, 1}, 4);
  Poly x = Poly::variable(2, 0), t = Poly::variable(2, 1);
  CHECK(q[0] == Poly::constant(2, 1));
  for (int r = 1; r <= 4; ++r) CHECK(q[r] == x.pow(r) * (Poly::constant(2, 1) - t));
  auto th = series_coefficients(Series::Theta, SeriesLayout{1, 0, 1, 1, 0}, 4);
  for (int r = 1; r <= 4; ++r) CHECK(th[r] == Integer(2) * Poly::variable(1, 0).pow(r));
  auto h = series_coefficients(Series::H, SeriesLayout{2, 0, 2, 2, 0}, 2);
  Poly x1 = Poly::variable(2, 0), x2 = Poly::variable(2, 1);
  CHECK(h[2] == x1 * x1 + x1 * x2 + x2 * x2);
  auto e = series_coefficients(Series::E, SeriesLayout{2, 0, 2, 2, 0}, 3);
  CHECK(e[2] == x1 * x2);
  CHECK(e[3].is_zero());
}

TEST_CASE("factor series coefficients") {
  TPoly t = TPoly::t();
  CHECK(factor_coefficient(Factor::HallLittlewood, 0) == 1);
  CHECK(factor_coefficient(Factor::HallLittlewood, 1) == t - 1);
  CHECK(factor_coefficient(Factor::HallLittlewood, 3) == t.pow(3) - t.pow(2));
  CHECK(factor_coefficient(Factor::TypeC, 1) == -2);
  CHECK(factor_coefficient(Factor::TypeC, 2) == 2);
  CHECK(factor_coefficient(Factor::InverseOnePlusR, 3) == -1);
  CHECK(factor_coefficient(Factor::OneMinusR, 2) == 0);
  CHECK(factor_coefficient(Factor::InverseOneMinusR, 5) == 1);
  // (1 - R)/(1 - tR) times its inverse is 1.
  for (int n = 1; n <= 5; ++n) {
    TPoly s;
    for (int a = 0; a <= n; ++a)
      s += factor_coefficient(Factor::HallLittlewood, a) * factor_coefficient(Factor::HallLittlewoodInverse, n - a);
    CHECK(s.is_zero());
    TPoly c;
    for (int a = 0; a <= n; ++a)
      c += factor_coefficient(Factor::TypeC, a) * factor_coefficient(Factor::OnePlusR, n - a);
    CHECK(c == (n == 1 ? TPoly(-1) : TPoly()));
  }
}

TEST_CASE("raising operator expansion: printed examples") {
  CHECK(expand_raising(FactorSpec(2, Factor::OneMinusR), {2, 1}, Basis::UMonomial) ==
        RingElement::monomial(Basis::UMonomial, {2, 1}) - RingElement::monomial(Basis::UMonomial, {3}));
  RingElement w = expand_raising(FactorSpec::type_c(3, cset({6, 2, 1}, 2)), {6, 2, 1}, Basis::WMonomial, 2);
  RingElement expected(Basis::WMonomial, 2);
  expected.add({6, 2, 1}, 1);
  expected.add({6, 3}, -1);
  expected.add({7, 1, 1}, -2);
  expected.add({8, 1}, 4);
  expected.add({9}, -2);
  CHECK(w == expected);
  CHECK(w.to_string() == "w[6,2,1] - w[6,3] - 2*w[7,1,1] + 4*w[8,1] - 2*w[9]");
  CHECK(expand_raising(FactorSpec(3, Factor::One), {1, 3, 2}, Basis::UMonomial) ==
        RingElement::monomial(Basis::UMonomial, {3, 2, 1}));
  CHECK_THROWS_AS(expand_raising(FactorSpec(1, Factor::OneMinusR), {2, 1}, Basis::UMonomial), std::invalid_argument);
  CHECK_THROWS_AS(expand_raising(FactorSpec(2, Factor::HallLittlewood), {2, 1}, Basis::UMonomial),
                  std::invalid_argument);
}

TEST_CASE("raising operator expansion against brute force") {
  const std::vector<Factor> kinds{Factor::One,          Factor::OneMinusR,      Factor::HallLittlewood,
                                  Factor::HallLittlewoodInverse, Factor::InverseOnePlusR, Factor::TypeC,
                                  Factor::OnePlusR,     Factor::InverseOneMinusR};
  std::mt19937 rng(2024);
  std::uniform_int_distribution<int> kind(0, static_cast<int>(kinds.size()) - 1), len(1, 4), entry(-1, 2);
  for (int trial = 0; trial < 150; ++trial) {
    int L = len(rng);
    FactorSpec spec(L, Factor::One);
    for (int i = 1; i <= L; ++i)
      for (int j = i + 1; j <= L; ++j) spec.set(i, j, kinds[kind(rng)]);
    IntVector alpha(L);
    for (auto& a : alpha) a = entry(rng);
    Basis target = spec.uses_t() ? Basis::VMonomial : Basis::UMonomial;
    CHECK(expand_raising(spec, alpha, target) == brute_force_raising(spec, alpha, target));
  }
}

TEST_CASE("memo table is transparent") {
  clear_raising_memo();
  const size_t old = raising_memo_limit();
  FactorSpec spec = FactorSpec::type_c(4, {{1, 2}, {1, 3}});
  RingElement cached = expand_raising(spec, {5, 3, 2, 1}, Basis::WMonomial, 1);
  CHECK(raising_memo_size() > 0);
  CHECK(expand_raising(spec, {5, 3, 2, 1}, Basis::WMonomial, 1) == cached);
  set_raising_memo_limit(0);
  clear_raising_memo();
  CHECK(expand_raising(spec, {5, 3, 2, 1}, Basis::WMonomial, 1) == cached);
  CHECK(raising_memo_size() == 0);
  set_raising_memo_limit(old);
}

TEST_CASE("monomial products") {
  RingElement u21 = RingElement::monomial(Basis::UMonomial, {2, 1});
  CHECK(multiply_monomial(u21, 3) == RingElement::monomial(Basis::UMonomial, {3, 2, 1}));
  CHECK(multiply_monomial(RingElement(Basis::UMonomial), 3).is_zero());
  RingElement e = RingElement::monomial(Basis::UMonomial, {2}) - RingElement::monomial(Basis::UMonomial, {1, 1});
  CHECK(multiply_monomial(e, 1) == u21 - RingElement::monomial(Basis::UMonomial, {1, 1, 1}));
  CHECK_THROWS_AS(multiply_monomial(u21, -1), std::invalid_argument);
  CHECK(RingElement::monomial(Basis::UMonomial, {2, -1}).is_zero());
  CHECK(RingElement::monomial(Basis::UMonomial, {0, 2, 0, 3}) == RingElement::monomial(Basis::UMonomial, {3, 2}));
}

TEST_CASE("index order extends dominance") {
  IndexOrder less;
  for (int n = 1; n <= 8; ++n) {
    auto ps = partitions_of(n);
    for (const auto& a : ps)
      for (const auto& b : ps)
        if (a != b && dominates(a.parts(), b.parts())) CHECK(less(b.parts(), a.parts()));
  }
  CHECK(less({9}, {1, 1, 1, 1, 1, 1, 1, 1, 1, 1}));  // degree first
}

TEST_CASE("unitriangular basis change") {
  RingElement u11 = RingElement::monomial(Basis::UMonomial, {1, 1});
  RingElement expected(Basis::U);
  expected.add({1, 1}, 1);
  expected.add({2}, 1);
  CHECK(to_U_basis(u11) == expected);
  for (int p = 0; p <= 6; ++p)
    for (int k = 0; k <= 2; ++k)
      CHECK(to_W_basis(RingElement::monomial(Basis::WMonomial, {p}, 1, k), k) ==
            RingElement::monomial(Basis::W, {p}, 1, k));
  for (const auto& lambda : partitions_of(6)) {
    RingElement U = giambelli_u(lambda.parts());
    CHECK(to_U_basis(U) == RingElement::monomial(Basis::U, lambda.parts()));
  }
  // A non-unitriangular expansion is rejected.
  ExpansionFn bad = [](const IntVector& idx) { return RingElement::monomial(Basis::UMonomial, idx, 2); };
  CHECK_THROWS(change_basis_unitriangular(u11, Basis::U, bad));
}

TEST_CASE("Pfaffian") {
  auto mul = [](long a, long b) { return a * b; };
  CHECK(pfaffian<long>({{0, 7}, {-7, 0}}, 0, 1, mul) == 7);
  // Generic 4x4 with entries M12..M34 as variables.
  std::vector<Poly> v;
  for (int i = 0; i < 6; ++i) v.push_back(Poly::variable(6, i));
  Poly z(6);
  std::vector<std::vector<Poly>> m{{z, v[0], v[1], v[2]}, {-v[0], z, v[3], v[4]}, {-v[1], -v[3], z, v[5]},
                                   {-v[2], -v[4], -v[5], z}};
  auto pmul = [](const Poly& a, const Poly& b) { return a * b; };
  CHECK(pfaffian(m, z, Poly::constant(6, 1), pmul) == v[0] * v[5] - v[1] * v[4] + v[2] * v[3]);
  CHECK_THROWS_AS(pfaffian<long>({{0, 1, 2}, {-1, 0, 3}, {-2, -3, 0}}, 0, 1, mul), std::invalid_argument);
  CHECK_THROWS_AS(pfaffian<long>({{0, 1}, {1, 0}}, 0, 1, mul), std::invalid_argument);
}

TEST_CASE("JSON serialization") {
  RingElement e(Basis::V);
  e.add({2}, 1 - TPoly::t());
  e.add({1, 1}, 1);
  Json j = to_json(e);
  CHECK(j.dump() ==
        R"({"basis":"V","k":null,"terms":[{"index":[1,1],"coeff":[1]},{"index":[2],"coeff":[1,-1]}]})");
  CHECK(ring_element_from_json(j) == e);
  RingElement big(Basis::WMonomial, 1);
  big.add({3}, TPoly(Integer("99999999999999999999999")));
  Json jb = to_json(big);
  CHECK(jb["terms"][0]["coeff"][0] == "99999999999999999999999");
  CHECK(ring_element_from_json(jb) == big);
  Poly p = Poly::monomial(2, {1, 2}, 3);
  CHECK(to_json(p, {"x1", "x2"}).dump() == R"({"variables":["x1","x2"],"terms":[{"exponent":[1,2],"coeff":3}]})");
}
