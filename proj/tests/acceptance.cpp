// One PASS/FAIL line per acceptance criterion, each with its time limit.
#include <algorithm>
#include <chrono>
#include <cstdio>
#include <exception>
#include <functional>
#include <string>

#include "raising/hall_littlewood.hpp"
#include "raising/hyperoctahedral.hpp"
#include "raising/suites.hpp"
#include "raising/tableaux.hpp"
#include "raising/theta.hpp"
#include "raising/type_a.hpp"
#include "raising/type_c.hpp"

using namespace raising;

namespace {

struct Outcome {
  bool ok = true;
  std::string detail;
  std::string counts;
  void require(bool cond, const std::string& what) {
    if (!cond && ok) {
      ok = false;
      detail = what;
    }
  }
  void suite(const std::string& name, const SuiteOptions& opt) {
    SuiteResult r = run_suite(name, opt);
    std::string what = name + " (" + std::to_string(r.failures.size()) + " failures of " +
                       std::to_string(r.instances) + ")";
    if (!r.failures.empty()) what += ": " + r.failures.front().instance + " " + r.failures.front().detail;
    require(r.ok() && r.instances > 0, what);
    counts += (counts.empty() ? "" : ", ") + name + " " + std::to_string(r.instances);
  }
};

int failed = 0;

void criterion(int id, const std::string& name, double limit_s, const std::function<void(Outcome&)>& body) {
  Outcome o;
  auto start = std::chrono::steady_clock::now();
  try {
    body(o);
  } catch (const std::exception& e) {
    o.ok = false;
    o.detail = std::string("exception: ") + e.what();
  }
  double s = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
  if (o.ok && s >= limit_s) {
    o.ok = false;
    o.detail = "too slow";
  }
  if (o.ok) o.detail = o.counts;
  std::printf("%s %2d %-52s %8.3f s (limit %g s)%s%s\n", o.ok ? "PASS" : "FAIL", id, name.c_str(), s, limit_s,
              o.detail.empty() ? "" : "  ", o.detail.c_str());
  std::fflush(stdout);
  if (!o.ok) ++failed;
}

RingElement w_terms(std::vector<std::pair<IntVector, long>> terms, int k) {
  RingElement e(Basis::WMonomial, k);
  for (const auto& [idx, c] : terms) e.add(idx, c);
  return e;
}

RingElement W_terms(std::vector<std::pair<IntVector, long>> terms, int k) {
  RingElement e(Basis::W, k);
  for (const auto& [idx, c] : terms) e.add(idx, c);
  return e;
}

}  // namespace

int main() {
  criterion(1, "W_621 in B^(2)", 1, [](Outcome& o) {
    RingElement expected = w_terms({{{6, 2, 1}, 1}, {{6, 3}, -1}, {{7, 1, 1}, -2}, {{8, 1}, 4}, {{9}, -2}}, 2);
    o.require(giambelli_w({6, 2, 1}, 2) == expected, "expansion differs");
  });

  criterion(2, "w1*W_3211 and w3*W_21 at k=1, rule and ring", 5, [](Outcome& o) {
    RingElement a = W_terms({{{3, 2, 1, 1, 1}, 1}, {{4, 2, 1, 1}, 2}, {{6, 2}, 1}}, 1);
    RingElement b = W_terms({{{6}, 2}, {{5, 1}, 4}, {{4, 2}, 1}, {{4, 1, 1}, 2}, {{3, 2, 1}, 1}}, 1);
    o.require(pieri_w(1, {3, 2, 1, 1}, 1) == a, "rule, first product");
    o.require(pieri_w_oracle(1, {3, 2, 1, 1}, 1) == a, "ring, first product");
    o.require(pieri_w(3, {2, 1}, 1) == b, "rule, second product");
    o.require(pieri_w_oracle(3, {2, 1}, 1) == b, "ring, second product");
  });

  criterion(3, "w7*W_421 and the recursion for W_7421 at k=2", 10, [](Outcome& o) {
    RingElement expected = W_terms({{{7, 4, 2, 1}, 1},
                                    {{8, 3, 2, 1}, 2},
                                    {{8, 4, 2}, 2},
                                    {{9, 2, 2, 1}, 2},
                                    {{9, 3, 1, 1}, 2},
                                    {{9, 3, 2}, 4},
                                    {{10, 2, 1, 1}, 2},
                                    {{10, 2, 2}, 4},
                                    {{10, 3, 1}, 4},
                                    {{11, 2, 1}, 4},
                                    {{11, 3}, 2},
                                    {{12, 2}, 2}},
                                   2);
    o.require(pieri_w(7, {4, 2, 1}, 2) == expected, "rule");
    o.require(pieri_w_oracle(7, {4, 2, 1}, 2) == expected, "ring");
    auto rec = toprow_recursion_w(7, {4, 2, 1}, 2);
    o.require(rec.report.holds, "recursion sides differ");
    std::vector<RecursionTerm> printed{
        {0, {4, 2, 1}, 0}, {1, {3, 2, 1}, 1}, {1, {4, 2}, 1}, {2, {2, 2, 1}, 1}, {2, {3, 1, 1}, 1}, {2, {3, 2}, 2},
        {3, {2, 1, 1}, 1}, {3, {2, 2}, 2},    {3, {3, 1}, 2}, {4, {2, 1}, 2},    {4, {3}, 1},       {5, {2}, 1}};
    o.require(rec.terms.size() == printed.size(), "recursion term count");
    for (const auto& t : printed)
      o.require(std::find(rec.terms.begin(), rec.terms.end(), t) != rec.terms.end(),
                "missing recursion term " + t.mu.to_string());
  });

  criterion(4, "Theta_31(x1,x2;y1) at k=1, three modes, bitableaux", 5, [](Outcome& o) {
    Poly expected(3);
    for (const auto& [e, c] : std::vector<std::pair<Exponent, long>>{{{3, 1, 0}, 4},
                                                                      {{2, 2, 0}, 8},
                                                                      {{1, 3, 0}, 4},
                                                                      {{3, 0, 1}, 2},
                                                                      {{2, 1, 1}, 8},
                                                                      {{1, 2, 1}, 8},
                                                                      {{0, 3, 1}, 2},
                                                                      {{2, 0, 2}, 2},
                                                                      {{1, 1, 2}, 4},
                                                                      {{0, 2, 2}, 2}})
      expected.add(e, c);
    o.require(theta({3, 1}, 1, 2, ThetaMode::Raising) == expected, "raising");
    o.require(theta({3, 1}, 1, 2, ThetaMode::Reduction) == expected, "reduction");
    o.require(theta({3, 1}, 1, 2, ThetaMode::Tableau) == expected, "bitableau");
    auto bt = enumerate_k_bitableaux({3, 1}, 1, 2);
    int by_n[4] = {0, 0, 0, 0};
    for (const auto& b : bt)
      if (b.n >= 0 && b.n <= 3) ++by_n[b.n];
    o.require(bt.size() == 12, "bitableau count " + std::to_string(bt.size()));
    o.require(by_n[3] == 1 && by_n[2] == 7 && by_n[1] == 4, "n statistics");
  });

  criterion(5, "Grassmannian elements and reduced words", 5, [](Outcome& o) {
    using SP = SignedPermutation;
    const std::vector<std::tuple<Partition, int, int, SP>> cases{
        {{8, 5, 2, 1}, 3, 7, SP({1, 4, 7, -5, -2, 3, 6})},
        {{8, 6, 5, 2}, 3, 7, SP({1, 6, 7, -5, -3, -2, 4})},
        {{4, 1}, 1, 3, SP({2, -3, 1})},
    };
    for (const auto& [lambda, k, n, w] : cases) {
      o.require(grassmannian_element(lambda, k, n) == w, "element of " + lambda.to_string());
      o.require(partition_of(w, k) == lambda, "partition of " + w.to_string());
    }
    IntVector word{1, 0, 2, 1, 0, 4, 3, 2, 1, 0, 3, 2, 1, 5, 4, 3, 2, 6, 5, 4, 3};
    o.require(is_reduced_word(word, 7) && SP::from_word(word, 7) == SP({1, 6, 7, -5, -3, -2, 4}), "21-letter word");
    auto words = reduced_words(SP({2, -3, 1}));
    o.require(words == std::vector<IntVector>{{1, 2, 1, 0, 1}, {2, 1, 0, 2, 1}, {2, 1, 2, 0, 1}}, "three words");
    const std::vector<std::pair<IntVector, std::vector<Partition>>> chains{
        {{1, 2, 1, 0, 1}, {{}, {1}, {2}, {3}, {4}, {4, 1}}},
        {{2, 1, 2, 0, 1}, {{}, {1}, {2}, {2, 1}, {3, 1}, {4, 1}}},
        {{2, 1, 0, 2, 1}, {{}, {1}, {1, 1}, {2, 1}, {3, 1}, {4, 1}}},
    };
    for (const auto& [wd, chain] : chains) {
      UnimodalFactorization f;
      for (int a : wd) f.factors.push_back(SP::generator(a, 3));
      o.require(factorization_chain(f, {}, 1, 3) == chain, "tableau of word");
    }
    o.require(count_standard_k_tableaux({4, 1}, {}, 1) == 3, "standard 1-tableaux of (4,1)");
  });

  criterion(6, "Pieri rule equals Giambelli products, types A, HL, C", 360, [](Outcome& o) {
    auto timed = [&](const std::string& name, const SuiteOptions& opt) {
      auto start = std::chrono::steady_clock::now();
      o.suite(name, opt);
      double s = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
      o.require(s < 120, name + " over 2 min");
    };
    timed("pieri-a", SuiteOptions{std::nullopt, 8, 4});
    timed("pieri-hl", SuiteOptions{std::nullopt, 6, 3});
    timed("pieri-c", SuiteOptions{std::nullopt, 8, 4, 4});
  });

  criterion(7, "mirror identities", 120, [](Outcome& o) {
    o.suite("mirror-hl", SuiteOptions{std::nullopt, 6});
    o.suite("mirror-c", SuiteOptions{std::nullopt, 7});
    o.suite("mirror-schur", SuiteOptions{std::nullopt, 6});
  });

  criterion(8, "Jacobi-Trudi and Pfaffian", 60, [](Outcome& o) {
    o.suite("jacobi-trudi", SuiteOptions{std::nullopt, 8});
    o.suite("pfaffian", SuiteOptions{std::nullopt, 10, -1, 4});
  });

  criterion(9, "skew F, compatible pairs, standard tableaux, words", 60, [](Outcome& o) {
    o.suite("abprop", SuiteOptions{1, -1, -1, -1, 3, 4});
    o.suite("stdcor", SuiteOptions{std::nullopt, 6, -1, -1, -1, 4});
  });

  criterion(10, "splitting identities and vanishing skew F", 60, [](Outcome& o) {
    o.suite("master", SuiteOptions{std::nullopt, 5, -1, -1, 2});
    o.require(skew_f({3, 2}, {3}, 1, 3).is_zero(), "F_(3,2)/(3)");
    o.require(skew_f({5, 4, 1, 1}, {4, 3}, 1, 3).is_zero(), "F_(5,4,1,1)/(4,3)");
  });

  criterion(11, "nilCoxeter commutation and theta = Schubert", 60, [](Outcome& o) {
    o.suite("nilcoxeter", SuiteOptions{std::nullopt, -1, -1, -1, -1, 4});
    o.suite("tseq", SuiteOptions{std::nullopt, -1, -1, -1, 2, 4});
  });

  std::printf("%s\n", failed == 0 ? "all criteria pass" : (std::to_string(failed) + " criteria fail").c_str());
  return failed == 0 ? 0 : 1;
}
