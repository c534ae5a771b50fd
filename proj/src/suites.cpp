#include "raising/suites.hpp"

#include <algorithm>
#include <functional>
#include <map>
#include <set>
#include <stdexcept>

#include "raising/hall_littlewood.hpp"
#include "raising/hyperoctahedral.hpp"
#include "raising/k_strips.hpp"
#include "raising/tableaux.hpp"
#include "raising/theta.hpp"
#include "raising/type_a.hpp"
#include "raising/type_c.hpp"

namespace raising {

namespace {

int or_default(int v, int d) { return v < 0 ? d : v; }

std::vector<int> ks_or(const SuiteOptions& opt, std::vector<int> d) {
  if (opt.k) return {*opt.k};
  return d;
}

void check(SuiteResult& r, bool ok, const std::string& instance, const std::function<std::string()>& detail) {
  ++r.instances;
  if (!ok) r.failures.push_back({instance, detail()});
}

void check_equal(SuiteResult& r, const RingElement& a, const RingElement& b, const std::string& instance) {
  check(r, a == b, instance, [&] { return "difference: " + (a - b).to_string(); });
}

void check_report(SuiteResult& r, const IdentityReport& rep, const std::string& instance) {
  check(r, rep.holds, instance, [&] { return rep.identity + " difference: " + (rep.lhs - rep.rhs).to_string(); });
}

void check_poly(SuiteResult& r, const Poly& a, const Poly& b, const std::string& instance) {
  check(r, a == b, instance, [&] { return "difference: " + (a - b).to_string(variable_names("z", a.nvars())); });
}

std::vector<Partition> partitions_up_to(int size, int max_length = -1) {
  std::vector<Partition> out;
  for (int n = 0; n <= size; ++n)
    for (auto& p : partitions_of(n, -1, max_length)) out.push_back(p);
  return out;
}

std::vector<Partition> k_strict_up_to(int size, int k, int max_length = -1) {
  std::vector<Partition> out;
  for (int n = 0; n <= size; ++n)
    for (auto& p : k_strict_partitions_of(n, k, max_length)) out.push_back(p);
  return out;
}

std::string tag(const Partition& lambda, std::optional<int> k = std::nullopt, std::optional<int> p = std::nullopt) {
  std::string s = "lambda=" + lambda.to_string();
  if (k) s += " k=" + std::to_string(*k);
  if (p) s += " p=" + std::to_string(*p);
  return s;
}

SuiteResult pieri_a(const SuiteOptions& opt) {
  SuiteResult r{"pieri-a", 0, {}};
  for (const auto& lambda : partitions_up_to(or_default(opt.max_size, 8)))
    for (int p = 1; p <= or_default(opt.max_p, 4); ++p)
      check_equal(r, pieri_u(p, lambda), pieri_u_oracle(p, lambda), tag(lambda, {}, p));
  return r;
}

SuiteResult pieri_hl(const SuiteOptions& opt) {
  SuiteResult r{"pieri-hl", 0, {}};
  for (const auto& lambda : partitions_up_to(or_default(opt.max_size, 6)))
    for (int p = 1; p <= or_default(opt.max_p, 3); ++p)
      check_equal(r, pieri_v(p, lambda), pieri_v_oracle(p, lambda), tag(lambda, {}, p));
  return r;
}

SuiteResult pieri_c(const SuiteOptions& opt) {
  SuiteResult r{"pieri-c", 0, {}};
  for (int k : ks_or(opt, {0, 1, 2}))
    for (const auto& lambda : k_strict_up_to(or_default(opt.max_size, 8), k, or_default(opt.max_length, 4)))
      for (int p = 1; p <= or_default(opt.max_p, 4); ++p)
        check_equal(r, pieri_w(p, lambda, k), pieri_w_oracle(p, lambda, k), tag(lambda, k, p));
  return r;
}

SuiteResult mirror_a(const SuiteOptions& opt) {
  SuiteResult r{"mirror-a", 0, {}};
  for (const auto& lambda : partitions_up_to(or_default(opt.max_size, 6)))
    for (const auto& rep : mirror_u(lambda).instances) check_report(r, rep, tag(lambda) + " " + rep.identity);
  return r;
}

SuiteResult mirror_hl(const SuiteOptions& opt) {
  SuiteResult r{"mirror-hl", 0, {}};
  for (const auto& lambda : partitions_up_to(or_default(opt.max_size, 6)))
    check_report(r, mirror_v(lambda), tag(lambda));
  return r;
}

SuiteResult mirror_c(const SuiteOptions& opt) {
  SuiteResult r{"mirror-c", 0, {}};
  for (int k : ks_or(opt, {0, 1, 2}))
    for (const auto& lambda : k_strict_up_to(or_default(opt.max_size, 7), k))
      check_report(r, mirror_w(lambda, k), tag(lambda, k));
  return r;
}

using StripSet = std::set<std::pair<Partition, int>>;

StripSet strips_of(const Partition& lambda, int k) {
  StripSet s;
  for (const auto& t : k_strips_below(lambda, k)) s.emplace(t.mu, t.n);
  return s;
}

// mu inside lambda with lambda/mu in the rim, n = edge components.
StripSet rim_strips(const Partition& lambda) {
  StripSet s;
  for (const auto& mu : subpartitions(lambda)) {
    auto boxes = skew_boxes(lambda, mu);
    if (std::all_of(boxes.begin(), boxes.end(), [&](const Box& b) { return in_rim(lambda, b); }))
      s.emplace(mu, static_cast<int>(box_components(boxes, false).size()));
  }
  return s;
}

StripSet shifted_rim_strips(const Partition& lambda) {
  auto sh = shifted_boxes(lambda);
  std::set<Box> shape(sh.begin(), sh.end());
  StripSet s;
  for (const auto& mu : subpartitions(lambda)) {
    if (!is_strict(mu)) continue;
    auto boxes = shifted_skew_boxes(lambda, mu);
    if (std::all_of(boxes.begin(), boxes.end(), [&](const Box& b) { return !shape.count({b.row + 1, b.col + 1}); }))
      s.emplace(mu, static_cast<int>(box_components(boxes, false).size()));
  }
  return s;
}

SuiteResult mirror_schur(const SuiteOptions& opt) {
  SuiteResult r{"mirror-schur", 0, {}};
  const int size = or_default(opt.max_size, 6);
  for (const auto& lambda : partitions_up_to(size)) {
    check_report(r, mirror_u(lambda, lambda.size()).instances.front(), tag(lambda) + " t=0");
    const int big = lambda.size() + 1;
    check_report(r, mirror_w(lambda, big), tag(lambda, big));
    check(r, strips_of(lambda, big) == rim_strips(lambda), tag(lambda, big) + " rim strips",
          [] { return "strips differ from rim subsets"; });
    if (!is_strict(lambda)) continue;
    check_report(r, mirror_w(lambda, 0), tag(lambda, 0));
    check(r, strips_of(lambda, 0) == shifted_rim_strips(lambda), tag(lambda, 0) + " shifted rim strips",
          [] { return "strips differ from shifted rim subsets"; });
  }
  return r;
}

SuiteResult jacobi_trudi(const SuiteOptions& opt) {
  SuiteResult r{"jacobi-trudi", 0, {}};
  for (const auto& lambda : partitions_up_to(or_default(opt.max_size, 8)))
    check_equal(r, giambelli_u(lambda.parts()), jacobi_trudi_u(lambda.parts()), tag(lambda));
  return r;
}

SuiteResult pfaffian(const SuiteOptions& opt) {
  SuiteResult r{"pfaffian", 0, {}};
  for (int n = 0; n <= or_default(opt.max_size, 10); ++n)
    for (const auto& lambda : strict_partitions_of(n, or_default(opt.max_length, 4)))
      check_equal(r, pfaffian_w(lambda.parts()), giambelli_w(lambda, 0), tag(lambda, 0));
  return r;
}

SuiteResult recursion(const SuiteOptions& opt) {
  SuiteResult r{"recursion", 0, {}};
  const int size = or_default(opt.max_size, 5);
  for (const auto& lambda : partitions_up_to(size))
    for (int p = lambda.row(1); p <= lambda.row(1) + 2; ++p)
      check_report(r, toprow_recursion_u(p, lambda), tag(lambda, {}, p));
  for (int k : ks_or(opt, {0, 1, 2}))
    for (const auto& lambda : k_strict_up_to(std::min(size, 4), k)) {
      const int p0 = std::max(lambda.row(1) + 1, lambda.length() + 2 * k);
      for (int p = p0; p <= p0 + 1; ++p) check_report(r, toprow_recursion_w(p, lambda, k).report, tag(lambda, k, p));
    }
  return r;
}

SuiteResult tableau_theta(const SuiteOptions& opt) {
  SuiteResult r{"tableau-theta", 0, {}};
  const int m = or_default(opt.m, 2);
  for (int k : ks_or(opt, {0, 1, 2}))
    for (const auto& lambda : k_strict_up_to(or_default(opt.max_size, 5), k)) {
      Poly a = theta(lambda, k, m, ThetaMode::Raising);
      check_poly(r, a, theta(lambda, k, m, ThetaMode::Tableau), tag(lambda, k) + " tableau");
      check_poly(r, a, theta(lambda, k, m, ThetaMode::Reduction), tag(lambda, k) + " reduction");
    }
  return r;
}

SuiteResult master(const SuiteOptions& opt) {
  SuiteResult r{"master", 0, {}};
  const int m = or_default(opt.m, 2);
  for (int k : ks_or(opt, {0, 1, 2}))
    for (const auto& lambda : k_strict_up_to(or_default(opt.max_size, 5), k))
      for (const auto& id : master_identities(lambda, k, m, m))
        check_poly(r, id.lhs, id.rhs, tag(lambda, k) + " " + id.name);
  return r;
}

// Smallest m such that every strict partition of degree d has length <= m.
int q_variables(int d) {
  int l = 0;
  while ((l + 1) * (l + 2) / 2 <= d) ++l;
  return std::max(l, 1);
}

void check_q_nonnegative(SuiteResult& r, const SignedPermutation& w, const std::string& instance) {
  const int mq = q_variables(w.length());
  auto q = q_expansion(stanley_c(w, mq), mq);
  bool ok = std::all_of(q.begin(), q.end(), [](const auto& t) { return t.second >= 0; });
  check(r, ok, instance + " Q-expansion", [&] {
    std::string s = "negative Q-coefficient:";
    for (const auto& [mu, c] : q) s += " " + mu.to_string() + ":" + c.get_str();
    return s;
  });
}

SuiteResult abprop(const SuiteOptions& opt) {
  SuiteResult r{"abprop", 0, {}};
  const int n = or_default(opt.n, 4), m = or_default(opt.m, 3);
  for (int k : ks_or(opt, {1})) {
    auto parts = grassmannian_partitions(k, n);
    for (const auto& lambda : parts)
      for (const auto& mu : parts) {
        if (!lambda.contains(mu)) continue;
        const std::string inst = tag(lambda, k) + " mu=" + mu.to_string();
        Poly f = skew_f(lambda, mu, k, m);
        bool nonzero = !f.is_zero(), compat = compatible_pair(lambda, mu, k, n),
             has_std = count_standard_k_tableaux(lambda, mu, k) > 0;
        check(r, nonzero == compat && compat == has_std, inst, [&] {
          return "skew_f nonzero=" + std::to_string(nonzero) + " compatible=" + std::to_string(compat) +
                 " standard tableau=" + std::to_string(has_std);
        });
        if (!compat) continue;
        SignedPermutation w = skew_element(lambda, mu, k, n);
        check_poly(r, f, stanley_c(w, m), inst + " F_w");
        check_q_nonnegative(r, w, inst);
      }
  }
  return r;
}

SuiteResult stdcor(const SuiteOptions& opt) {
  SuiteResult r{"stdcor", 0, {}};
  const int n = or_default(opt.n, 4), max_len = or_default(opt.max_size, 6);
  for (int k : ks_or(opt, {1, 2})) {
    auto parts = grassmannian_partitions(k, n);
    std::set<SignedPermutation> seen;
    for (const auto& lambda : parts)
      for (const auto& mu : parts) {
        if (!lambda.contains(mu) || !compatible_pair(lambda, mu, k, n)) continue;
        const int len = lambda.size() - mu.size();
        if (len > max_len) continue;
        const std::string inst = tag(lambda, k) + " mu=" + mu.to_string();
        SignedPermutation w = skew_element(lambda, mu, k, n);
        check(r, is_skew(w, k, n).has_value(), inst + " skew", [] { return "not recognised as skew"; });
        Integer words = count_reduced_words(w), tabs = count_standard_k_tableaux(lambda, mu, k);
        Integer lin = 0;
        if (len > 0) {
          lin = stanley_c(w, len).coeff(Exponent(len, 1));
          lin /= Integer(1) << len;
        } else {
          lin = 1;
        }
        check(r, words == tabs && tabs == lin, inst, [&] {
          return "reduced words " + words.get_str() + ", standard tableaux " + tabs.get_str() +
                 ", squarefree coefficient / 2^r " + lin.get_str();
        });
        if (seen.insert(w).second) check_q_nonnegative(r, w, inst);
      }
  }
  return r;
}

SuiteResult nilcoxeter(const SuiteOptions& opt) {
  SuiteResult r{"nilcoxeter", 0, {}};
  for (int n = 1; n <= or_default(opt.n, 4); ++n) {
    check(r, nilcoxeter_relations_hold(n), "relations n=" + std::to_string(n), [] { return "relation fails"; });
    check(r, c_factors_commute(n), "C(x1)C(x2) n=" + std::to_string(n), [] { return "factors do not commute"; });
  }
  return r;
}

SuiteResult tseq(const SuiteOptions& opt) {
  SuiteResult r{"tseq", 0, {}};
  const int n = or_default(opt.n, 4);
  for (int k : ks_or(opt, {0, 1, 2}))
    for (const auto& lambda : grassmannian_partitions(k, n))
      for (int m = 0; m <= or_default(opt.m, 2); ++m) {
        Poly bh = schubert_bh(grassmannian_element(lambda, k, n), m);
        std::vector<int> map(m + k);
        for (int i = 0; i < m + k; ++i) map[i] = i;
        Poly th = theta(lambda, k, m, ThetaMode::Raising).embed(m + n - 1, map);
        check_poly(r, bh, th, tag(lambda, k) + " m=" + std::to_string(m));
      }
  return r;
}

using SuiteFn = SuiteResult (*)(const SuiteOptions&);

const std::map<std::string, SuiteFn>& registry() {
  static const std::map<std::string, SuiteFn> r{
      {"abprop", abprop},           {"jacobi-trudi", jacobi_trudi},   {"master", master},
      {"mirror-a", mirror_a},       {"mirror-c", mirror_c},           {"mirror-hl", mirror_hl},
      {"mirror-schur", mirror_schur}, {"nilcoxeter", nilcoxeter},     {"pfaffian", pfaffian},
      {"pieri-a", pieri_a},         {"pieri-c", pieri_c},             {"pieri-hl", pieri_hl},
      {"recursion", recursion},     {"stdcor", stdcor},               {"tableau-theta", tableau_theta},
      {"tseq", tseq},
  };
  return r;
}

}  // namespace

std::vector<std::string> suite_names() {
  std::vector<std::string> out;
  for (const auto& [name, fn] : registry()) out.push_back(name);
  return out;
}

SuiteResult run_suite(const std::string& name, const SuiteOptions& opt) {
  auto it = registry().find(name);
  if (it == registry().end()) throw std::invalid_argument("unknown suite '" + name + "'");
  return it->second(opt);
}

}  // namespace raising
