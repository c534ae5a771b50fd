#include "raising/cli.hpp"

#include <CLI11.hpp>
#include <algorithm>
#include <optional>
#include <sstream>

#include "raising/hall_littlewood.hpp"
#include "raising/hyperoctahedral.hpp"
#include "raising/k_strips.hpp"
#include "raising/serialize.hpp"
#include "raising/suites.hpp"
#include "raising/tableaux.hpp"
#include "raising/theta.hpp"
#include "raising/type_a.hpp"
#include "raising/type_c.hpp"

namespace raising {

namespace {

constexpr int kIdentityFailure = 1;
constexpr int kUsageError = 2;

// Raised for inputs that parse but make no sense; reported with the flag.
struct UsageError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct Args {
  std::string ring = "a";
  int k = 0;
  int p = 0;
  int m = 2;
  int mprime = 2;
  int n = 0;
  long t = 0;
  std::string index, lambda, mu, w, d, mode = "raising", type = "c", format = "text", suite;
  bool check = false, count = false, standard = false;
  int max_size = -1, max_p = -1, max_length = -1;
};

class Runner {
 public:
  Runner(std::ostream& out, std::ostream& err) : out_(out), err_(err) {}
  int run(const std::vector<std::string>& args);

 private:
  bool given(const std::string& flag) const { return sub_->count(flag) > 0; }
  bool json() const { return a_.format == "json"; }
  void need(const std::string& flag) const {
    if (!given(flag)) throw UsageError(flag + " is required");
  }
  std::optional<int> k_opt() const { return given("--k") ? std::optional<int>(a_.k) : std::nullopt; }
  int need_k() const {
    need("--k");
    if (a_.k < 0) throw UsageError("--k must be nonnegative");
    return a_.k;
  }
  Partition partition_flag(const std::string& flag, const std::string& text) const;
  IntVector vector_flag(const std::string& flag, const std::string& text) const;
  SignedPermutation permutation_flag() const;
  Partition k_strict_flag(const std::string& flag, const std::string& text, int k) const;

  void emit(const RingElement& e);
  void emit(const Poly& p, const std::vector<std::string>& names);
  int emit(const std::vector<IdentityReport>& reps);

  int giambelli();
  int pieri();
  int mirror();
  int recursion();
  int theta_cmd();
  int skew_f_cmd();
  int qexpand();
  int tableaux();
  int bitableaux();
  int stanley();
  int schubert();
  int grassmannian();
  int reduced_words_cmd();
  int skew_check();
  int verify();

  std::ostream& out_;
  std::ostream& err_;
  Args a_;
  CLI::App* sub_ = nullptr;
};

Partition Runner::partition_flag(const std::string& flag, const std::string& text) const {
  try {
    return Partition(parse_int_list(text));
  } catch (const std::invalid_argument& e) {
    throw UsageError(flag + ": " + e.what());
  }
}

IntVector Runner::vector_flag(const std::string& flag, const std::string& text) const {
  try {
    return parse_int_list(text);
  } catch (const std::invalid_argument& e) {
    throw UsageError(flag + ": " + e.what());
  }
}

Partition Runner::k_strict_flag(const std::string& flag, const std::string& text, int k) const {
  Partition p = partition_flag(flag, text);
  if (!is_k_strict(p, k)) throw UsageError(flag + ": " + p.to_string() + " is not " + std::to_string(k) + "-strict");
  return p;
}

SignedPermutation Runner::permutation_flag() const {
  need("--w");
  try {
    return parse_signed_permutation(a_.w);
  } catch (const std::invalid_argument& e) {
    throw UsageError(std::string("--w: ") + e.what());
  }
}

void Runner::emit(const RingElement& e) {
  if (json())
    out_ << to_json(e).dump() << "\n";
  else
    out_ << e.to_string() << "\n";
}

void Runner::emit(const Poly& p, const std::vector<std::string>& names) {
  if (json())
    out_ << to_json(p, names).dump() << "\n";
  else
    out_ << p.to_string(names) << "\n";
}

int Runner::emit(const std::vector<IdentityReport>& reps) {
  bool ok = true;
  if (json()) {
    Json arr = Json::array();
    for (const auto& r : reps) arr.push_back(to_json(r));
    out_ << arr.dump() << "\n";
  }
  for (const auto& r : reps) {
    ok = ok && r.holds;
    if (json()) continue;
    out_ << r.identity << ": " << (r.holds ? "holds" : "FAILS") << "\n";
    if (!r.holds) out_ << "  difference: " << (r.lhs - r.rhs).to_string() << "\n";
  }
  return ok ? 0 : kIdentityFailure;
}

int Runner::giambelli() {
  need("--index");
  IntVector alpha = vector_flag("--index", a_.index);
  if (a_.ring == "a") {
    emit(giambelli_u(alpha));
  } else if (a_.ring == "hl") {
    RingElement e = giambelli_v(alpha);
    emit(given("--t") ? e.specialize_t(Integer(a_.t)) : e);
  } else {
    int k = need_k();
    if (given("--D")) {
      PairSet d;
      try {
        d = parse_pair_set(a_.d);
      } catch (const std::invalid_argument& e) {
        throw UsageError(std::string("--D: ") + e.what());
      }
      if (!is_valid_pair_set(d)) throw UsageError("--D: not a valid set of pairs");
      emit(giambelli_w(alpha, d, k));
    } else {
      emit(giambelli_w(k_strict_flag("--index", a_.index, k), k));
    }
  }
  return 0;
}

int Runner::pieri() {
  need("--p");
  need("--lambda");
  if (a_.p < 0) throw UsageError("--p must be nonnegative");
  RingElement rule, oracle;
  if (a_.ring == "a") {
    Partition lambda = partition_flag("--lambda", a_.lambda);
    rule = pieri_u(a_.p, lambda);
    if (a_.check) oracle = pieri_u_oracle(a_.p, lambda);
  } else if (a_.ring == "hl") {
    Partition lambda = partition_flag("--lambda", a_.lambda);
    rule = pieri_v(a_.p, lambda);
    if (a_.check) oracle = pieri_v_oracle(a_.p, lambda);
    if (given("--t")) {
      rule = rule.specialize_t(Integer(a_.t));
      if (a_.check) oracle = oracle.specialize_t(Integer(a_.t));
    }
  } else {
    int k = need_k();
    Partition lambda = k_strict_flag("--lambda", a_.lambda, k);
    rule = pieri_w(a_.p, lambda, k);
    if (a_.check) oracle = pieri_w_oracle(a_.p, lambda, k);
  }
  if (!a_.check) {
    emit(rule);
    return 0;
  }
  return emit({make_report("pieri rule against ring product", rule, oracle)});
}

int Runner::mirror() {
  need("--lambda");
  if (a_.ring == "a") return emit(mirror_u(partition_flag("--lambda", a_.lambda)).instances);
  if (a_.ring == "hl") return emit({mirror_v(partition_flag("--lambda", a_.lambda))});
  int k = need_k();
  return emit({mirror_w(k_strict_flag("--lambda", a_.lambda, k), k)});
}

int Runner::recursion() {
  need("--p");
  need("--lambda");
  if (a_.ring == "hl") throw UsageError("--ring: recursion is available for a and c");
  if (a_.ring == "a") {
    Partition lambda = partition_flag("--lambda", a_.lambda);
    if (a_.p < lambda.row(1)) throw UsageError("--p must be at least lambda_1");
    return emit({toprow_recursion_u(a_.p, lambda)});
  }
  int k = need_k();
  Partition lambda = k_strict_flag("--lambda", a_.lambda, k);
  if (a_.p < std::max(lambda.row(1) + 1, lambda.length() + 2 * k))
    throw UsageError("--p must be at least max(lambda_1 + 1, l(lambda) + 2k)");
  TopRowRecursion rec = toprow_recursion_w(a_.p, lambda, k);
  if (json()) {
    Json terms = Json::array();
    for (const auto& t : rec.terms) terms.push_back({{"r", t.r}, {"mu", t.mu.parts()}, {"n", t.n}});
    out_ << Json{{"terms", terms}, {"report", to_json(rec.report)}}.dump() << "\n";
    return rec.report.holds ? 0 : kIdentityFailure;
  }
  for (const auto& t : rec.terms)
    out_ << "r=" << t.r << " w" << a_.p + t.r << " W" << t.mu.to_string() << " 2^" << t.n << "\n";
  return emit({rec.report});
}

int Runner::theta_cmd() {
  need("--lambda");
  int k = need_k();
  Partition lambda = k_strict_flag("--lambda", a_.lambda, k);
  ThetaMode mode = a_.mode == "tableau" ? ThetaMode::Tableau
                   : a_.mode == "reduction" ? ThetaMode::Reduction
                                            : ThetaMode::Raising;
  emit(theta(lambda, k, a_.m, mode), variable_names(a_.m, variable_names("y", k)));
  return 0;
}

int Runner::skew_f_cmd() {
  need("--lambda");
  int k = need_k();
  Partition lambda = k_strict_flag("--lambda", a_.lambda, k), mu = k_strict_flag("--mu", a_.mu, k);
  if (!lambda.contains(mu)) throw UsageError("--mu must be contained in --lambda");
  emit(skew_f(lambda, mu, k, a_.m), variable_names(a_.m));
  return 0;
}

int Runner::qexpand() {
  Poly f;
  if (given("--w")) {
    f = stanley_c(permutation_flag(), a_.m);
  } else {
    need("--lambda");
    int k = need_k();
    Partition lambda = k_strict_flag("--lambda", a_.lambda, k), mu = k_strict_flag("--mu", a_.mu, k);
    if (!lambda.contains(mu)) throw UsageError("--mu must be contained in --lambda");
    f = skew_f(lambda, mu, k, a_.m);
  }
  std::map<Partition, Integer> q;
  try {
    q = q_expansion(f, a_.m);
  } catch (const std::invalid_argument& e) {
    throw UsageError(std::string("--m: ") + e.what());
  }
  if (json()) {
    Json arr = Json::array();
    for (const auto& [mu, c] : q) arr.push_back({{"partition", mu.parts()}, {"coeff", integer_to_json(c)}});
    out_ << arr.dump() << "\n";
  } else {
    for (const auto& [mu, c] : q) out_ << "Q" << mu.to_string() << ": " << c.get_str() << "\n";
  }
  return 0;
}

int Runner::tableaux() {
  need("--lambda");
  int k = need_k();
  Partition lambda = k_strict_flag("--lambda", a_.lambda, k), mu = k_strict_flag("--mu", a_.mu, k);
  if (!lambda.contains(mu)) throw UsageError("--mu must be contained in --lambda");
  if (a_.standard) {
    Integer c = count_standard_k_tableaux(lambda, mu, k);
    if (json())
      out_ << Json{{"standard", integer_to_json(c)}}.dump() << "\n";
    else
      out_ << c.get_str() << "\n";
    return 0;
  }
  auto ts = enumerate_k_tableaux(lambda, mu, k, a_.m);
  if (json()) {
    Json arr = Json::array();
    for (const auto& t : ts) arr.push_back(to_json(t));
    out_ << arr.dump() << "\n";
  } else {
    for (const auto& t : ts) out_ << t.to_string() << "  n=" << t.n << "\n";
  }
  return 0;
}

int Runner::bitableaux() {
  need("--lambda");
  int k = need_k();
  auto ts = enumerate_k_bitableaux(k_strict_flag("--lambda", a_.lambda, k), k, a_.m);
  if (json()) {
    Json arr = Json::array();
    for (const auto& t : ts) arr.push_back(to_json(t));
    out_ << arr.dump() << "\n";
  } else {
    for (const auto& t : ts) out_ << t.to_string() << "  n=" << t.n << "\n";
  }
  return 0;
}

int Runner::stanley() {
  SignedPermutation w = permutation_flag();
  if (a_.type == "a") {
    if (!w.is_unsigned()) throw UsageError("--w: type a needs an unsigned permutation");
    emit(stanley_a(w, a_.m), variable_names(a_.m));
  } else {
    emit(stanley_c(w, a_.m), variable_names(a_.m));
  }
  return 0;
}

int Runner::schubert() {
  SignedPermutation w = permutation_flag();
  emit(schubert_bh(w, a_.m), variable_names(a_.m, variable_names("y", std::max(w.n() - 1, 0))));
  return 0;
}

int Runner::grassmannian() {
  int k = need_k();
  if (given("--w")) {
    SignedPermutation w = permutation_flag();
    if (!w.is_k_grassmannian(k)) throw UsageError("--w: not " + std::to_string(k) + "-Grassmannian");
    Partition lambda = partition_of(w, k);
    bool round = grassmannian_element(lambda, k, w.n()) == w;
    if (json())
      out_ << Json{{"lambda", lambda.parts()}, {"round_trip", round}}.dump() << "\n";
    else
      out_ << lambda.to_string() << "\n";
    return round ? 0 : kIdentityFailure;
  }
  need("--lambda");
  need("--n");
  Partition lambda = partition_flag("--lambda", a_.lambda);
  SignedPermutation w;
  try {
    w = grassmannian_element(lambda, k, a_.n);
  } catch (const std::invalid_argument& e) {
    throw UsageError(std::string("--lambda: ") + e.what());
  }
  bool round = partition_of(w, k) == lambda && grassmannian_element_by_diagonals(lambda, k, a_.n) == w;
  if (json())
    out_ << Json{{"w", w.window()}, {"length", w.length()}, {"round_trip", round}}.dump() << "\n";
  else
    out_ << w.to_string() << "\n";
  return round ? 0 : kIdentityFailure;
}

int Runner::reduced_words_cmd() {
  SignedPermutation w = permutation_flag();
  if (a_.count) {
    Integer c = count_reduced_words(w);
    if (json())
      out_ << Json{{"count", integer_to_json(c)}}.dump() << "\n";
    else
      out_ << c.get_str() << "\n";
    return 0;
  }
  auto words = reduced_words(w);
  if (json()) {
    out_ << Json(words).dump() << "\n";
  } else {
    for (const auto& word : words) out_ << format_int_list(word) << "\n";
  }
  return 0;
}

int Runner::skew_check() {
  int k = need_k();
  need("--n");
  if (given("--w")) {
    SignedPermutation w = permutation_flag();
    if (w.n() > a_.n) throw UsageError("--n is smaller than the rank of --w");
    auto s = is_skew(w, k, a_.n);
    if (json()) {
      Json j{{"skew", s.has_value()}};
      if (s) {
        j["lambda"] = s->lambda.parts();
        j["mu"] = s->mu.parts();
      }
      out_ << j.dump() << "\n";
    } else if (s) {
      out_ << "skew: lambda=" << s->lambda.to_string() << " mu=" << s->mu.to_string() << "\n";
    } else {
      out_ << "not skew in B_" << a_.n << "\n";
    }
    return 0;
  }
  need("--lambda");
  Partition lambda = partition_flag("--lambda", a_.lambda), mu = partition_flag("--mu", a_.mu);
  bool c;
  try {
    c = compatible_pair(lambda, mu, k, a_.n);
  } catch (const std::invalid_argument& e) {
    throw UsageError(e.what());
  }
  if (json())
    out_ << Json{{"compatible", c}}.dump() << "\n";
  else
    out_ << (c ? "compatible" : "not compatible") << "\n";
  return 0;
}

int Runner::verify() {
  SuiteOptions opt;
  opt.k = k_opt();
  opt.max_size = a_.max_size;
  opt.max_p = a_.max_p;
  opt.max_length = a_.max_length;
  if (given("--m")) opt.m = a_.m;
  if (given("--n")) opt.n = a_.n;
  SuiteResult r = run_suite(a_.suite, opt);
  if (json()) {
    Json fails = Json::array();
    for (const auto& f : r.failures) fails.push_back({{"instance", f.instance}, {"detail", f.detail}});
    out_ << Json{{"suite", r.suite}, {"instances", r.instances}, {"ok", r.ok()}, {"failures", fails}}.dump()
         << "\n";
  } else {
    out_ << r.suite << ": " << r.instances << " instances, " << r.failures.size() << " failures\n";
    for (const auto& f : r.failures) out_ << "  " << f.instance << ": " << f.detail << "\n";
  }
  return r.ok() ? 0 : kIdentityFailure;
}

int Runner::run(const std::vector<std::string>& args) {
  CLI::App app{"Raising operator calculus"};
  app.require_subcommand(1);
  app.set_help_all_flag("--help-all");

  auto ring = [&](CLI::App* s) {
    s->add_option("--ring", a_.ring, "a, hl or c")->check(CLI::IsMember({"a", "hl", "c"}));
  };
  auto k = [&](CLI::App* s) { s->add_option("--k", a_.k); };
  auto format = [&](CLI::App* s) { s->add_option("--format", a_.format)->check(CLI::IsMember({"text", "json"})); };
  auto lambda = [&](CLI::App* s) { s->add_option("--lambda", a_.lambda, "partition such as 4,2,1"); };
  auto mu = [&](CLI::App* s) { s->add_option("--mu", a_.mu, "inner partition (default empty)"); };
  auto m = [&](CLI::App* s) { s->add_option("--m", a_.m, "number of x variables")->check(CLI::Range(0, 64)); };
  auto w = [&](CLI::App* s) { s->add_option("--w", a_.w, "signed permutation window such as 2,-3,1"); };
  auto n = [&](CLI::App* s) { s->add_option("--n", a_.n, "rank of B_n")->check(CLI::Range(1, 64)); };

  std::map<CLI::App*, int (Runner::*)()> dispatch;
  auto add = [&](const std::string& name, const std::string& help, int (Runner::*fn)()) {
    CLI::App* s = app.add_subcommand(name, help);
    format(s);
    dispatch[s] = fn;
    return s;
  };

  auto* g = add("giambelli", "Giambelli expansion in the monomial basis", &Runner::giambelli);
  ring(g), k(g);
  g->add_option("--index", a_.index, "integer vector");
  g->add_option("--D", a_.d, "set of pairs, e.g. 12,13");
  g->add_option("--t", a_.t, "integer value for t");

  auto* pi = add("pieri", "Pieri product in the distinguished basis", &Runner::pieri);
  ring(pi), k(pi), lambda(pi);
  pi->add_option("--p", a_.p);
  pi->add_option("--t", a_.t, "integer value for t");
  pi->add_flag("--check", a_.check, "compare with the product computed in the ring");

  auto* mi = add("mirror", "Mirror identity for lambda", &Runner::mirror);
  ring(mi), k(mi), lambda(mi);

  auto* re = add("recursion", "Top-row recursion", &Runner::recursion);
  ring(re), k(re), lambda(re);
  re->add_option("--p", a_.p);

  auto* th = add("theta", "Theta polynomial in x1..xm, y1..yk", &Runner::theta_cmd);
  k(th), lambda(th), m(th);
  th->add_option("--mode", a_.mode)->check(CLI::IsMember({"raising", "tableau", "reduction"}));

  auto* sf = add("skewF", "Skew polynomial F^(k)_{lambda/mu}", &Runner::skew_f_cmd);
  k(sf), lambda(sf), mu(sf), m(sf);

  auto* qe = add("qexpand", "Schur Q-expansion of F^(k)_{lambda/mu} or F_w", &Runner::qexpand);
  k(qe), lambda(qe), mu(qe), m(qe), w(qe);

  auto* ta = add("tableaux", "k-tableaux of shape lambda/mu", &Runner::tableaux);
  k(ta), lambda(ta), mu(ta), m(ta);
  ta->add_flag("--standard", a_.standard, "count standard k-tableaux");

  auto* bt = add("bitableaux", "k-bitableaux of shape lambda", &Runner::bitableaux);
  k(bt), lambda(bt), m(bt);

  auto* st = add("stanley", "Stanley function of a signed permutation", &Runner::stanley);
  w(st), m(st);
  st->add_option("--type", a_.type)->check(CLI::IsMember({"a", "c"}));

  auto* sc = add("schubert", "Type C Schubert polynomial", &Runner::schubert);
  w(sc), m(sc);

  auto* gr = add("grassmannian", "k-Grassmannian element of lambda, or lambda of w", &Runner::grassmannian);
  k(gr), lambda(gr), n(gr), w(gr);

  auto* rw = add("reduced-words", "Reduced words of w", &Runner::reduced_words_cmd);
  w(rw);
  rw->add_flag("--count", a_.count);

  auto* sk = add("skew-check", "Skew element or compatible pair test", &Runner::skew_check);
  k(sk), n(sk), w(sk), lambda(sk), mu(sk);

  auto* ve = add("verify", "Run an identity suite", &Runner::verify);
  ve->add_option("suite", a_.suite)->required()->check(CLI::IsMember(suite_names()));
  k(ve), m(ve), n(ve);
  ve->add_option("--max-size", a_.max_size);
  ve->add_option("--max-p", a_.max_p);
  ve->add_option("--max-length", a_.max_length);

  std::vector<std::string> reversed(args.rbegin(), args.rend());
  try {
    app.parse(reversed);
  } catch (const CLI::CallForHelp& e) {
    app.exit(e, out_, err_);
    return 0;
  } catch (const CLI::CallForAllHelp& e) {
    app.exit(e, out_, err_);
    return 0;
  } catch (const CLI::ParseError& e) {
    app.exit(e, out_, err_);
    return kUsageError;
  }

  for (auto& [s, fn] : dispatch) {
    if (!s->parsed()) continue;
    sub_ = s;
    try {
      return (this->*fn)();
    } catch (const UsageError& e) {
      err_ << "usage error: " << e.what() << "\n";
      return kUsageError;
    } catch (const std::invalid_argument& e) {
      err_ << "error: " << e.what() << "\n";
      return kUsageError;
    } catch (const std::domain_error& e) {
      err_ << "error: " << e.what() << "\n";
      return kUsageError;
    }
  }
  return kUsageError;
}

}  // namespace

int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  Runner r(out, err);
  return r.run(args);
}

}  // namespace raising
