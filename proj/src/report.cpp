#include "negder/report.hpp"

#include <chrono>
#include <sstream>

#include "negder/errors.hpp"

namespace negder {

namespace {

class Stopwatch {
 public:
  Stopwatch() : start_(std::chrono::steady_clock::now()) {}
  double ms() const {
    auto now = std::chrono::steady_clock::now();
    return std::chrono::duration<double, std::milli>(now - start_).count();
  }

 private:
  std::chrono::steady_clock::time_point start_;
};

Json witness_json(const ConditionWitness& w) {
  Json j;
  if (w.kind == ConditionWitness::Kind::A) {
    j["kind"] = "A";
    j["m"] = w.m;
    j["j"] = w.j + 1;
  } else {
    j["kind"] = "B";
    Json nu = Json::array(), ms = Json::array();
    for (std::size_t v : w.nu) nu.push_back(v + 1);
    for (unsigned m : w.m_list) ms.push_back(m);
    j["nu"] = std::move(nu);
    j["m"] = std::move(ms);
  }
  return j;
}

std::size_t binomial(std::size_t n, std::size_t k) {
  if (k > n) return 0;
  std::size_t r = 1;
  for (std::size_t i = 1; i <= k; ++i) r = r * (n - k + i) / i;
  return r;
}

}  // namespace

std::vector<std::string> AnalysisReport::sorted_names() const {
  std::vector<std::string> names(var_perm.size());
  for (std::size_t k = 0; k < var_perm.size(); ++k) names[k] = variables[var_perm[k]];
  return names;
}

Json AnalysisReport::to_json(bool include_timing) const {
  Json j;
  j["input"]["variables"] = variables;
  if (weights_input)
    j["input"]["weights"] = *weights_input;
  else
    j["input"]["weights"] = nullptr;
  j["input"]["equations"] = equations;

  Json vp = Json::array(), ep = Json::array();
  for (std::size_t v : var_perm) vp.push_back(v + 1);
  for (std::size_t v : eq_perm) ep.push_back(v + 1);
  j["validation"]["variable_order"] = std::move(vp);
  j["validation"]["equation_order"] = std::move(ep);
  j["validation"]["weights"] = weights_sorted;
  j["validation"]["degrees"] = degrees;
  j["validation"]["orders"] = orders;

  j["classification"]["complete_intersection"] = complete_intersection;
  j["classification"]["dimension"] = dimension;
  j["classification"]["isolated"] = isolated;
  j["classification"]["normal"] = normal;
  j["classification"]["pure_powers"] = pure_powers;

  Json table = Json::array();
  for (std::size_t k = 0; k < condition_a.size(); ++k) {
    Json row;
    row["k"] = k + 1;
    row["A"] = condition_a[k] ? witness_json(*condition_a[k]) : Json(nullptr);
    row["B"] = condition_b[k] ? witness_json(*condition_b[k]) : Json(nullptr);
    row["holds"] = condition_a[k].has_value() || condition_b[k].has_value();
    table.push_back(std::move(row));
  }
  j["conditions"] = std::move(table);
  j["lemma12"] = lemma12;

  if (min_trivial) {
    Json nu = Json::array();
    for (std::size_t v : min_trivial->nu) nu.push_back(v + 1);
    j["negativity"]["min_trivial_degree"] = min_trivial->degree;
    j["negativity"]["min_trivial_nu"] = std::move(nu);
  }
  if (verdict) {
    j["negativity"]["exists"] = verdict->exists;
    j["negativity"]["decision_basis"] = verdict->basis == NegativityVerdict::Basis::Theorem17Rule
                                            ? "theorem-17-rule"
                                            : "brute-force-oracle";
    std::vector<std::string> names = sorted_names();
    Json ws = Json::array();
    for (const NegativityWitness& w : verdict->witnesses) {
      Json wj;
      Json nu = Json::array();
      for (std::size_t v : w.nu) nu.push_back(v + 1);
      wj["nu"] = std::move(nu);
      wj["degree"] = w.degree;
      Json coeffs = Json::array();
      for (const Polynomial& q : w.derivation.coefficients()) coeffs.push_back(q.to_string(names));
      wj["coefficients"] = std::move(coeffs);
      ws.push_back(std::move(wj));
    }
    j["negativity"]["witnesses"] = std::move(ws);
    if (!verdict->note.empty()) j["negativity"]["note"] = verdict->note;
  }
  if (oracle_range) {
    j["oracle"]["range"] = {oracle_range->first, oracle_range->second};
    Json dims = Json::array();
    for (const auto& [deg, dim] : oracle_dims) {
      Json e;
      e["degree"] = deg;
      e["dimension"] = dim;
      dims.push_back(std::move(e));
    }
    j["oracle"]["dimensions"] = std::move(dims);
    if (oracle_rule_agreement) j["oracle"]["agrees_with_rule"] = *oracle_rule_agreement;
  }
  if (theta_generator_count) j["theta_generator_count"] = theta_generator_count;

  if (counterexample) {
    const CounterexampleChecks& c = *counterexample;
    j["counterexample_checks"]["degrees"] = c.degrees_ok;
    j["counterexample_checks"]["eta_degree"] = c.eta_degree_ok;
    j["counterexample_checks"]["annihilates"] = c.annihilates;
    j["counterexample_checks"]["complete_intersection"] = c.complete_intersection;
    j["counterexample_checks"]["isolated"] = c.isolated;
    j["counterexample_checks"]["negative_derivation"] = c.verdict_ok;
    j["counterexample_checks"]["all"] = c.all();
  }

  j["engine"]["pairs_formed"] = engine.pairs_formed;
  j["engine"]["pairs_reduced"] = engine.pairs_reduced;
  j["engine"]["zero_reductions"] = engine.zero_reductions;
  j["engine"]["reduction_steps"] = engine.reduction_steps;
  j["engine"]["basis_size"] = engine.basis_size;

  if (include_timing) j["timing_ms"] = timing_ms;
  return j;
}

std::string AnalysisReport::to_text() const {
  std::ostringstream os;
  os << "variables:";
  for (const std::string& v : variables) os << " " << v;
  os << "\n";
  std::vector<std::string> names = sorted_names();
  os << "sorted order:";
  for (const std::string& v : names) os << " " << v;
  os << "   weights:";
  for (long w : weights_sorted) os << " " << w;
  os << "\n";
  for (std::size_t i = 0; i < equations.size(); ++i) os << "eq " << (i + 1) << ": " << equations[i] << "\n";
  os << "degrees p:";
  for (long p : degrees) os << " " << p;
  os << "   orders:";
  for (long o : orders) os << " " << o;
  os << "\n";
  os << "complete intersection: " << (complete_intersection ? "yes" : "no")
     << "   dimension: " << dimension << "\n";
  os << "isolated: " << (isolated ? "yes" : "no") << " (m-primary (graded) Jacobian test)"
     << "   normal: " << (normal ? "yes" : "no") << "\n";
  os << "conditions:";
  for (std::size_t k = 0; k < condition_a.size(); ++k) {
    os << " k=" << (k + 1) << ":";
    if (condition_a[k])
      os << "A";
    else if (condition_b[k])
      os << "B";
    else
      os << "-";
  }
  os << "\n";
  os << "lemma 12:";
  for (bool b : lemma12) os << " " << (b ? "ok" : "VIOLATED");
  os << "\n";
  if (min_trivial) {
    os << "minimal trivial degree: " << min_trivial->degree << " at nu = (";
    for (std::size_t i = 0; i < min_trivial->nu.size(); ++i)
      os << (i ? "," : "") << (min_trivial->nu[i] + 1);
    os << ")\n";
  }
  if (verdict) {
    os << "negative derivations: " << (verdict->exists ? "EXIST" : "none") << " ["
       << (verdict->basis == NegativityVerdict::Basis::Theorem17Rule ? "theorem-17-rule"
                                                                     : "brute-force-oracle")
       << "]\n";
    for (const NegativityWitness& w : verdict->witnesses) {
      os << "  witness nu=(";
      for (std::size_t i = 0; i < w.nu.size(); ++i) os << (i ? "," : "") << (w.nu[i] + 1);
      os << ") degree " << w.degree << ": " << w.derivation.to_string(names) << "\n";
    }
    if (!verdict->note.empty()) os << "  note: " << verdict->note << "\n";
  }
  if (oracle_range) {
    os << "oracle dimensions:";
    for (const auto& [deg, dim] : oracle_dims) os << " dimΘ_{" << deg << "}=" << dim;
    os << "\n";
    if (oracle_rule_agreement)
      os << "oracle agrees with rule: " << (*oracle_rule_agreement ? "yes" : "NO") << "\n";
  }
  if (counterexample) {
    const CounterexampleChecks& c = *counterexample;
    os << "counter-example checks: degrees " << (c.degrees_ok ? "ok" : "FAIL") << ", eta degree "
       << (c.eta_degree_ok ? "ok" : "FAIL") << ", annihilation "
       << (c.annihilates ? "ok" : "FAIL") << ", complete intersection "
       << (c.complete_intersection ? "ok" : "FAIL") << ", isolated "
       << (c.isolated ? "ok" : "FAIL") << ", negative derivation "
       << (c.verdict_ok ? "ok" : "FAIL") << "\n";
  }
  return os.str();
}

namespace {

struct ValidatedInput {
  std::vector<Polynomial> g;
  SingularitySystem system;
};

ValidatedInput validate_input(const SystemFile& file, AnalysisReport& report) {
  report.variables = file.vars;
  report.weights_input = file.weights;
  std::vector<Polynomial> g = file.parse_equations();
  for (const Polynomial& gi : g) report.equations.push_back(gi.to_string(file.vars));
  SingularitySystem s = validate_system(g, file.weight_system());
  report.var_perm = s.var_perm;
  report.eq_perm = s.eq_perm;
  report.weights_sorted.assign(s.w.begin(), s.w.end());
  report.degrees = s.p;
  for (const Polynomial& gi : s.g) report.orders.push_back(order_of(gi));
  return {std::move(g), std::move(s)};
}

void fill_classification(AnalysisReport& report, const SingularitySystem& s,
                         const IcisStatus& st) {
  report.complete_intersection = st.complete_intersection;
  report.dimension = st.dimension;
  report.isolated = st.isolated;
  report.normal = st.normal;
  report.pure_powers = st.pure_powers;
  report.engine = st.isolated_stats;
  for (std::size_t k = 0; k < s.n; ++k) {
    report.condition_a.push_back(condition_A(s, k));
    report.condition_b.push_back(condition_B(s, k));
  }
  report.lemma12 = lemma12_check(s);
  if (st.normal) report.theta_generator_count = binomial(s.n, s.t + 1) + 1;
}

}  // namespace

AnalysisReport analyze_system(const SystemFile& file, const GroebnerOptions& options) {
  Stopwatch total;
  AnalysisReport report;
  Stopwatch validate_clock;
  ValidatedInput in = validate_input(file, report);
  report.timing_ms["validate"] = validate_clock.ms();
  const SingularitySystem& s = in.system;

  Stopwatch classify_clock;
  IcisStatus st = classify_system(s, options);
  fill_classification(report, s, st);
  report.timing_ms["classify"] = classify_clock.ms();

  Stopwatch verdict_clock;
  if (s.t + 1 <= s.n) report.min_trivial = min_trivial_degree(s);
  if (st.normal) {
    report.verdict = has_negative_derivations(s, st, options);
  } else {
    // Outside the normal-ICIS hypothesis only the brute-force oracle is
    // sound; sweep a bounded default range and report it.
    long lo = s.d == 0 ? halperin_bound(s) - 3 : std::min(report.min_trivial->degree, -1L);
    long hi = -1;
    DerivationOracle oracle(s, options);
    NegativityVerdict v;
    v.basis = NegativityVerdict::Basis::BruteForceOracle;
    v.min_degree = report.min_trivial ? report.min_trivial->degree : 0;
    report.oracle_range = {lo, hi};
    for (long a = lo; a <= hi; ++a) {
      GradedDerivationSpace sp = oracle.space(a);
      report.oracle_dims.emplace_back(a, sp.dimension);
      if (sp.dimension > 0) v.exists = true;
    }
    v.note = "not a normal ICIS; verdict restricted to the swept degree range";
    report.verdict = std::move(v);
  }
  report.timing_ms["verdict"] = verdict_clock.ms();
  report.timing_ms["total"] = total.ms();
  return report;
}

CounterexampleCommand run_counterexample(const CounterexampleParams& params,
                                         const GroebnerOptions& options) {
  Stopwatch total;
  Counterexample ce = build_counterexample(params);

  CounterexampleCommand out;
  out.file.vars = default_variable_names(params.n);
  out.file.weights = std::vector<long>(ce.system.w.begin(), ce.system.w.end());
  for (const Polynomial& gi : ce.system.original_equations())
    out.file.equations_text.push_back(gi.to_string(out.file.vars));
  out.file.field = "Q";

  out.report = analyze_system(out.file, options);
  Stopwatch verify_clock;
  out.report.counterexample = verify_counterexample(params, options);
  out.report.timing_ms["verify"] = verify_clock.ms();
  out.report.timing_ms["total"] = total.ms();
  return out;
}

AnalysisReport run_oracle(const SystemFile& file, long lo, long hi,
                          const GroebnerOptions& options) {
  Stopwatch total;
  AnalysisReport report;
  ValidatedInput in = validate_input(file, report);
  const SingularitySystem& s = in.system;
  IcisStatus st = classify_system(s, options);
  fill_classification(report, s, st);
  if (s.t + 1 <= s.n) report.min_trivial = min_trivial_degree(s);

  report.oracle_range = {lo, hi};
  DerivationOracle oracle(s, options);
  bool any_negative = false;
  for (long a = lo; a <= hi; ++a) {
    GradedDerivationSpace sp = oracle.space(a);
    report.oracle_dims.emplace_back(a, sp.dimension);
    if (a < 0 && sp.dimension > 0) any_negative = true;
  }
  if (st.normal && report.min_trivial) {
    // The sweep is conclusive only when it covers every degree where a
    // trivial-derivation witness could live.
    if (lo <= std::min(report.min_trivial->degree, -1L) && hi >= -1) {
      NegativityVerdict v = has_negative_derivations(s, st, options);
      report.verdict = v;
      report.oracle_rule_agreement = v.exists == any_negative;
    }
  }
  report.timing_ms["total"] = total.ms();
  return report;
}

std::vector<WeightSystem> run_infer_weights(const SystemFile& file) {
  return infer_weights(file.parse_equations());
}

}  // namespace negder
