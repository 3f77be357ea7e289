#include "negder/counterexample.hpp"

#include <algorithm>

#include "negder/errors.hpp"

namespace negder {

CounterexampleParams CounterexampleParams::with_default_constants(std::size_t n) {
  CounterexampleParams p;
  p.n = n;
  for (std::size_t i = 7; i <= n; ++i) p.c.push_back(make_rational(static_cast<long>(i) - 5));
  return p;
}

void CounterexampleParams::validate(std::size_t n_cap) const {
  if (n < 6) throw InputError("the counter-example family needs n >= 6");
  if (n > n_cap)
    throw InputError("n = " + std::to_string(n) + " exceeds the configured cap of " +
                     std::to_string(n_cap));
  if (c.size() != n - 6)
    throw InputError("expected " + std::to_string(n - 6) + " constants c_7..c_n, got " +
                     std::to_string(c.size()));
  for (std::size_t i = 0; i < c.size(); ++i) {
    if (c[i] == 1)
      throw InputError("c_" + std::to_string(i + 7) + " = 1 is excluded");
    Rational ninth = c[i];
    for (int k = 1; k < 9; ++k) ninth *= c[i];
    if (ninth + 1 == 0)
      throw InputError("c_" + std::to_string(i + 7) + " violates c^9 + 1 != 0");
    for (std::size_t l = 0; l < i; ++l)
      if (c[i] == c[l])
        throw InputError("constants must be pairwise different (c_" + std::to_string(l + 7) +
                         " = c_" + std::to_string(i + 7) + ")");
  }
}

Counterexample build_counterexample(const CounterexampleParams& params) {
  params.validate();
  const std::size_t n = params.n;

  std::vector<long> w(n, 2);
  w[0] = w[1] = 8;
  w[2] = 5;
  WeightSystem weights{std::move(w)};

  auto var = [&](std::size_t i) { return Polynomial::variable(n, i); };
  Polynomial g1 = var(0) * var(3) + var(1) * var(4) + var(2) * var(2) - var(3).pow(5);
  Polynomial g2 = var(0) * var(4) + var(1) * var(5) + var(2) * var(2) + var(5).pow(5);
  for (std::size_t i = 7; i <= n; ++i) {
    g1 += var(i - 1).pow(5);
    g2 += var(i - 1).pow(5) * params.c[i - 7];
  }

  SingularitySystem system = validate_system({g1, g2}, weights);
  Derivation eta = trivial_derivation(system.g, {0, 1, 2}, system.w);
  return Counterexample{std::move(system), std::move(eta)};
}

CounterexampleChecks verify_counterexample(const CounterexampleParams& params,
                                           const GroebnerOptions& options) {
  Counterexample ce = build_counterexample(params);
  CounterexampleChecks checks;

  checks.degrees_ok = ce.system.p == std::vector<long>{10, 10};

  std::optional<long> deg = derivation_degree(ce.eta);
  checks.eta_degree_ok = deg && *deg == -1;

  checks.annihilates = true;
  for (const Polynomial& gj : ce.system.g)
    if (!ce.eta.apply(gj).is_zero()) checks.annihilates = false;

  checks.status = classify_system(ce.system, options);
  checks.complete_intersection =
      checks.status.complete_intersection && ce.system.d == params.n - 2 && ce.system.d >= 4;
  checks.isolated = checks.status.isolated;

  if (checks.status.normal) {
    checks.verdict = has_negative_derivations(ce.system, checks.status, options);
    bool witness_123 = false;
    for (const NegativityWitness& w : checks.verdict.witnesses)
      if (w.nu == std::vector<std::size_t>{0, 1, 2} && w.degree == -1) witness_123 = true;
    checks.verdict_ok = checks.verdict.exists && witness_123;
  }
  return checks;
}

}  // namespace negder
