#ifndef NEGDER_COUNTEREXAMPLE_HPP
#define NEGDER_COUNTEREXAMPLE_HPP

#include <cstddef>
#include <vector>

#include "negder/analysis.hpp"
#include "negder/derivation.hpp"
#include "negder/singularity.hpp"

namespace negder {

// Parameters of the built-in family of normal ICIS (n >= 6) carrying a
// derivation of degree -1 under every positive grading. The constants
// c_7..c_n must avoid 1 and -1 (c^9 + 1 = 0 has the single rational root -1)
// and be pairwise different.
struct CounterexampleParams {
  std::size_t n = 6;
  std::vector<Rational> c;  // c_7..c_n, empty when n = 6

  // Canonical constants 2, 3, 4, ... for i = 7..n.
  static CounterexampleParams with_default_constants(std::size_t n);

  void validate(std::size_t n_cap = kDefaultCap) const;

  static constexpr std::size_t kDefaultCap = 12;
};

struct Counterexample {
  SingularitySystem system;
  Derivation eta;  // the degree -1 derivation, equal to delta_{(1,2,3)}
};

// Weights (8,8,5,2,...,2) with equations
//   g1 = x1*x4 + x2*x5 + x3^2 - x4^5 + sum_{i>=7} x_i^5
//   g2 = x1*x5 + x2*x6 + x3^2 + x6^5 + sum_{i>=7} c_i*x_i^5
Counterexample build_counterexample(const CounterexampleParams& params);

// Every fact making the family a counter-example, machine checked.
struct CounterexampleChecks {
  bool degrees_ok = false;       // p = (10, 10)
  bool eta_degree_ok = false;    // derivation degree exactly -1
  bool annihilates = false;      // eta(g_j) = 0 identically
  bool complete_intersection = false;  // with d = n-2 >= 4
  bool isolated = false;
  bool verdict_ok = false;  // negative derivation found with witness (1,2,3)
  IcisStatus status;
  NegativityVerdict verdict;

  bool all() const {
    return degrees_ok && eta_degree_ok && annihilates && complete_intersection && isolated &&
           verdict_ok;
  }
};

CounterexampleChecks verify_counterexample(const CounterexampleParams& params,
                                           const GroebnerOptions& options = {});

}  // namespace negder

#endif
