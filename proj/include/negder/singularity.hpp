#ifndef NEGDER_SINGULARITY_HPP
#define NEGDER_SINGULARITY_HPP

#include <optional>
#include <string>
#include <vector>

#include "negder/groebner.hpp"
#include "negder/polynomial.hpp"
#include "negder/weight_system.hpp"

namespace negder {

// A validated quasihomogeneous presentation: t homogeneous equations of
// order >= 2 in n weighted variables, with weights coprime and both weights
// and degrees sorted non-increasingly. The sort permutations are recorded so
// callers can map results back to their original indexing.
struct SingularitySystem {
  std::size_t n = 0;
  std::size_t t = 0;
  std::vector<Polynomial> g;  // sorted by degree, in sorted-variable indexing
  WeightSystem w;             // non-increasing, coprime
  std::vector<long> p;        // degrees, non-increasing
  std::size_t d = 0;          // n - t (the dimension when g is a regular sequence)

  // var_perm[k] = original index of sorted variable k; eq_perm likewise.
  std::vector<std::size_t> var_perm;
  std::vector<std::size_t> eq_perm;

  std::vector<std::size_t> inverse_var_perm() const;
  std::vector<std::size_t> inverse_eq_perm() const;

  // Equations mapped back to the caller's variable and equation ordering.
  std::vector<Polynomial> original_equations() const;

  std::string describe(const std::vector<std::string>& names = {}) const;
};

// Checks homogeneity (naming the disagreeing monomials on failure), order
// >= 2, and positivity; normalizes the weights to coprime and sorts
// variables and equations per the decreasing convention.
SingularitySystem validate_system(const std::vector<Polynomial>& g, const WeightSystem& w);

// Solves the homogeneity constraints of g over the rationals and probes the
// positive solution cone: strictly positive extreme rays are returned as
// their primitive integer points; rays touching a coordinate hyperplane are
// pushed into the interior by adding the minimal interior point, which is
// itself appended whenever the cone is not a single ray. Empty result means
// no positive grading exists.
std::vector<WeightSystem> infer_weights(const std::vector<Polynomial>& g);

struct IsolatedResult {
  bool isolated = false;
  // Certificate: smallest pure-power exponent of each (sorted) variable
  // among the leading monomials of GB(<g> + jacobian_minors(g)); 0 if none.
  std::vector<unsigned> pure_powers;
  GroebnerStats stats;
};

// Jacobian-ideal test: the singularity is isolated iff <g> plus all maximal
// minors of the Jacobian matrix is zero-dimensional.
IsolatedResult is_isolated(const SingularitySystem& s, const GroebnerOptions& options = {});

// True iff dim P/<g> = n - t, i.e. g is a regular sequence.
bool is_complete_intersection(const SingularitySystem& s, const GroebnerOptions& options = {});

// Complete intersection, isolated, and of dimension >= 2 (Serre reduces
// normality to the dimension bound for complete intersections).
bool is_normal_icis(const SingularitySystem& s, const GroebnerOptions& options = {});

// Witness for condition A(k) (a pure power x_k^m in some equation) or B(k)
// (pairwise different nu_j != k with x_k^{m_j} x_{nu_j} occurring in g_j).
struct ConditionWitness {
  enum class Kind { A, B };
  Kind kind;
  std::size_t k = 0;  // variable, 0-based in sorted indexing

  // A: x_k^m occurs in g_j.
  unsigned m = 0;
  std::size_t j = 0;

  // B: g_j contains x_k^{m_j} x_{nu_j}.
  std::vector<std::size_t> nu;
  std::vector<unsigned> m_list;

  std::string describe() const;
};

// Smallest j, then smallest m >= 2, such that x_k^m occurs in g_j.
std::optional<ConditionWitness> condition_A(const SingularitySystem& s, std::size_t k);

// System-of-distinct-representatives search via bipartite matching between
// equations and admissible nu, deterministic smallest-nu tie-break.
std::optional<ConditionWitness> condition_B(const SingularitySystem& s, std::size_t k);

// For each j = 1..t whether p_1+...+p_j >= w_1+...+w_j + j; an isolated
// quasihomogeneous complete intersection must satisfy all of them.
std::vector<bool> lemma12_check(const SingularitySystem& s);

}  // namespace negder

#endif
