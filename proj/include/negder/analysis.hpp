#ifndef NEGDER_ANALYSIS_HPP
#define NEGDER_ANALYSIS_HPP

#include <optional>
#include <string>
#include <vector>

#include "negder/derivation.hpp"
#include "negder/groebner.hpp"
#include "negder/linalg.hpp"
#include "negder/singularity.hpp"

namespace negder {

// Combined Jacobian-criterion facts about a validated system, so pipelines
// can run the Groebner work once and reuse it.
struct IcisStatus {
  bool complete_intersection = false;
  long dimension = -1;  // Krull dimension of P/<g>
  bool isolated = false;
  bool normal = false;  // complete intersection, isolated, d >= 2
  std::vector<unsigned> pure_powers;
  GroebnerStats isolated_stats;
};

IcisStatus classify_system(const SingularitySystem& s, const GroebnerOptions& options = {});

// Degree p_1+...+p_t - (w_1+...+w_{t+1}) of the minimal trivial derivation,
// attained at nu = (1,...,t+1) after the decreasing sort.
struct MinTrivial {
  long degree = 0;
  std::vector<std::size_t> nu;  // 0-based
};

MinTrivial min_trivial_degree(const SingularitySystem& s);

struct NegativityWitness {
  std::vector<std::size_t> nu;  // 0-based
  long degree = 0;
  Derivation derivation;
};

// Decision for Theta_{A,<0} != 0. On a normal ICIS the module of derivations
// is generated by the Euler derivation (degree 0) and the trivial
// derivations, and coefficients in a positively graded ring have
// non-negative degree, so a negative element exists iff some trivial
// generator has negative degree: exists = (min trivial degree < 0).
struct NegativityVerdict {
  bool exists = false;
  long min_degree = 0;
  std::vector<NegativityWitness> witnesses;  // all delta_nu of negative degree
  enum class Basis { Theorem17Rule, BruteForceOracle } basis = Basis::Theorem17Rule;
  std::string note;  // non-empty when the rule had to fall back to the oracle
};

NegativityVerdict has_negative_derivations(const SingularitySystem& s, const IcisStatus& status,
                                           const GroebnerOptions& options = {});
NegativityVerdict has_negative_derivations(const SingularitySystem& s,
                                           const GroebnerOptions& options = {});

// One graded piece Theta_{A,a}, computed by brute force: solve the exact
// linear system for coefficient vectors with q_i in P_{a+w_i} annihilating
// every g_j modulo the ideal, then quotient by the coefficient multiples of
// the ideal. Independent of the Theorem-17 decision path.
struct GradedDerivationSpace {
  long degree = 0;
  std::size_t dimension = 0;
  std::vector<Derivation> basis;  // representatives of a quotient basis
  std::size_t trivial_dimension = 0;
  std::size_t unknown_count = 0;
  std::size_t constraint_count = 0;
};

class DerivationOracle {
 public:
  explicit DerivationOracle(SingularitySystem s, const GroebnerOptions& options = {});

  const SingularitySystem& system() const { return s_; }

  GradedDerivationSpace space(long degree) const;

  struct ClassMembership {
    bool in_space = false;       // the class lies in Theta_{A,degree}
    bool nonzero_class = false;  // and is non-zero modulo the trivial part
  };
  ClassMembership check_class(const Derivation& der) const;

 private:
  struct DegreeProblem;
  DegreeProblem build(long degree) const;

  SingularitySystem s_;
  GroebnerBasis gb_;
  std::vector<std::vector<Polynomial>> partials_;  // [j][i] = d g_j / d x_i
};

GradedDerivationSpace derivation_space(const SingularitySystem& s, long degree,
                                       const GroebnerOptions& options = {});

// One coordinate-change elimination trace: while condition A holds at the
// smallest live coefficient, complete the m-th power of the witnessing
// equation and transport the system, zeroing that coefficient. Stops at the
// first k where A fails, producing the forced B(k) witness, or eliminates
// eta entirely (which certifies that its class was trivial).
struct ReductionStep {
  std::size_t k = 0;  // variable whose coefficient was removed (0-based)
  std::size_t j = 0;  // equation witnessing A(k)
  unsigned m = 0;
  Polynomial shift;  // t_1 of the coordinate change x_k -> x_k + t_1
};

struct ReductionOutcome {
  Derivation eta;
  SingularitySystem system;
  bool eliminated = false;
  std::optional<std::size_t> stop_k;  // 0-based, set when a B(k) stop happened
  std::optional<ConditionWitness> witness;
  std::vector<ReductionStep> steps;
};

ReductionOutcome reduce_negative_derivation(const SingularitySystem& s, const Derivation& eta,
                                            const GroebnerOptions& options = {});

// Consistency check: a normal ICIS whose equations all have order >= 3 must
// have no negative derivations. Returns whether the hypothesis applied;
// throws TheoryViolation if it applied and the decision disagreed.
bool theorem0_check(const SingularitySystem& s, const GroebnerOptions& options = {});

// Consistency check for embedding dimension 5: any normal ICIS with n = 5,
// t = 2 has no negative derivations, and the A(k1)/B(k2) pattern on
// {k1,k2} = {1,2} is excluded whenever the degree inequality would hold.
bool embdim5_check(const SingularitySystem& s, const GroebnerOptions& options = {});

// Degree bound for zero-dimensional systems (t = n): no derivation of
// degree < p_t - p_1 exists. Returns the bound; callers verify emptiness
// below it with the oracle.
long halperin_bound(const SingularitySystem& s);

// Probes every inferred grading of g and asserts that the existence flag and
// the sorted degree list agree across probes. Inputs with t = 1 and order
// < 3 are refused: uniqueness of the grading fails for them and the
// agreement claim does not apply.
bool grading_independence_check(const std::vector<Polynomial>& g,
                                const GroebnerOptions& options = {});

}  // namespace negder

#endif
