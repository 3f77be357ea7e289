#ifndef NEGDER_GROEBNER_HPP
#define NEGDER_GROEBNER_HPP

#include <cstdint>
#include <vector>

#include "negder/polynomial.hpp"

namespace negder {

// Total multiplicative monomial order. WeightedDegrevlex compares the
// weighted degree first and falls back to plain degrevlex on ties, which
// keeps it a well-order for positive weights.
class MonomialOrder {
 public:
  enum class Kind { Degrevlex, WeightedDegrevlex, Lex };

  static MonomialOrder degrevlex() { return MonomialOrder(Kind::Degrevlex, {}); }
  static MonomialOrder lex() { return MonomialOrder(Kind::Lex, {}); }
  static MonomialOrder weighted_degrevlex(std::vector<long> weights) {
    return MonomialOrder(Kind::WeightedDegrevlex, std::move(weights));
  }

  Kind kind() const { return kind_; }
  const std::vector<long>& weights() const { return weights_; }

  int compare(const ExponentVector& a, const ExponentVector& b) const;
  bool less(const ExponentVector& a, const ExponentVector& b) const { return compare(a, b) < 0; }

 private:
  MonomialOrder(Kind kind, std::vector<long> weights) : kind_(kind), weights_(std::move(weights)) {}
  Kind kind_;
  std::vector<long> weights_;
};

struct GroebnerOptions {
  // Cap on single-term reduction steps. Exceeding it throws
  // ResourceLimitError; paper-scale instances stay far below the default.
  std::uint64_t step_budget = 1000000;
};

struct GroebnerStats {
  std::uint64_t pairs_formed = 0;
  std::uint64_t pairs_reduced = 0;
  std::uint64_t zero_reductions = 0;
  std::uint64_t reduction_steps = 0;
  std::size_t basis_size = 0;
};

// Reduced Groebner basis. Generators are content-free integer polynomials
// with positive leading coefficient, sorted by increasing leading monomial,
// so the representation of an ideal is unique for a fixed order.
class GroebnerBasis {
 public:
  GroebnerBasis(std::vector<Polynomial> generators, MonomialOrder order,
                std::vector<Polynomial> source, GroebnerStats stats, std::size_t nvars)
      : generators_(std::move(generators)),
        order_(std::move(order)),
        source_(std::move(source)),
        stats_(stats),
        nvars_(nvars) {}

  const std::vector<Polynomial>& generators() const { return generators_; }
  const MonomialOrder& order() const { return order_; }
  const std::vector<Polynomial>& source() const { return source_; }
  const GroebnerStats& stats() const { return stats_; }
  std::size_t nvars() const { return nvars_; }

  bool is_zero_ideal() const { return generators_.empty(); }
  bool is_unit_ideal() const {
    return generators_.size() == 1 && generators_[0].is_constant() && !generators_[0].is_zero();
  }

 private:
  std::vector<Polynomial> generators_;
  MonomialOrder order_;
  std::vector<Polynomial> source_;
  GroebnerStats stats_;
  std::size_t nvars_;
};

// Buchberger with the Gebauer-Moeller pair criteria; coefficients stay
// content-free integer polynomials throughout the reduction.
GroebnerBasis groebner_basis(const std::vector<Polynomial>& gens, const MonomialOrder& order,
                             const GroebnerOptions& options = {});

// Unique remainder of p modulo the reduced basis; zero iff p is a member.
Polynomial normal_form(const Polynomial& p, const GroebnerBasis& gb);

bool ideal_contains(const GroebnerBasis& gb, const Polynomial& p);

// Krull dimension of the quotient ring, via maximal independent variable
// sets modulo the leading term ideal. Throws InputError on the unit ideal.
long krull_dimension(const GroebnerBasis& gb);

// True iff every variable has a pure power among the leading monomials; for
// a homogeneous ideal this is the graded m-primary test.
bool is_zero_dimensional(const GroebnerBasis& gb);

// Smallest pure-power exponent of each variable in the leading term ideal
// (0 where none exists) -- the certificate behind is_zero_dimensional.
std::vector<unsigned> leading_pure_powers(const GroebnerBasis& gb);

}  // namespace negder

#endif
