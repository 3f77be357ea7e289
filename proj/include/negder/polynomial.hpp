#ifndef NEGDER_POLYNOMIAL_HPP
#define NEGDER_POLYNOMIAL_HPP

#include <cstddef>
#include <optional>
#include <string>
#include <vector>

#include "negder/exponent_vector.hpp"
#include "negder/rational.hpp"
#include "negder/weight_system.hpp"

namespace negder {

// Sparse multivariate polynomial over the exact rationals.
//
// Terms are kept in strictly decreasing canonical order (degrevlex) with no
// zero coefficients, so two polynomials are equal iff their term vectors are.
// All operations are pure; values are safe to share across threads.
class Polynomial {
 public:
  struct Term {
    ExponentVector mono;
    Rational coeff;
    bool operator==(const Term&) const = default;
  };

  Polynomial() = default;
  explicit Polynomial(std::size_t nvars) : nvars_(nvars) {}

  static Polynomial zero(std::size_t nvars) { return Polynomial(nvars); }
  static Polynomial constant(std::size_t nvars, const Rational& c);
  static Polynomial variable(std::size_t nvars, std::size_t i);
  static Polynomial monomial(ExponentVector m, const Rational& c);
  // Builds from an arbitrary term list (merges duplicates, drops zeros).
  static Polynomial from_terms(std::size_t nvars, std::vector<Term> terms);

  std::size_t nvars() const { return nvars_; }
  const std::vector<Term>& terms() const { return terms_; }
  std::size_t term_count() const { return terms_.size(); }
  bool is_zero() const { return terms_.empty(); }
  bool is_constant() const;

  // Leading term w.r.t. the canonical order; requires non-zero.
  const Term& leading_term() const;

  // Coefficient of x^m (zero if absent).
  Rational coefficient(const ExponentVector& m) const;

  Polynomial operator-() const;
  Polynomial operator+(const Polynomial& o) const;
  Polynomial operator-(const Polynomial& o) const;
  Polynomial operator*(const Polynomial& o) const;
  Polynomial operator*(const Rational& c) const;
  Polynomial& operator+=(const Polynomial& o) { return *this = *this + o; }
  Polynomial& operator-=(const Polynomial& o) { return *this = *this - o; }
  Polynomial& operator*=(const Polynomial& o) { return *this = *this * o; }

  Polynomial pow(unsigned k) const;

  bool operator==(const Polynomial&) const = default;

  // Maximal total degree over the terms; requires non-zero.
  long total_degree() const;

  // Renders in the grammar accepted by parse_polynomial. Terms appear in
  // canonical order, e.g. "x1*x4 + x3^2 - x4^5".
  std::string to_string() const;
  std::string to_string(const std::vector<std::string>& names) const;

 private:
  std::size_t nvars_ = 0;
  std::vector<Term> terms_;  // strictly decreasing in degrevlex

  void normalize();  // sort, merge, drop zeros
};

inline Polynomial operator*(const Rational& c, const Polynomial& p) { return p * c; }

// Common weighted degree of all monomials of p, or nullopt if they disagree.
// Throws InputError on the zero polynomial (degree undefined).
std::optional<long> weighted_degree(const Polynomial& p, const WeightSystem& w);

// Minimal total degree over the monomials of p (the order of p in the maximal
// ideal). Throws InputError on the zero polynomial.
long order_of(const Polynomial& p);

// Formal partial derivative with respect to variable i (0-based).
Polynomial partial_derivative(const Polynomial& p, std::size_t i);

// Replaces variable i by r and expands to canonical form.
Polynomial substitute(const Polynomial& p, std::size_t i, const Polynomial& r);

// Renames variables: term exponent e is mapped to e' with e'[k] = e[perm[k]],
// i.e. new variable k takes the role of old variable perm[k].
Polynomial permute_variables(const Polynomial& p, const std::vector<std::size_t>& perm);

// Exact quotient p / d in the polynomial ring; throws InputError when d does
// not divide p. Used by the fraction-free determinant.
Polynomial divide_exact(const Polynomial& p, const Polynomial& d);

// Determinant of a square polynomial matrix. Cofactor expansion up to 4x4,
// fraction-free Bareiss elimination above; `max_size` guards against
// accidental blowup (the sizes appearing here are at most t+1).
Polynomial determinant(const std::vector<std::vector<Polynomial>>& m, std::size_t max_size = 8);

}  // namespace negder

#endif
