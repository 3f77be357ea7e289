#ifndef NEGDER_DERIVATION_HPP
#define NEGDER_DERIVATION_HPP

#include <optional>
#include <string>
#include <vector>

#include "negder/polynomial.hpp"
#include "negder/weight_system.hpp"

namespace negder {

// A K-linear derivation q_1 d/dx_1 + ... + q_n d/dx_n, carried as its
// coefficient vector together with the ambient weights. Homogeneous of
// degree a iff every non-zero q_i is homogeneous of degree a + w_i.
class Derivation {
 public:
  Derivation(std::vector<Polynomial> coefficients, WeightSystem weights);

  std::size_t nvars() const { return coeffs_.size(); }
  const std::vector<Polynomial>& coefficients() const { return coeffs_; }
  const Polynomial& coefficient(std::size_t i) const { return coeffs_[i]; }
  const WeightSystem& weights() const { return weights_; }

  bool is_zero() const;

  // Applies the derivation: sum_i q_i * d(p)/dx_i.
  Polynomial apply(const Polynomial& p) const;

  bool operator==(const Derivation&) const = default;

  std::string to_string(const std::vector<std::string>& names) const;
  std::string to_string() const;

 private:
  std::vector<Polynomial> coeffs_;
  WeightSystem weights_;
};

// The Euler derivation sum_i w_i x_i d/dx_i; homogeneous elements are its
// eigenvectors with eigenvalue their degree.
Derivation euler(const WeightSystem& w);

// Kersken's trivial derivation delta_nu for strictly increasing indices
// nu_0 < ... < nu_t (0-based), given t equations: the formal (t+1)x(t+1)
// determinant with the d/dx_{nu_j} symbols in the first row, expanded along
// that row. The coefficient of d/dx_{nu_j} is (-1)^j times the complementary
// t x t minor of (d g_i / d x_{nu_l}). Sign convention fixed globally.
Derivation trivial_derivation(const std::vector<Polynomial>& g, const std::vector<std::size_t>& nu,
                              const WeightSystem& w);

// Common value of weighted_degree(q_i) - w_i over the non-zero coefficients,
// or nullopt when they disagree or some q_i is inhomogeneous. Throws
// InputError on the zero derivation.
std::optional<long> derivation_degree(const Derivation& d);

inline Polynomial apply(const Derivation& d, const Polynomial& p) { return d.apply(p); }

// All maximal minors |dg/dx_nu| of the Jacobian matrix of g, |nu| = t, in
// lexicographic nu order.
std::vector<Polynomial> jacobian_minors(const std::vector<Polynomial>& g);

}  // namespace negder

#endif
