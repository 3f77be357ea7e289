#include "negder/derivation.hpp"

#include <algorithm>
#include <sstream>

#include "negder/errors.hpp"

namespace negder {

Derivation::Derivation(std::vector<Polynomial> coefficients, WeightSystem weights)
    : coeffs_(std::move(coefficients)), weights_(std::move(weights)) {
  if (coeffs_.size() != weights_.size())
    throw InputError("derivation coefficient count does not match the weight system");
  for (const Polynomial& q : coeffs_)
    if (q.nvars() != coeffs_.size())
      throw InputError("derivation coefficients live in the wrong ambient ring");
}

bool Derivation::is_zero() const {
  return std::all_of(coeffs_.begin(), coeffs_.end(),
                     [](const Polynomial& q) { return q.is_zero(); });
}

Polynomial Derivation::apply(const Polynomial& p) const {
  if (p.nvars() != nvars()) throw InputError("apply: incompatible ambient ring");
  Polynomial out(p.nvars());
  for (std::size_t i = 0; i < coeffs_.size(); ++i) {
    if (coeffs_[i].is_zero()) continue;
    out += coeffs_[i] * partial_derivative(p, i);
  }
  return out;
}

std::string Derivation::to_string(const std::vector<std::string>& names) const {
  std::ostringstream os;
  bool first = true;
  for (std::size_t i = 0; i < coeffs_.size(); ++i) {
    if (coeffs_[i].is_zero()) continue;
    if (!first) os << " + ";
    first = false;
    os << "(" << coeffs_[i].to_string(names) << ")*d/d" << names[i];
  }
  if (first) os << "0";
  return os.str();
}

std::string Derivation::to_string() const {
  std::vector<std::string> names(nvars());
  for (std::size_t i = 0; i < names.size(); ++i) names[i] = "x" + std::to_string(i + 1);
  return to_string(names);
}

Derivation euler(const WeightSystem& w) {
  std::vector<Polynomial> coeffs;
  coeffs.reserve(w.size());
  for (std::size_t i = 0; i < w.size(); ++i)
    coeffs.push_back(Polynomial::variable(w.size(), i) * make_rational(w[i]));
  return Derivation(std::move(coeffs), w);
}

Derivation trivial_derivation(const std::vector<Polynomial>& g, const std::vector<std::size_t>& nu,
                              const WeightSystem& w) {
  const std::size_t t = g.size();
  const std::size_t n = w.size();
  for (const Polynomial& gi : g)
    if (gi.nvars() != n) throw InputError("trivial_derivation: equations in the wrong ring");
  if (nu.size() != t + 1) throw InputError("trivial_derivation: nu must have length t+1");
  for (std::size_t j = 0; j < nu.size(); ++j) {
    if (nu[j] >= n) throw InputError("trivial_derivation: index out of range");
    if (j > 0 && nu[j] <= nu[j - 1])
      throw InputError("trivial_derivation: indices must be strictly increasing");
  }
  // partials[i][j] = d g_i / d x_{nu_j}
  std::vector<std::vector<Polynomial>> partials(t, std::vector<Polynomial>(t + 1));
  for (std::size_t i = 0; i < t; ++i)
    for (std::size_t j = 0; j <= t; ++j) partials[i][j] = partial_derivative(g[i], nu[j]);

  std::vector<Polynomial> coeffs(n, Polynomial::zero(n));
  for (std::size_t j = 0; j <= t; ++j) {
    if (t == 0) {
      coeffs[nu[j]] = Polynomial::constant(n, make_rational(1));
      continue;
    }
    std::vector<std::vector<Polynomial>> minor(t, std::vector<Polynomial>(t));
    for (std::size_t r = 0; r < t; ++r) {
      std::size_t cc = 0;
      for (std::size_t c = 0; c <= t; ++c) {
        if (c == j) continue;
        minor[r][cc++] = partials[r][c];
      }
    }
    Polynomial m = determinant(minor, t);
    coeffs[nu[j]] = (j % 2) ? -m : m;
  }
  return Derivation(std::move(coeffs), w);
}

std::optional<long> derivation_degree(const Derivation& d) {
  if (d.is_zero()) throw InputError("degree of the zero derivation is undefined");
  std::optional<long> deg;
  for (std::size_t i = 0; i < d.nvars(); ++i) {
    const Polynomial& q = d.coefficient(i);
    if (q.is_zero()) continue;
    std::optional<long> qd = weighted_degree(q, d.weights());
    if (!qd) return std::nullopt;
    long a = *qd - d.weights()[i];
    if (deg && *deg != a) return std::nullopt;
    deg = a;
  }
  return deg;
}

std::vector<Polynomial> jacobian_minors(const std::vector<Polynomial>& g) {
  const std::size_t t = g.size();
  if (t == 0) throw InputError("jacobian_minors: empty system");
  const std::size_t n = g[0].nvars();
  if (t > n) throw InputError("jacobian_minors: more equations than variables");

  std::vector<std::vector<Polynomial>> jac(t, std::vector<Polynomial>(n));
  for (std::size_t i = 0; i < t; ++i)
    for (std::size_t c = 0; c < n; ++c) jac[i][c] = partial_derivative(g[i], c);

  std::vector<Polynomial> minors;
  std::vector<std::size_t> cols(t);
  for (std::size_t i = 0; i < t; ++i) cols[i] = i;
  while (true) {
    std::vector<std::vector<Polynomial>> sub(t, std::vector<Polynomial>(t));
    for (std::size_t r = 0; r < t; ++r)
      for (std::size_t c = 0; c < t; ++c) sub[r][c] = jac[r][cols[c]];
    minors.push_back(determinant(sub, t));
    // next combination in lexicographic order
    std::size_t k = t;
    while (k > 0 && cols[k - 1] == n - t + (k - 1)) --k;
    if (k == 0) break;
    ++cols[k - 1];
    for (std::size_t l = k; l < t; ++l) cols[l] = cols[l - 1] + 1;
  }
  return minors;
}

}  // namespace negder
