#include "negder/singularity.hpp"

#include <algorithm>
#include <numeric>
#include <sstream>

#include "negder/derivation.hpp"
#include "negder/errors.hpp"
#include "negder/linalg.hpp"

namespace negder {

namespace {

std::vector<std::size_t> invert(const std::vector<std::size_t>& perm) {
  std::vector<std::size_t> inv(perm.size());
  for (std::size_t i = 0; i < perm.size(); ++i) inv[perm[i]] = i;
  return inv;
}

}  // namespace

std::vector<std::size_t> SingularitySystem::inverse_var_perm() const { return invert(var_perm); }
std::vector<std::size_t> SingularitySystem::inverse_eq_perm() const { return invert(eq_perm); }

std::vector<Polynomial> SingularitySystem::original_equations() const {
  std::vector<Polynomial> out(t);
  std::vector<std::size_t> inv = inverse_var_perm();
  for (std::size_t j = 0; j < t; ++j) out[eq_perm[j]] = permute_variables(g[j], inv);
  return out;
}

std::string SingularitySystem::describe(const std::vector<std::string>& names) const {
  std::vector<std::string> nm = names;
  if (nm.empty()) {
    nm.resize(n);
    for (std::size_t i = 0; i < n; ++i) nm[i] = "x" + std::to_string(i + 1);
  }
  std::ostringstream os;
  os << "n=" << n << " t=" << t << " d=" << d << "\nweights:";
  for (std::size_t i = 0; i < n; ++i) os << " " << w[i];
  os << "\ndegrees:";
  for (long pi : p) os << " " << pi;
  for (std::size_t j = 0; j < t; ++j) os << "\ng" << (j + 1) << " = " << g[j].to_string(nm);
  return os.str();
}

SingularitySystem validate_system(const std::vector<Polynomial>& g_in, const WeightSystem& w_in) {
  if (g_in.empty()) throw InputError("validate_system: no equations");
  const std::size_t n = w_in.size();
  const std::size_t t = g_in.size();
  if (t > n)
    throw InputError("validate_system: more equations (" + std::to_string(t) +
                     ") than variables (" + std::to_string(n) + ")");
  for (const Polynomial& gi : g_in)
    if (gi.nvars() != n) throw InputError("validate_system: equation/weight size mismatch");

  WeightSystem w = w_in.normalized();

  // Sort variables by non-increasing weight (stable, so equal weights keep
  // their input order) and rewrite the equations in the sorted indexing.
  std::vector<std::size_t> var_perm(n);
  std::iota(var_perm.begin(), var_perm.end(), 0);
  std::stable_sort(var_perm.begin(), var_perm.end(),
                   [&](std::size_t a, std::size_t b) { return w[a] > w[b]; });
  std::vector<long> wsorted(n);
  for (std::size_t k = 0; k < n; ++k) wsorted[k] = w[var_perm[k]];
  WeightSystem ws{std::vector<long>(wsorted)};

  std::vector<Polynomial> g(t);
  std::vector<long> degs(t);
  for (std::size_t j = 0; j < t; ++j) {
    if (g_in[j].is_zero())
      throw InputError("validate_system: equation " + std::to_string(j + 1) + " is zero");
    g[j] = permute_variables(g_in[j], var_perm);
    std::optional<long> deg = weighted_degree(g[j], ws);
    if (!deg) {
      // Name two disagreeing monomials for the error message.
      const auto& terms = g_in[j].terms();
      long d0 = terms.front().mono.weighted_degree(w.values());
      std::string offender;
      for (const auto& term : terms) {
        long di = term.mono.weighted_degree(w.values());
        if (di != d0) {
          offender = Polynomial::monomial(terms.front().mono, make_rational(1)).to_string() +
                     " has degree " + std::to_string(d0) + " but " +
                     Polynomial::monomial(term.mono, make_rational(1)).to_string() +
                     " has degree " + std::to_string(di);
          break;
        }
      }
      throw InputError("validate_system: equation " + std::to_string(j + 1) +
                       " is not homogeneous: " + offender);
    }
    if (order_of(g[j]) < 2)
      throw InputError("validate_system: equation " + std::to_string(j + 1) +
                       " has order < 2, so the embedding dimension is not minimal");
    degs[j] = *deg;
  }

  std::vector<std::size_t> eq_perm(t);
  std::iota(eq_perm.begin(), eq_perm.end(), 0);
  std::stable_sort(eq_perm.begin(), eq_perm.end(),
                   [&](std::size_t a, std::size_t b) { return degs[a] > degs[b]; });

  SingularitySystem s;
  s.n = n;
  s.t = t;
  s.w = ws;
  s.var_perm = var_perm;
  s.eq_perm = eq_perm;
  s.g.resize(t);
  s.p.resize(t);
  for (std::size_t j = 0; j < t; ++j) {
    s.g[j] = g[eq_perm[j]];
    s.p[j] = degs[eq_perm[j]];
  }
  s.d = n - t;
  return s;
}

namespace {

// Primitive integer vector spanning a rational line, first non-zero entry
// positive; returns empty when v is zero.
std::vector<Integer> primitive_point(const QVector& v) {
  Integer den = 1;
  for (const Rational& c : v) mpz_lcm(den.get_mpz_t(), den.get_mpz_t(), c.get_den_mpz_t());
  std::vector<Integer> z(v.size());
  Integer g = 0;
  for (std::size_t i = 0; i < v.size(); ++i) {
    Rational c = v[i] * Rational(den);
    z[i] = Integer(c.get_num());
    mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), z[i].get_mpz_t());
  }
  if (g == 0) return {};
  for (std::size_t i = 0; i < v.size(); ++i)
    if (z[i] != 0) {
      if (z[i] < 0) g = -g;
      break;
    }
  for (Integer& zi : z) zi /= g;
  return z;
}

std::vector<Integer> primitive_integer(std::vector<Integer> z) {
  Integer g = 0;
  for (const Integer& zi : z) mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), zi.get_mpz_t());
  if (g > 1)
    for (Integer& zi : z) zi /= g;
  return z;
}

WeightSystem to_weight_system(const std::vector<Integer>& z) {
  std::vector<long> w(z.size());
  for (std::size_t i = 0; i < z.size(); ++i) {
    if (!z[i].fits_slong_p()) throw InputError("inferred weight does not fit a machine integer");
    w[i] = z[i].get_si();
  }
  return WeightSystem(std::move(w));
}

}  // namespace

std::vector<WeightSystem> infer_weights(const std::vector<Polynomial>& g) {
  if (g.empty()) throw InputError("infer_weights: no equations");
  const std::size_t n = g[0].nvars();
  if (n == 0 || n > 20) throw InputError("infer_weights supports 1..20 variables");

  // Homogeneity constraints: all exponents of one equation share a degree.
  QMatrix constraints;
  for (const Polynomial& gi : g) {
    if (gi.is_zero()) continue;
    const ExponentVector& first = gi.terms().front().mono;
    for (const Polynomial::Term& term : gi.terms()) {
      if (term.mono == first) continue;
      QVector row(n, Rational(0));
      for (std::size_t i = 0; i < n; ++i)
        row[i] = make_rational(static_cast<long>(term.mono[i]) - static_cast<long>(first[i]));
      constraints.push_back(std::move(row));
    }
  }

  // Extreme rays of {A w = 0, w >= 0}: a ray is extreme iff fixing its zero
  // coordinates leaves a one-dimensional solution space, so enumerate the
  // support candidates directly (n is small).
  std::vector<std::vector<Integer>> rays;
  for (unsigned mask = 1; mask < (1u << n); ++mask) {
    QMatrix sys = constraints;
    for (std::size_t i = 0; i < n; ++i)
      if (!(mask & (1u << i))) {
        QVector row(n, Rational(0));
        row[i] = 1;
        sys.push_back(std::move(row));
      }
    QMatrix kernel = nullspace(sys, n);
    if (kernel.size() != 1) continue;
    std::vector<Integer> z = primitive_point(kernel[0]);
    if (z.empty()) continue;
    bool nonneg = true, support_matches = true;
    for (std::size_t i = 0; i < n; ++i) {
      if (z[i] < 0) nonneg = false;
      bool in_mask = (mask & (1u << i)) != 0;
      if ((z[i] != 0) != in_mask) support_matches = false;
    }
    if (nonneg && support_matches) rays.push_back(std::move(z));
  }

  if (rays.empty()) return {};
  std::vector<Integer> total(n, 0);
  for (const auto& r : rays)
    for (std::size_t i = 0; i < n; ++i) total[i] += r[i];
  for (const Integer& c : total)
    if (c == 0) return {};  // some coordinate vanishes on the whole cone

  std::vector<WeightSystem> probes;
  if (rays.size() == 1) {
    probes.push_back(to_weight_system(rays[0]));
    return probes;
  }
  std::vector<Integer> interior = primitive_integer(total);
  for (const auto& r : rays) {
    bool positive = std::all_of(r.begin(), r.end(), [](const Integer& c) { return c > 0; });
    if (positive) {
      probes.push_back(to_weight_system(r));
    } else {
      std::vector<Integer> pushed(n);
      for (std::size_t i = 0; i < n; ++i) pushed[i] = r[i] + interior[i];
      probes.push_back(to_weight_system(primitive_integer(std::move(pushed))));
    }
  }
  probes.push_back(to_weight_system(interior));
  // Distinct rays can collapse onto the same interior probe; drop duplicates.
  std::vector<WeightSystem> unique;
  for (WeightSystem& ws : probes)
    if (std::find(unique.begin(), unique.end(), ws) == unique.end())
      unique.push_back(std::move(ws));
  return unique;
}

IsolatedResult is_isolated(const SingularitySystem& s, const GroebnerOptions& options) {
  std::vector<Polynomial> gens = s.g;
  for (Polynomial& m : jacobian_minors(s.g))
    if (!m.is_zero()) gens.push_back(std::move(m));
  GroebnerBasis gb = groebner_basis(gens, MonomialOrder::degrevlex(), options);
  IsolatedResult r;
  r.stats = gb.stats();
  r.pure_powers = leading_pure_powers(gb);
  r.isolated = !gb.is_unit_ideal() && is_zero_dimensional(gb);
  return r;
}

bool is_complete_intersection(const SingularitySystem& s, const GroebnerOptions& options) {
  GroebnerBasis gb = groebner_basis(s.g, MonomialOrder::degrevlex(), options);
  if (gb.is_unit_ideal()) return false;  // cannot happen for order >= 2 input
  return krull_dimension(gb) == static_cast<long>(s.d);
}

bool is_normal_icis(const SingularitySystem& s, const GroebnerOptions& options) {
  return s.d >= 2 && is_complete_intersection(s, options) && is_isolated(s, options).isolated;
}

std::string ConditionWitness::describe() const {
  std::ostringstream os;
  if (kind == Kind::A) {
    os << "A(" << (k + 1) << "): x" << (k + 1) << "^" << m << " occurs in g" << (j + 1);
  } else {
    os << "B(" << (k + 1) << "):";
    for (std::size_t jj = 0; jj < nu.size(); ++jj)
      os << " x" << (k + 1) << "^" << m_list[jj] << "*x" << (nu[jj] + 1) << " in g" << (jj + 1);
  }
  return os.str();
}

std::optional<ConditionWitness> condition_A(const SingularitySystem& s, std::size_t k) {
  if (k >= s.n) throw InputError("condition_A: variable index out of range");
  for (std::size_t j = 0; j < s.t; ++j) {
    unsigned best = 0;
    for (const Polynomial::Term& term : s.g[j].terms()) {
      if (term.mono[k] < 2) continue;
      bool pure = true;
      for (std::size_t i = 0; i < s.n; ++i)
        if (i != k && term.mono[i] != 0) {
          pure = false;
          break;
        }
      if (pure && (best == 0 || term.mono[k] < best)) best = term.mono[k];
    }
    if (best) {
      ConditionWitness w;
      w.kind = ConditionWitness::Kind::A;
      w.k = k;
      w.m = best;
      w.j = j;
      return w;
    }
  }
  return std::nullopt;
}

namespace {

// Kuhn's augmenting-path matching; adjacency lists are kept sorted so the
// assignment is deterministic with the smallest admissible nu preferred.
bool augment(std::size_t j, const std::vector<std::vector<std::size_t>>& adj,
             std::vector<long>& matched_nu_owner, std::vector<bool>& visited,
             std::vector<std::size_t>& choice) {
  for (std::size_t v : adj[j]) {
    if (visited[v]) continue;
    visited[v] = true;
    if (matched_nu_owner[v] < 0 ||
        augment(static_cast<std::size_t>(matched_nu_owner[v]), adj, matched_nu_owner, visited,
                choice)) {
      matched_nu_owner[v] = static_cast<long>(j);
      choice[j] = v;
      return true;
    }
  }
  return false;
}

}  // namespace

std::optional<ConditionWitness> condition_B(const SingularitySystem& s, std::size_t k) {
  if (k >= s.n) throw InputError("condition_B: variable index out of range");
  // Admissible nu per equation: monomials of the exact shape x_k^m * x_nu.
  std::vector<std::vector<std::size_t>> adj(s.t);
  std::vector<std::vector<unsigned>> exponent(s.t, std::vector<unsigned>(s.n, 0));
  for (std::size_t j = 0; j < s.t; ++j) {
    for (const Polynomial::Term& term : s.g[j].terms()) {
      if (term.mono[k] < 1) continue;
      std::size_t nu = s.n;
      bool shape = true;
      for (std::size_t i = 0; i < s.n && shape; ++i) {
        if (i == k) continue;
        if (term.mono[i] == 0) continue;
        if (term.mono[i] == 1 && nu == s.n)
          nu = i;
        else
          shape = false;
      }
      if (!shape || nu == s.n) continue;  // pure powers belong to condition A
      unsigned m = term.mono[k];
      if (exponent[j][nu] == 0 || m < exponent[j][nu]) exponent[j][nu] = m;
      if (std::find(adj[j].begin(), adj[j].end(), nu) == adj[j].end()) adj[j].push_back(nu);
    }
    std::sort(adj[j].begin(), adj[j].end());
  }
  std::vector<long> owner(s.n, -1);
  std::vector<std::size_t> choice(s.t, 0);
  for (std::size_t j = 0; j < s.t; ++j) {
    std::vector<bool> visited(s.n, false);
    if (!augment(j, adj, owner, visited, choice)) return std::nullopt;
  }
  ConditionWitness w;
  w.kind = ConditionWitness::Kind::B;
  w.k = k;
  w.nu = choice;
  w.m_list.resize(s.t);
  for (std::size_t j = 0; j < s.t; ++j) w.m_list[j] = exponent[j][choice[j]];
  return w;
}

std::vector<bool> lemma12_check(const SingularitySystem& s) {
  std::vector<bool> ok(s.t);
  long psum = 0, wsum = 0;
  for (std::size_t j = 0; j < s.t; ++j) {
    psum += s.p[j];
    wsum += s.w[j];
    ok[j] = psum >= wsum + static_cast<long>(j + 1);
  }
  return ok;
}

}  // namespace negder
