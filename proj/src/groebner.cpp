#include "negder/groebner.hpp"

#include <algorithm>
#include <list>
#include <sstream>

#include "negder/errors.hpp"

namespace negder {

int MonomialOrder::compare(const ExponentVector& a, const ExponentVector& b) const {
  switch (kind_) {
    case Kind::Degrevlex:
      return degrevlex_compare(a, b);
    case Kind::Lex:
      return lex_compare(a, b);
    case Kind::WeightedDegrevlex: {
      long da = a.weighted_degree(weights_), db = b.weighted_degree(weights_);
      if (da != db) return da < db ? -1 : 1;
      return degrevlex_compare(a, b);
    }
  }
  return 0;
}

namespace {

struct ZTerm {
  ExponentVector mono;
  Integer coeff;
};

// Terms sorted strictly decreasing w.r.t. the active order, content-free,
// positive leading coefficient after normalize().
using ZPoly = std::vector<ZTerm>;

const ExponentVector& lm(const ZPoly& p) { return p.front().mono; }
const Integer& lc(const ZPoly& p) { return p.front().coeff; }

void normalize_content(ZPoly& p) {
  if (p.empty()) return;
  Integer g = 0;
  for (const ZTerm& t : p) {
    mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), t.coeff.get_mpz_t());
    if (g == 1) break;
  }
  if (p.front().coeff < 0) g = -g;
  if (g != 1)
    for (ZTerm& t : p) t.coeff /= g;
}

class Engine {
 public:
  Engine(const MonomialOrder& order, std::size_t nvars, const GroebnerOptions& options)
      : ord_(order), nvars_(nvars), budget_(options.step_budget) {}

  GroebnerStats stats;

  // Clears denominators and sorts by the active order. `denominator` receives
  // the applied scale, i.e. the result equals denominator * p.
  ZPoly from_polynomial_raw(const Polynomial& p, Integer* denominator = nullptr) const {
    Integer den = 1;
    for (const Polynomial::Term& t : p.terms())
      mpz_lcm(den.get_mpz_t(), den.get_mpz_t(), t.coeff.get_den_mpz_t());
    ZPoly z;
    z.reserve(p.term_count());
    for (const Polynomial::Term& t : p.terms()) {
      Rational c = t.coeff * Rational(den);
      z.push_back({t.mono, Integer(c.get_num())});
    }
    std::sort(z.begin(), z.end(),
              [&](const ZTerm& a, const ZTerm& b) { return ord_.compare(a.mono, b.mono) > 0; });
    if (denominator) *denominator = den;
    return z;
  }

  ZPoly from_polynomial(const Polynomial& p) const {
    ZPoly z = from_polynomial_raw(p);
    normalize_content(z);
    return z;
  }

  Polynomial to_polynomial(const ZPoly& z) const {
    std::vector<Polynomial::Term> terms;
    terms.reserve(z.size());
    for (const ZTerm& t : z) terms.push_back({t.mono, Rational(t.coeff)});
    return Polynomial::from_terms(nvars_, std::move(terms));
  }

  void charge(std::uint64_t n = 1) {
    stats.reduction_steps += n;
    if (stats.reduction_steps > budget_)
      throw ResourceLimitError("Groebner step budget of " + std::to_string(budget_) +
                               " exceeded; raise it explicitly to continue");
  }

  // Full normal form of f w.r.t. the given reducers. Integer arithmetic; the
  // optional multiplier receives the accumulated scale so callers can recover
  // the rational normal form as result/multiplier.
  ZPoly reduce(ZPoly f, const std::vector<ZPoly>& reducers, Integer* multiplier = nullptr) {
    Integer scale = 1;
    ZPoly out;
    std::vector<ZTerm> work = std::move(f);
    std::size_t head = 0;
    while (head < work.size()) {
      const ZTerm& t = work[head];
      const ZPoly* red = nullptr;
      for (const ZPoly& g : reducers)
        if (!g.empty() && lm(g).divides(t.mono)) {
          red = &g;
          break;
        }
      if (!red) {
        out.push_back(work[head++]);
        continue;
      }
      charge();
      const ZPoly& g = *red;
      Integer d;
      mpz_gcd(d.get_mpz_t(), t.coeff.get_mpz_t(), lc(g).get_mpz_t());
      Integer a = lc(g) / d;   // applied to everything accumulated so far
      Integer b = t.coeff / d; // applied to the reducer tail
      if (a < 0) {
        a = -a;
        b = -b;
      }
      ExponentVector shift = t.mono / lm(g);
      if (a != 1) {
        scale *= a;
        for (ZTerm& o : out) o.coeff *= a;
      }
      // merged := a * work[head+1..] - b * shift * g[1..]
      std::vector<ZTerm> merged;
      merged.reserve(work.size() - head + g.size());
      std::size_t i = head + 1, j = 1;
      while (i < work.size() || j < g.size()) {
        if (j >= g.size()) {
          merged.push_back({work[i].mono, work[i].coeff * a});
          ++i;
          continue;
        }
        ExponentVector gm = g[j].mono * shift;
        if (i >= work.size()) {
          merged.push_back({std::move(gm), g[j].coeff * -b});
          ++j;
          continue;
        }
        int c = ord_.compare(work[i].mono, gm);
        if (c > 0) {
          merged.push_back({work[i].mono, work[i].coeff * a});
          ++i;
        } else if (c < 0) {
          merged.push_back({std::move(gm), g[j].coeff * -b});
          ++j;
        } else {
          Integer s = work[i].coeff * a - g[j].coeff * b;
          if (s != 0) merged.push_back({work[i].mono, std::move(s)});
          ++i, ++j;
        }
      }
      work = std::move(merged);
      head = 0;
    }
    if (multiplier) *multiplier = scale;
    return out;
  }

  ZPoly spoly(const ZPoly& f, const ZPoly& g) {
    ExponentVector L = ExponentVector::lcm(lm(f), lm(g));
    Integer d;
    mpz_gcd(d.get_mpz_t(), lc(f).get_mpz_t(), lc(g).get_mpz_t());
    Integer cf = lc(g) / d, cg = lc(f) / d;
    ExponentVector uf = L / lm(f), ug = L / lm(g);
    ZPoly a, b;
    a.reserve(f.size());
    b.reserve(g.size());
    for (const ZTerm& t : f) a.push_back({t.mono * uf, t.coeff * cf});
    for (const ZTerm& t : g) b.push_back({t.mono * ug, t.coeff * cg});
    // a - b with cancelling leading terms
    ZPoly r;
    r.reserve(a.size() + b.size());
    std::size_t i = 0, j = 0;
    while (i < a.size() || j < b.size()) {
      if (i >= a.size()) {
        r.push_back({b[j].mono, -b[j].coeff});
        ++j;
      } else if (j >= b.size()) {
        r.push_back(std::move(a[i]));
        ++i;
      } else {
        int c = ord_.compare(a[i].mono, b[j].mono);
        if (c > 0) {
          r.push_back(std::move(a[i]));
          ++i;
        } else if (c < 0) {
          r.push_back({b[j].mono, -b[j].coeff});
          ++j;
        } else {
          Integer s = a[i].coeff - b[j].coeff;
          if (s != 0) r.push_back({a[i].mono, std::move(s)});
          ++i, ++j;
        }
      }
    }
    return r;
  }

  struct Pair {
    std::size_t i, j;  // i < j
    ExponentVector lcm;
  };

  bool pair_precedes(const Pair& a, const Pair& b) const {
    int c = ord_.compare(a.lcm, b.lcm);
    if (c != 0) return c < 0;
    if (a.j != b.j) return a.j < b.j;
    return a.i < b.i;
  }

  // Gebauer-Moeller update: filters the pending pair set against the new
  // element and generates its surviving pairs.
  void update_pairs(std::vector<Pair>& pairs, const std::vector<ZPoly>& basis,
                    std::vector<bool>& alive, std::size_t s) {
    const ExponentVector& hm = lm(basis[s]);

    struct Cand {
      std::size_t i;
      ExponentVector lcm;
      bool coprime;
    };
    std::vector<Cand> candidates;
    for (std::size_t i = 0; i < s; ++i)
      if (alive[i])
        candidates.push_back(
            {i, ExponentVector::lcm(lm(basis[i]), hm), ExponentVector::coprime(lm(basis[i]), hm)});
    stats.pairs_formed += candidates.size();

    // Phase 1: keep a candidate if its lms are coprime or no other candidate
    // (unprocessed or already kept) has an lcm dividing its own.
    std::vector<Cand> kept;
    std::vector<bool> dropped(candidates.size(), false);
    for (std::size_t a = 0; a < candidates.size(); ++a) {
      bool keep = candidates[a].coprime;
      if (!keep) {
        keep = true;
        for (std::size_t b = 0; b < candidates.size() && keep; ++b) {
          if (b == a || dropped[b]) continue;
          if (candidates[b].lcm.divides(candidates[a].lcm) &&
              !(b > a && candidates[b].lcm == candidates[a].lcm))
            keep = false;
        }
      }
      if (keep)
        kept.push_back(candidates[a]);
      else
        dropped[a] = true;
    }

    // Phase 2: the product criterion disposes of coprime pairs.
    std::vector<Pair> fresh;
    for (const Cand& c : kept)
      if (!c.coprime) fresh.push_back({c.i, s, c.lcm});

    // Phase 3: prune old pairs whose lcm the new leading monomial divides
    // properly on both sides.
    std::vector<Pair> retained;
    retained.reserve(pairs.size() + fresh.size());
    for (Pair& p : pairs) {
      if (!hm.divides(p.lcm) || ExponentVector::lcm(lm(basis[p.i]), hm) == p.lcm ||
          ExponentVector::lcm(lm(basis[p.j]), hm) == p.lcm)
        retained.push_back(std::move(p));
    }
    for (Pair& p : fresh) retained.push_back(std::move(p));
    pairs = std::move(retained);

    for (std::size_t i = 0; i < s; ++i)
      if (alive[i] && hm.divides(lm(basis[i]))) alive[i] = false;
  }

  std::vector<ZPoly> run(const std::vector<Polynomial>& gens) {
    std::vector<ZPoly> inputs;
    for (const Polynomial& g : gens) {
      if (g.is_zero()) continue;
      inputs.push_back(from_polynomial(g));
    }
    std::vector<ZPoly> basis;
    std::vector<bool> alive;
    std::vector<Pair> pairs;

    auto add = [&](ZPoly h) {
      normalize_content(h);
      basis.push_back(std::move(h));
      alive.push_back(true);
      update_pairs(pairs, basis, alive, basis.size() - 1);
    };

    for (ZPoly& f : inputs) {
      ZPoly h = reduce(std::move(f), basis);
      if (!h.empty()) add(std::move(h));
    }

    while (!pairs.empty()) {
      std::size_t best = 0;
      for (std::size_t k = 1; k < pairs.size(); ++k)
        if (pair_precedes(pairs[k], pairs[best])) best = k;
      Pair p = std::move(pairs[best]);
      pairs.erase(pairs.begin() + static_cast<std::ptrdiff_t>(best));
      ++stats.pairs_reduced;
      ZPoly h = reduce(spoly(basis[p.i], basis[p.j]), basis);
      if (h.empty()) {
        ++stats.zero_reductions;
        continue;
      }
      add(std::move(h));
    }

    return interreduce(std::move(basis));
  }

  std::vector<ZPoly> interreduce(std::vector<ZPoly> basis) {
    std::sort(basis.begin(), basis.end(),
              [&](const ZPoly& a, const ZPoly& b) { return ord_.compare(lm(a), lm(b)) < 0; });
    // A proper divisor of a monomial is smaller in any monomial order, so a
    // single ascending sweep finds the minimal generators.
    std::vector<ZPoly> minimal;
    for (ZPoly& g : basis) {
      bool redundant = false;
      for (const ZPoly& m : minimal)
        if (lm(m).divides(lm(g))) {
          redundant = true;
          break;
        }
      if (!redundant) minimal.push_back(std::move(g));
    }
    for (std::size_t i = 0; i < minimal.size(); ++i) {
      std::vector<ZPoly> others;
      others.reserve(minimal.size() - 1);
      for (std::size_t j = 0; j < minimal.size(); ++j)
        if (j != i) others.push_back(minimal[j]);
      minimal[i] = reduce(std::move(minimal[i]), others);
      normalize_content(minimal[i]);
    }
    return minimal;
  }

 private:
  const MonomialOrder& ord_;
  std::size_t nvars_;
  std::uint64_t budget_;
};

std::size_t common_nvars(const std::vector<Polynomial>& gens) {
  std::size_t n = 0;
  for (const Polynomial& g : gens) {
    if (n == 0)
      n = g.nvars();
    else if (g.nvars() != n)
      throw InputError("generators live in different ambient rings");
  }
  return n;
}

}  // namespace

GroebnerBasis groebner_basis(const std::vector<Polynomial>& gens, const MonomialOrder& order,
                             const GroebnerOptions& options) {
  if (gens.empty()) throw InputError("groebner_basis requires at least one generator");
  std::size_t n = common_nvars(gens);
  if (order.kind() == MonomialOrder::Kind::WeightedDegrevlex && order.weights().size() != n)
    throw InputError("monomial order weights do not match the variable count");
  Engine engine(order, n, options);
  std::vector<ZPoly> reduced = engine.run(gens);
  std::vector<Polynomial> out;
  out.reserve(reduced.size());
  for (const ZPoly& z : reduced) out.push_back(engine.to_polynomial(z));
  GroebnerStats stats = engine.stats;
  stats.basis_size = out.size();
  return GroebnerBasis(std::move(out), order, gens, stats, n);
}

Polynomial normal_form(const Polynomial& p, const GroebnerBasis& gb) {
  if (p.nvars() != gb.nvars()) throw InputError("normal_form: incompatible ambient ring");
  if (p.is_zero() || gb.is_zero_ideal()) return p;
  GroebnerOptions opts;
  opts.step_budget = UINT64_MAX;  // reduction modulo a fixed basis terminates
  Engine engine(gb.order(), gb.nvars(), opts);
  std::vector<ZPoly> reducers;
  reducers.reserve(gb.generators().size());
  for (const Polynomial& g : gb.generators()) reducers.push_back(engine.from_polynomial(g));
  Integer den, scale;
  ZPoly nf = engine.reduce(engine.from_polynomial_raw(p, &den), reducers, &scale);
  // The input was scaled by its denominator lcm, the reduction by `scale`;
  // dividing out both yields the unique rational normal form.
  Rational factor = Rational(1) / (Rational(den) * Rational(scale));
  std::vector<Polynomial::Term> terms;
  terms.reserve(nf.size());
  for (const ZTerm& t : nf) terms.push_back({t.mono, Rational(t.coeff) * factor});
  return Polynomial::from_terms(p.nvars(), std::move(terms));
}

bool ideal_contains(const GroebnerBasis& gb, const Polynomial& p) {
  return normal_form(p, gb).is_zero();
}

namespace {
std::vector<ExponentVector> leading_monomials(const GroebnerBasis& gb) {
  std::vector<ExponentVector> lms;
  lms.reserve(gb.generators().size());
  for (const Polynomial& g : gb.generators()) lms.push_back(g.leading_term().mono);
  return lms;
}
}  // namespace

long krull_dimension(const GroebnerBasis& gb) {
  if (gb.is_unit_ideal()) throw InputError("Krull dimension of the unit ideal is undefined");
  const std::size_t n = gb.nvars();
  if (gb.is_zero_ideal()) return static_cast<long>(n);
  if (n > 20) throw InputError("krull_dimension limited to 20 variables");
  std::vector<unsigned> support;
  for (const ExponentVector& m : leading_monomials(gb)) {
    unsigned mask = 0;
    for (std::size_t i = 0; i < n; ++i)
      if (m[i]) mask |= 1u << i;
    support.push_back(mask);
  }
  long best = 0;
  for (unsigned s = 0; s < (1u << n); ++s) {
    long size = __builtin_popcount(s);
    if (size <= best) continue;
    bool independent = true;
    for (unsigned msk : support)
      if ((msk & ~s) == 0) {
        independent = false;
        break;
      }
    if (independent) best = size;
  }
  return best;
}

std::vector<unsigned> leading_pure_powers(const GroebnerBasis& gb) {
  const std::size_t n = gb.nvars();
  std::vector<unsigned> pure(n, 0);
  for (const ExponentVector& m : leading_monomials(gb)) {
    std::size_t var = n;
    bool is_pure = true;
    for (std::size_t i = 0; i < n; ++i) {
      if (m[i] == 0) continue;
      if (var != n) {
        is_pure = false;
        break;
      }
      var = i;
    }
    if (!is_pure || var == n) continue;
    if (pure[var] == 0 || m[var] < pure[var]) pure[var] = m[var];
  }
  return pure;
}

bool is_zero_dimensional(const GroebnerBasis& gb) {
  if (gb.is_unit_ideal()) throw InputError("zero-dimensionality of the unit ideal is undefined");
  if (gb.is_zero_ideal()) return gb.nvars() == 0;
  std::vector<unsigned> pure = leading_pure_powers(gb);
  return std::all_of(pure.begin(), pure.end(), [](unsigned e) { return e > 0; });
}

}  // namespace negder
