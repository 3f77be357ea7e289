#include "negder/polynomial.hpp"

#include <algorithm>
#include <map>
#include <sstream>

#include "negder/errors.hpp"

namespace negder {

Rational rational_from_string(const std::string& text) {
  Rational q;
  if (q.set_str(text, 10) != 0) throw std::invalid_argument("not a rational: " + text);
  q.canonicalize();
  return q;
}

Polynomial Polynomial::constant(std::size_t nvars, const Rational& c) {
  Polynomial p(nvars);
  if (c != 0) p.terms_.push_back({ExponentVector(nvars), c});
  return p;
}

Polynomial Polynomial::variable(std::size_t nvars, std::size_t i) {
  Polynomial p(nvars);
  p.terms_.push_back({ExponentVector::unit(nvars, i), make_rational(1)});
  return p;
}

Polynomial Polynomial::monomial(ExponentVector m, const Rational& c) {
  Polynomial p(m.size());
  if (c != 0) p.terms_.push_back({std::move(m), c});
  return p;
}

Polynomial Polynomial::from_terms(std::size_t nvars, std::vector<Term> terms) {
  Polynomial p(nvars);
  p.terms_ = std::move(terms);
  p.normalize();
  return p;
}

bool Polynomial::is_constant() const {
  return terms_.empty() || (terms_.size() == 1 && terms_[0].mono.is_constant());
}

const Polynomial::Term& Polynomial::leading_term() const {
  if (terms_.empty()) throw InputError("zero polynomial has no leading term");
  return terms_.front();
}

Rational Polynomial::coefficient(const ExponentVector& m) const {
  for (const Term& t : terms_)
    if (t.mono == m) return t.coeff;
  return Rational(0);
}

void Polynomial::normalize() {
  std::sort(terms_.begin(), terms_.end(), [](const Term& a, const Term& b) {
    return degrevlex_compare(a.mono, b.mono) > 0;
  });
  std::vector<Term> out;
  out.reserve(terms_.size());
  for (Term& t : terms_) {
    if (!out.empty() && out.back().mono == t.mono)
      out.back().coeff += t.coeff;
    else
      out.push_back(std::move(t));
    if (!out.empty() && out.back().coeff == 0) out.pop_back();
  }
  terms_ = std::move(out);
}

Polynomial Polynomial::operator-() const {
  Polynomial r(*this);
  for (Term& t : r.terms_) t.coeff = -t.coeff;
  return r;
}

Polynomial Polynomial::operator+(const Polynomial& o) const {
  Polynomial r(nvars_ ? nvars_ : o.nvars_);
  r.terms_.reserve(terms_.size() + o.terms_.size());
  std::size_t i = 0, j = 0;
  while (i < terms_.size() && j < o.terms_.size()) {
    int c = degrevlex_compare(terms_[i].mono, o.terms_[j].mono);
    if (c > 0) {
      r.terms_.push_back(terms_[i++]);
    } else if (c < 0) {
      r.terms_.push_back(o.terms_[j++]);
    } else {
      Rational s = terms_[i].coeff + o.terms_[j].coeff;
      if (s != 0) r.terms_.push_back({terms_[i].mono, std::move(s)});
      ++i, ++j;
    }
  }
  for (; i < terms_.size(); ++i) r.terms_.push_back(terms_[i]);
  for (; j < o.terms_.size(); ++j) r.terms_.push_back(o.terms_[j]);
  return r;
}

Polynomial Polynomial::operator-(const Polynomial& o) const { return *this + (-o); }

namespace {
struct DegrevlexGreater {
  bool operator()(const ExponentVector& a, const ExponentVector& b) const {
    return degrevlex_compare(a, b) > 0;
  }
};
}  // namespace

Polynomial Polynomial::operator*(const Polynomial& o) const {
  Polynomial r(nvars_ ? nvars_ : o.nvars_);
  if (terms_.empty() || o.terms_.empty()) return r;
  std::map<ExponentVector, Rational, DegrevlexGreater> acc;
  for (const Term& a : terms_)
    for (const Term& b : o.terms_) {
      Rational c = a.coeff * b.coeff;
      auto [it, fresh] = acc.emplace(a.mono * b.mono, c);
      if (!fresh) it->second += c;
    }
  r.terms_.reserve(acc.size());
  for (auto& [m, c] : acc)
    if (c != 0) r.terms_.push_back({m, std::move(c)});
  return r;
}

Polynomial Polynomial::operator*(const Rational& c) const {
  Polynomial r(nvars_);
  if (c == 0) return r;
  r.terms_.reserve(terms_.size());
  for (const Term& t : terms_) r.terms_.push_back({t.mono, t.coeff * c});
  return r;
}

Polynomial Polynomial::pow(unsigned k) const {
  Polynomial r = Polynomial::constant(nvars_, make_rational(1));
  Polynomial base(*this);
  while (k) {
    if (k & 1u) r = r * base;
    k >>= 1u;
    if (k) base = base * base;
  }
  return r;
}

long Polynomial::total_degree() const {
  if (terms_.empty()) throw InputError("zero polynomial has no degree");
  long d = 0;
  for (const Term& t : terms_) d = std::max(d, t.mono.total_degree());
  return d;
}

std::string Polynomial::to_string() const {
  std::vector<std::string> names(nvars_);
  for (std::size_t i = 0; i < nvars_; ++i) names[i] = "x" + std::to_string(i + 1);
  return to_string(names);
}

std::string Polynomial::to_string(const std::vector<std::string>& names) const {
  if (terms_.empty()) return "0";
  std::ostringstream os;
  bool first = true;
  for (const Term& t : terms_) {
    Rational a = t.coeff;
    bool neg = a < 0;
    if (neg) a = -a;
    if (first) {
      if (neg) os << "-";
    } else {
      os << (neg ? " - " : " + ");
    }
    first = false;
    bool printed_coeff = false;
    if (a != 1 || t.mono.is_constant()) {
      os << a.get_str();
      printed_coeff = true;
    }
    for (std::size_t i = 0; i < t.mono.size(); ++i) {
      if (t.mono[i] == 0) continue;
      if (printed_coeff) os << "*";
      printed_coeff = true;
      os << names[i];
      if (t.mono[i] > 1) os << "^" << t.mono[i];
    }
  }
  return os.str();
}

std::optional<long> weighted_degree(const Polynomial& p, const WeightSystem& w) {
  if (p.is_zero()) throw InputError("weighted degree of the zero polynomial is undefined");
  long d = p.terms().front().mono.weighted_degree(w.values());
  for (const Polynomial::Term& t : p.terms())
    if (t.mono.weighted_degree(w.values()) != d) return std::nullopt;
  return d;
}

long order_of(const Polynomial& p) {
  if (p.is_zero()) throw InputError("order of the zero polynomial is undefined");
  long o = p.terms().front().mono.total_degree();
  for (const Polynomial::Term& t : p.terms()) o = std::min(o, t.mono.total_degree());
  return o;
}

Polynomial partial_derivative(const Polynomial& p, std::size_t i) {
  std::vector<Polynomial::Term> terms;
  terms.reserve(p.term_count());
  for (const Polynomial::Term& t : p.terms()) {
    if (t.mono[i] == 0) continue;
    ExponentVector m = t.mono;
    Rational c = t.coeff * make_rational(static_cast<long>(m[i]));
    m[i] -= 1;
    terms.push_back({std::move(m), std::move(c)});
  }
  return Polynomial::from_terms(p.nvars(), std::move(terms));
}

Polynomial substitute(const Polynomial& p, std::size_t i, const Polynomial& r) {
  // Identity substitution is common enough to shortcut.
  if (r == Polynomial::variable(p.nvars(), i)) return p;
  Polynomial out(p.nvars());
  std::vector<Polynomial> powers = {Polynomial::constant(p.nvars(), make_rational(1))};
  for (const Polynomial::Term& t : p.terms()) {
    unsigned k = t.mono[i];
    while (powers.size() <= k) powers.push_back(powers.back() * r);
    ExponentVector rest = t.mono;
    rest[i] = 0;
    out += Polynomial::monomial(std::move(rest), t.coeff) * powers[k];
  }
  return out;
}

Polynomial permute_variables(const Polynomial& p, const std::vector<std::size_t>& perm) {
  std::vector<Polynomial::Term> terms;
  terms.reserve(p.term_count());
  for (const Polynomial::Term& t : p.terms()) {
    ExponentVector m(p.nvars());
    for (std::size_t k = 0; k < p.nvars(); ++k) m[k] = t.mono[perm[k]];
    terms.push_back({std::move(m), t.coeff});
  }
  return Polynomial::from_terms(p.nvars(), std::move(terms));
}

Polynomial divide_exact(const Polynomial& p, const Polynomial& d) {
  if (d.is_zero()) throw InputError("division by the zero polynomial");
  Polynomial rem = p;
  Polynomial quot(p.nvars());
  const Polynomial::Term& lead = d.leading_term();
  while (!rem.is_zero()) {
    const Polynomial::Term& rt = rem.leading_term();
    if (!lead.mono.divides(rt.mono)) throw InputError("inexact polynomial division");
    Polynomial q = Polynomial::monomial(rt.mono / lead.mono, rt.coeff / lead.coeff);
    quot += q;
    rem -= q * d;
  }
  return quot;
}

namespace {

Polynomial det_cofactor(const std::vector<std::vector<Polynomial>>& m, std::vector<std::size_t> cols,
                        std::size_t row, std::size_t nvars) {
  if (cols.size() == 1) return m[row][cols[0]];
  Polynomial acc(nvars);
  for (std::size_t j = 0; j < cols.size(); ++j) {
    if (m[row][cols[j]].is_zero()) continue;
    std::vector<std::size_t> sub;
    sub.reserve(cols.size() - 1);
    for (std::size_t l = 0; l < cols.size(); ++l)
      if (l != j) sub.push_back(cols[l]);
    Polynomial minor = det_cofactor(m, std::move(sub), row + 1, nvars);
    Polynomial contrib = m[row][cols[j]] * minor;
    if (j % 2)
      acc -= contrib;
    else
      acc += contrib;
  }
  return acc;
}

Polynomial det_bareiss(std::vector<std::vector<Polynomial>> m, std::size_t nvars) {
  const std::size_t n = m.size();
  int sign = 1;
  Polynomial prev = Polynomial::constant(nvars, make_rational(1));
  for (std::size_t k = 0; k + 1 < n; ++k) {
    std::size_t piv = k;
    while (piv < n && m[piv][k].is_zero()) ++piv;
    if (piv == n) return Polynomial::zero(nvars);
    if (piv != k) {
      std::swap(m[piv], m[k]);
      sign = -sign;
    }
    for (std::size_t i = k + 1; i < n; ++i) {
      for (std::size_t j = k + 1; j < n; ++j) {
        Polynomial num = m[k][k] * m[i][j] - m[i][k] * m[k][j];
        m[i][j] = divide_exact(num, prev);
      }
      m[i][k] = Polynomial::zero(nvars);
    }
    prev = m[k][k];
  }
  Polynomial det = m[n - 1][n - 1];
  return sign < 0 ? -det : det;
}

}  // namespace

Polynomial determinant(const std::vector<std::vector<Polynomial>>& m, std::size_t max_size) {
  const std::size_t n = m.size();
  if (n == 0) throw InputError("determinant of an empty matrix");
  for (const auto& row : m)
    if (row.size() != n) throw InputError("determinant requires a square matrix");
  if (n > max_size)
    throw InputError("matrix size " + std::to_string(n) + " exceeds determinant bound " +
                     std::to_string(max_size));
  std::size_t nvars = m[0][0].nvars();
  if (n <= 4) {
    std::vector<std::size_t> cols(n);
    for (std::size_t j = 0; j < n; ++j) cols[j] = j;
    return det_cofactor(m, std::move(cols), 0, nvars);
  }
  return det_bareiss(m, nvars);
}

}  // namespace negder
