#ifndef NEGDER_EXPONENT_VECTOR_HPP
#define NEGDER_EXPONENT_VECTOR_HPP

#include <cstddef>
#include <span>
#include <vector>

namespace negder {

// Exponent vector of a monomial x^a = x_1^{a_1} ... x_n^{a_n}.
// Length always equals the ambient variable count.
class ExponentVector {
 public:
  ExponentVector() = default;
  explicit ExponentVector(std::size_t nvars) : e_(nvars, 0u) {}
  explicit ExponentVector(std::vector<unsigned> exps) : e_(std::move(exps)) {}

  // x_i^k as an exponent vector.
  static ExponentVector unit(std::size_t nvars, std::size_t i, unsigned k = 1) {
    ExponentVector m(nvars);
    m.e_[i] = k;
    return m;
  }

  std::size_t size() const { return e_.size(); }
  unsigned operator[](std::size_t i) const { return e_[i]; }
  unsigned& operator[](std::size_t i) { return e_[i]; }

  long total_degree() const {
    long d = 0;
    for (unsigned x : e_) d += static_cast<long>(x);
    return d;
  }

  long weighted_degree(std::span<const long> w) const {
    long d = 0;
    for (std::size_t i = 0; i < e_.size(); ++i) d += static_cast<long>(e_[i]) * w[i];
    return d;
  }

  bool is_constant() const {
    for (unsigned x : e_)
      if (x) return false;
    return true;
  }

  bool divides(const ExponentVector& m) const {
    for (std::size_t i = 0; i < e_.size(); ++i)
      if (e_[i] > m.e_[i]) return false;
    return true;
  }

  ExponentVector operator*(const ExponentVector& o) const {
    ExponentVector r(*this);
    for (std::size_t i = 0; i < e_.size(); ++i) r.e_[i] += o.e_[i];
    return r;
  }

  // Componentwise difference; caller guarantees o.divides(*this).
  ExponentVector operator/(const ExponentVector& o) const {
    ExponentVector r(*this);
    for (std::size_t i = 0; i < e_.size(); ++i) r.e_[i] -= o.e_[i];
    return r;
  }

  static ExponentVector lcm(const ExponentVector& a, const ExponentVector& b) {
    ExponentVector r(a);
    for (std::size_t i = 0; i < r.e_.size(); ++i)
      if (b.e_[i] > r.e_[i]) r.e_[i] = b.e_[i];
    return r;
  }

  static bool coprime(const ExponentVector& a, const ExponentVector& b) {
    for (std::size_t i = 0; i < a.e_.size(); ++i)
      if (a.e_[i] && b.e_[i]) return false;
    return true;
  }

  bool operator==(const ExponentVector&) const = default;

  auto begin() const { return e_.begin(); }
  auto end() const { return e_.end(); }

 private:
  std::vector<unsigned> e_;
};

// Graded reverse lexicographic comparison with x_1 > x_2 > ... > x_n.
// Returns <0, 0, >0 as a is smaller than, equal to, or greater than b.
inline int degrevlex_compare(const ExponentVector& a, const ExponentVector& b) {
  long da = a.total_degree(), db = b.total_degree();
  if (da != db) return da < db ? -1 : 1;
  for (std::size_t i = a.size(); i-- > 0;) {
    if (a[i] != b[i]) return a[i] > b[i] ? -1 : 1;
  }
  return 0;
}

inline int lex_compare(const ExponentVector& a, const ExponentVector& b) {
  for (std::size_t i = 0; i < a.size(); ++i) {
    if (a[i] != b[i]) return a[i] < b[i] ? -1 : 1;
  }
  return 0;
}

}  // namespace negder

#endif
