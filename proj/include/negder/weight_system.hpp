#ifndef NEGDER_WEIGHT_SYSTEM_HPP
#define NEGDER_WEIGHT_SYSTEM_HPP

#include <cstddef>
#include <numeric>
#include <span>
#include <vector>

#include "negder/errors.hpp"

namespace negder {

// Positive integer weights w_1, ..., w_n defining a grading on the polynomial
// ring. Validated systems additionally keep them coprime and non-increasing;
// a bare WeightSystem only guarantees positivity.
class WeightSystem {
 public:
  WeightSystem() = default;
  explicit WeightSystem(std::vector<long> weights) : w_(std::move(weights)) {
    for (long wi : w_)
      if (wi <= 0) throw InputError("weights must be positive integers");
  }

  std::size_t size() const { return w_.size(); }
  long operator[](std::size_t i) const { return w_[i]; }
  std::span<const long> values() const { return w_; }

  long sum() const { return std::accumulate(w_.begin(), w_.end(), 0L); }

  bool is_non_increasing() const {
    for (std::size_t i = 1; i < w_.size(); ++i)
      if (w_[i] > w_[i - 1]) return false;
    return true;
  }

  bool is_coprime() const { return gcd() == 1; }

  long gcd() const {
    long g = 0;
    for (long wi : w_) g = std::gcd(g, wi);
    return g;
  }

  // Same ray, coprime entries.
  WeightSystem normalized() const {
    long g = gcd();
    std::vector<long> w(w_);
    if (g > 1)
      for (long& wi : w) wi /= g;
    return WeightSystem(std::move(w));
  }

  bool operator==(const WeightSystem&) const = default;

  auto begin() const { return w_.begin(); }
  auto end() const { return w_.end(); }

 private:
  std::vector<long> w_;
};

}  // namespace negder

#endif
