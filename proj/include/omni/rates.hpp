#pragma once

#include <numeric>
#include <stdexcept>
#include <string>
#include <vector>

#include "omni/ground.hpp"
#include "omni/rational.hpp"

namespace omni {

/// Per-user rates with exact subset sums; r({}) = 0 by convention.
class RateVector {
 public:
  RateVector() = default;  // zero-length placeholder; assign before use
  explicit RateVector(int n) : rates_(static_cast<std::size_t>(check_n(n))) {}
  explicit RateVector(std::vector<Rational> rates) : rates_(std::move(rates)) { check_n(size()); }

  [[nodiscard]] int size() const { return static_cast<int>(rates_.size()); }
  [[nodiscard]] const Rational& operator[](int i) const { return rates_.at(static_cast<std::size_t>(i)); }
  Rational& operator[](int i) { return rates_.at(static_cast<std::size_t>(i)); }
  [[nodiscard]] const std::vector<Rational>& values() const { return rates_; }

  [[nodiscard]] Rational subset_sum(Subset x) const {
    if (size() < 64 && (x.mask() >> size()) != 0) {
      throw std::invalid_argument("RateVector: subset outside ground set");
    }
    Rational sum;
    for (std::uint64_t m = x.mask(); m != 0; m &= m - 1) {
      sum += rates_[static_cast<std::size_t>(std::countr_zero(m))];
    }
    return sum;
  }

  [[nodiscard]] Rational total() const {
    return std::accumulate(rates_.begin(), rates_.end(), Rational{});
  }

  [[nodiscard]] Rational dot(const std::vector<Rational>& weights) const {
    if (weights.size() != rates_.size()) throw std::invalid_argument("RateVector: weight length mismatch");
    Rational sum;
    for (std::size_t i = 0; i < rates_.size(); ++i) sum += rates_[i] * weights[i];
    return sum;
  }

  [[nodiscard]] bool integral() const {
    for (const Rational& r : rates_) {
      if (!r.is_integer()) return false;
    }
    return true;
  }

  friend bool operator==(const RateVector&, const RateVector&) = default;

 private:
  static int check_n(int n) {
    if (n < 2 || n > 64) throw std::invalid_argument("RateVector: need 2 <= n <= 64");
    return n;
  }

  std::vector<Rational> rates_;
};

/// "(0, 1/2, 2, 5/2, 1/2)"
inline std::string format_rates(const RateVector& rv) {
  std::string out = "(";
  for (int i = 0; i < rv.size(); ++i) {
    if (i > 0) out += ", ";
    out += rv[i].str();
  }
  out += ')';
  return out;
}

/// A processing order of the users: order()[k] is the user handled k-th.
class LinearOrdering {
 public:
  static LinearOrdering identity(int n) {
    std::vector<int> order(static_cast<std::size_t>(n));
    std::iota(order.begin(), order.end(), 0);
    return LinearOrdering(std::move(order));
  }

  /// Validates that order is a permutation of 0..n-1.
  static LinearOrdering of(std::vector<int> order) {
    const int n = static_cast<int>(order.size());
    if (n < 2 || n > 64) throw std::invalid_argument("LinearOrdering: need 2 <= n <= 64");
    std::uint64_t seen = 0;
    for (int u : order) {
      if (u < 0 || u >= n || ((seen >> u) & 1u)) {
        throw std::invalid_argument("LinearOrdering: not a permutation of 0.." + std::to_string(n - 1));
      }
      seen |= std::uint64_t{1} << u;
    }
    return LinearOrdering(std::move(order));
  }

  [[nodiscard]] int size() const { return static_cast<int>(order_.size()); }
  [[nodiscard]] int at(int k) const { return order_.at(static_cast<std::size_t>(k)); }
  [[nodiscard]] const std::vector<int>& order() const { return order_; }

  friend bool operator==(const LinearOrdering&, const LinearOrdering&) = default;

 private:
  explicit LinearOrdering(std::vector<int> order) : order_(std::move(order)) {}
  std::vector<int> order_;
};

}  // namespace omni
