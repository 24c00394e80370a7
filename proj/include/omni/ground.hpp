#pragma once

#include <bit>
#include <cstdint>
#include <initializer_list>
#include <stdexcept>
#include <string>
#include <vector>

namespace omni {

/// A set of user indices packed into one 64-bit mask (bit i = user i).
class Subset {
 public:
  constexpr Subset() = default;
  constexpr explicit Subset(std::uint64_t mask) : mask_(mask) {}

  /// Build from 0-based indices: Subset::of({0, 2, 3}).
  static Subset of(std::initializer_list<int> indices) {
    Subset s;
    for (int i : indices) {
      if (i < 0 || i > 63) throw std::out_of_range("Subset: index " + std::to_string(i));
      s = s.with(i);
    }
    return s;
  }

  [[nodiscard]] constexpr std::uint64_t mask() const { return mask_; }
  [[nodiscard]] constexpr bool empty() const { return mask_ == 0; }
  [[nodiscard]] constexpr int count() const { return std::popcount(mask_); }
  [[nodiscard]] constexpr bool contains(int i) const { return (mask_ >> i) & 1u; }
  [[nodiscard]] constexpr bool subset_of(Subset o) const { return (mask_ & ~o.mask_) == 0; }
  [[nodiscard]] constexpr bool intersects(Subset o) const { return (mask_ & o.mask_) != 0; }

  [[nodiscard]] constexpr Subset with(int i) const { return Subset(mask_ | (std::uint64_t{1} << i)); }
  [[nodiscard]] constexpr Subset without(int i) const { return Subset(mask_ & ~(std::uint64_t{1} << i)); }

  /// Index of the smallest member; subset must be nonempty.
  [[nodiscard]] constexpr int lowest() const { return std::countr_zero(mask_); }

  [[nodiscard]] std::vector<int> members() const {
    std::vector<int> out;
    out.reserve(static_cast<std::size_t>(count()));
    for (std::uint64_t m = mask_; m != 0; m &= m - 1) out.push_back(std::countr_zero(m));
    return out;
  }

  friend constexpr Subset operator|(Subset a, Subset b) { return Subset(a.mask_ | b.mask_); }
  friend constexpr Subset operator&(Subset a, Subset b) { return Subset(a.mask_ & b.mask_); }
  friend constexpr Subset operator-(Subset a, Subset b) { return Subset(a.mask_ & ~b.mask_); }
  Subset& operator|=(Subset o) {
    mask_ |= o.mask_;
    return *this;
  }

  friend constexpr bool operator==(Subset, Subset) = default;
  friend constexpr auto operator<=>(Subset a, Subset b) { return a.mask_ <=> b.mask_; }

 private:
  std::uint64_t mask_ = 0;
};

/// The universe of user indices 0..n-1 with optional display labels.
/// Users are shown 1-based when no labels are given.
class GroundSet {
 public:
  explicit GroundSet(int n, std::vector<std::string> labels = {}) : n_(n), labels_(std::move(labels)) {
    if (n < 2 || n > 64) throw std::invalid_argument("GroundSet: need 2 <= n <= 64, got " + std::to_string(n));
    if (!labels_.empty() && static_cast<int>(labels_.size()) != n) {
      throw std::invalid_argument("GroundSet: label count does not match n");
    }
  }

  [[nodiscard]] int size() const { return n_; }

  [[nodiscard]] Subset full() const {
    return Subset(n_ == 64 ? ~std::uint64_t{0} : (std::uint64_t{1} << n_) - 1);
  }

  [[nodiscard]] Subset singleton(int i) const {
    check_index(i);
    return Subset{}.with(i);
  }

  [[nodiscard]] Subset complement(Subset x) const { return full() - x; }

  [[nodiscard]] bool contains(Subset x) const { return x.subset_of(full()); }

  [[nodiscard]] std::string label(int i) const {
    check_index(i);
    return labels_.empty() ? std::to_string(i + 1) : labels_[static_cast<std::size_t>(i)];
  }

  friend bool operator==(const GroundSet& a, const GroundSet& b) { return a.n_ == b.n_; }

 private:
  void check_index(int i) const {
    if (i < 0 || i >= n_) throw std::out_of_range("GroundSet: user index " + std::to_string(i));
  }

  int n_;
  std::vector<std::string> labels_;
};

/// "{1,3,4}" with 1-based members, "{}" when empty.
std::string format_subset(Subset x);

}  // namespace omni
