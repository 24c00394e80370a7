#pragma once

#include <cstdint>
#include <memory>
#include <mutex>
#include <optional>
#include <stdexcept>
#include <string>
#include <unordered_map>
#include <vector>

#include "omni/ground.hpp"
#include "omni/rational.hpp"

namespace omni {

/// A data-exchange instance where each user holds a set of packets,
/// identified by opaque strings. Entropy is packet counting, so every
/// value is a nonnegative integer and H(V) equals the universe size.
class PacketInstance {
 public:
  PacketInstance(GroundSet ground, std::vector<std::vector<std::string>> holdings);

  [[nodiscard]] const GroundSet& ground() const { return ground_; }
  [[nodiscard]] const std::vector<std::vector<std::string>>& holdings() const { return holdings_; }

  /// Sorted distinct packet identifiers across all users.
  [[nodiscard]] std::vector<std::string> universe() const;

 private:
  GroundSet ground_;
  std::vector<std::vector<std::string>> holdings_;
};

enum class PolymatroidAxiom { normalized, monotone, submodular };

struct PolymatroidViolation {
  PolymatroidAxiom axiom;
  Subset x;
  Subset y;
  [[nodiscard]] std::string describe() const;
};

class PolymatroidError : public std::invalid_argument {
 public:
  explicit PolymatroidError(const PolymatroidViolation& v)
      : std::invalid_argument("entropy table is not a polymatroid rank function: " + v.describe()),
        violation(v) {}
  PolymatroidViolation violation;
};

/// Explicit entropy values for every subset, indexed by mask.
/// Values may be rational; construction checks the polymatroid axioms
/// (normalized, monotone, submodular) unless explicitly skipped, in which
/// case the table is marked unvalidated and solvers report that downstream
/// guarantees are conditional.
class EntropyTable {
 public:
  static constexpr int kMaxUsers = 20;

  /// Throws PolymatroidError on the first violated axiom.
  static EntropyTable validated(GroundSet ground, std::vector<Rational> values);
  static EntropyTable unchecked(GroundSet ground, std::vector<Rational> values);

  [[nodiscard]] const GroundSet& ground() const { return ground_; }
  [[nodiscard]] const Rational& value(Subset x) const;
  [[nodiscard]] const std::vector<Rational>& values() const { return values_; }
  [[nodiscard]] bool is_validated() const { return validated_; }
  [[nodiscard]] bool integral() const { return integral_; }

 private:
  EntropyTable(GroundSet ground, std::vector<Rational> values, bool validated);

  GroundSet ground_;
  std::vector<Rational> values_;
  bool validated_;
  bool integral_;
};

/// Scans in axiom order (normalized, then monotone, then submodular) and
/// returns the first violation with witness subsets, or nullopt when the
/// table is a valid polymatroid rank function.
std::optional<PolymatroidViolation> find_polymatroid_violation(const GroundSet& ground,
                                                               const std::vector<Rational>& values);
std::optional<PolymatroidViolation> find_polymatroid_violation(const EntropyTable& table);

/// Pure entropy evaluation over subsets of a fixed ground set.
class EntropyOracle {
 public:
  virtual ~EntropyOracle() = default;

  [[nodiscard]] const GroundSet& ground() const { return ground_; }

  /// H(X); exact, with H({}) = 0. X must lie within the ground set.
  [[nodiscard]] virtual Rational entropy(Subset x) const = 0;

  /// True when every entropy value is an integer.
  [[nodiscard]] virtual bool integral() const = 0;

  /// False only for tables constructed with validation skipped.
  [[nodiscard]] virtual bool validated() const { return true; }

  /// H(X|Y) = H(X u Y) - H(Y); never negative for a valid oracle.
  [[nodiscard]] Rational conditional_entropy(Subset x, Subset y) const {
    return entropy(x | y) - entropy(y);
  }

 protected:
  explicit EntropyOracle(GroundSet ground) : ground_(std::move(ground)) {}
  void check_subset(Subset x) const {
    if (!ground_.contains(x)) throw std::invalid_argument("EntropyOracle: subset outside ground set");
  }

 private:
  GroundSet ground_;
};

/// Packet-counting entropy: H(X) is the number of distinct packets held by
/// the users in X. Evaluations are memoized per subset; the cache is owned
/// by the oracle and internally synchronized, so concurrent solves on a
/// shared oracle are safe.
class PacketOracle final : public EntropyOracle {
 public:
  explicit PacketOracle(const PacketInstance& instance);

  [[nodiscard]] Rational entropy(Subset x) const override;
  [[nodiscard]] bool integral() const override { return true; }
  [[nodiscard]] int packet_count() const { return packet_count_; }

 private:
  std::vector<std::vector<std::uint64_t>> holding_bits_;  // per user, chunked over packets
  int packet_count_;
  mutable std::mutex memo_mutex_;
  mutable std::unordered_map<std::uint64_t, long long> memo_;
};

/// Table lookup oracle.
class TableOracle final : public EntropyOracle {
 public:
  explicit TableOracle(EntropyTable table) : EntropyOracle(table.ground()), table_(std::move(table)) {}

  [[nodiscard]] Rational entropy(Subset x) const override {
    check_subset(x);
    return table_.value(x);
  }
  [[nodiscard]] bool integral() const override { return table_.integral(); }
  [[nodiscard]] bool validated() const override { return table_.is_validated(); }
  [[nodiscard]] const EntropyTable& table() const { return table_; }

 private:
  EntropyTable table_;
};

/// Materializes any oracle into a full table (2^n queries, n <= 20).
EntropyTable table_from_oracle(const EntropyOracle& oracle, bool validate = true);

}  // namespace omni
