#include "omni/oracle.hpp"

#include <algorithm>
#include <bit>

#include "omni/errors.hpp"
#include "omni/partition.hpp"

namespace omni {

PacketInstance::PacketInstance(GroundSet ground, std::vector<std::vector<std::string>> holdings)
    : ground_(std::move(ground)), holdings_(std::move(holdings)) {
  if (static_cast<int>(holdings_.size()) != ground_.size()) {
    throw std::invalid_argument("PacketInstance: holdings must list one packet set per user");
  }
}

std::vector<std::string> PacketInstance::universe() const {
  std::vector<std::string> ids;
  for (const auto& user : holdings_) ids.insert(ids.end(), user.begin(), user.end());
  std::sort(ids.begin(), ids.end());
  ids.erase(std::unique(ids.begin(), ids.end()), ids.end());
  return ids;
}

std::string PolymatroidViolation::describe() const {
  switch (axiom) {
    case PolymatroidAxiom::normalized:
      return "H({}) != 0";
    case PolymatroidAxiom::monotone:
      return "monotonicity fails: H(" + format_subset(x) + ") > H(" + format_subset(y) + ")";
    case PolymatroidAxiom::submodular:
      return "submodularity fails at X=" + format_subset(x) + ", Y=" + format_subset(y);
  }
  return "?";
}

std::optional<PolymatroidViolation> find_polymatroid_violation(const GroundSet& ground,
                                                               const std::vector<Rational>& values) {
  const int n = ground.size();
  if (n > EntropyTable::kMaxUsers) throw CapExceeded("entropy table: ground set too large to validate");
  const std::uint64_t size = std::uint64_t{1} << n;
  if (values.size() != size) {
    throw std::invalid_argument("entropy table: need exactly 2^n values");
  }

  if (!values[0].is_zero()) {
    return PolymatroidViolation{PolymatroidAxiom::normalized, Subset{}, Subset{}};
  }

  for (std::uint64_t m = 0; m < size; ++m) {
    for (int i = 0; i < n; ++i) {
      if ((m >> i) & 1u) continue;
      const std::uint64_t mi = m | (std::uint64_t{1} << i);
      if (values[m] > values[mi]) {
        return PolymatroidViolation{PolymatroidAxiom::monotone, Subset(m), Subset(mi)};
      }
    }
  }

  // Local exchange form: H(X+i) + H(X+j) >= H(X+i+j) + H(X) for i != j
  // outside X, which is equivalent to full submodularity.
  for (std::uint64_t m = 0; m < size; ++m) {
    for (int i = 0; i < n; ++i) {
      if ((m >> i) & 1u) continue;
      const std::uint64_t mi = m | (std::uint64_t{1} << i);
      for (int j = i + 1; j < n; ++j) {
        if ((m >> j) & 1u) continue;
        const std::uint64_t mj = m | (std::uint64_t{1} << j);
        if (values[mi] + values[mj] < values[mi | mj] + values[m]) {
          return PolymatroidViolation{PolymatroidAxiom::submodular, Subset(mi), Subset(mj)};
        }
      }
    }
  }
  return std::nullopt;
}

std::optional<PolymatroidViolation> find_polymatroid_violation(const EntropyTable& table) {
  return find_polymatroid_violation(table.ground(), table.values());
}

EntropyTable::EntropyTable(GroundSet ground, std::vector<Rational> values, bool validated)
    : ground_(std::move(ground)), values_(std::move(values)), validated_(validated) {
  if (ground_.size() > kMaxUsers) throw CapExceeded("entropy table: ground set too large");
  if (values_.size() != (std::uint64_t{1} << ground_.size())) {
    throw std::invalid_argument("entropy table: need exactly 2^n values");
  }
  integral_ = std::all_of(values_.begin(), values_.end(),
                          [](const Rational& r) { return r.is_integer(); });
}

EntropyTable EntropyTable::validated(GroundSet ground, std::vector<Rational> values) {
  if (auto violation = find_polymatroid_violation(ground, values)) {
    throw PolymatroidError(*violation);
  }
  return EntropyTable(std::move(ground), std::move(values), true);
}

EntropyTable EntropyTable::unchecked(GroundSet ground, std::vector<Rational> values) {
  return EntropyTable(std::move(ground), std::move(values), false);
}

const Rational& EntropyTable::value(Subset x) const {
  if (!ground_.contains(x)) throw std::invalid_argument("EntropyTable: subset outside ground set");
  return values_[x.mask()];
}

PacketOracle::PacketOracle(const PacketInstance& instance)
    : EntropyOracle(instance.ground()) {
  const std::vector<std::string> ids = instance.universe();
  packet_count_ = static_cast<int>(ids.size());
  const std::size_t chunks = (ids.size() + 63) / 64;
  holding_bits_.assign(instance.holdings().size(), std::vector<std::uint64_t>(chunks, 0));
  for (std::size_t user = 0; user < instance.holdings().size(); ++user) {
    for (const std::string& id : instance.holdings()[user]) {
      const auto it = std::lower_bound(ids.begin(), ids.end(), id);
      const auto index = static_cast<std::size_t>(it - ids.begin());
      holding_bits_[user][index / 64] |= std::uint64_t{1} << (index % 64);
    }
  }
}

Rational PacketOracle::entropy(Subset x) const {
  check_subset(x);
  if (x.empty()) return 0;
  {
    std::lock_guard lock(memo_mutex_);
    if (const auto it = memo_.find(x.mask()); it != memo_.end()) return it->second;
  }
  std::vector<std::uint64_t> acc(holding_bits_.empty() ? 0 : holding_bits_[0].size(), 0);
  for (std::uint64_t m = x.mask(); m != 0; m &= m - 1) {
    const auto user = static_cast<std::size_t>(std::countr_zero(m));
    for (std::size_t c = 0; c < acc.size(); ++c) acc[c] |= holding_bits_[user][c];
  }
  long long count = 0;
  for (std::uint64_t chunk : acc) count += std::popcount(chunk);
  {
    std::lock_guard lock(memo_mutex_);
    memo_.emplace(x.mask(), count);
  }
  return count;
}

EntropyTable table_from_oracle(const EntropyOracle& oracle, bool validate) {
  const int n = oracle.ground().size();
  if (n > EntropyTable::kMaxUsers) throw CapExceeded("table_from_oracle: ground set too large");
  std::vector<Rational> values;
  values.reserve(std::size_t{1} << n);
  for (std::uint64_t m = 0; m < (std::uint64_t{1} << n); ++m) {
    values.push_back(oracle.entropy(Subset(m)));
  }
  return validate ? EntropyTable::validated(oracle.ground(), std::move(values))
                  : EntropyTable::unchecked(oracle.ground(), std::move(values));
}

}  // namespace omni
