#pragma once

#include <filesystem>
#include <memory>
#include <string>
#include <variant>

#include "omni/oracle.hpp"

namespace omni {

using Instance = std::variant<PacketInstance, EntropyTable>;

/// Parses the JSON instance text:
///   {"type":"packets", "users":[["a","c","e","f"], ...]}
///   {"type":"table", "n":N, "values":[["mask","p/q"], ...]}
/// Masks are user-index bitmasks (bit i-1 = user i), given as an unsigned
/// integer or its decimal string; rationals as "p/q" or "k". Table values
/// must cover every subset exactly once. Throws std::invalid_argument with
/// positional context on malformed input; table axioms are checked unless
/// validate_table is false.
Instance parse_instance(const std::string& text, bool validate_table = true);

/// Reads and parses a file; errors mention the path.
Instance load_instance(const std::filesystem::path& path, bool validate_table = true);

/// Canonical JSON with a trailing newline; parse(serialize(x)) == x.
std::string serialize_instance(const Instance& instance);

std::unique_ptr<EntropyOracle> make_oracle(const Instance& instance);

const GroundSet& instance_ground(const Instance& instance);

}  // namespace omni
