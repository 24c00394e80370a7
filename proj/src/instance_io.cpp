#include "omni/instance_io.hpp"

#include <charconv>
#include <fstream>
#include <sstream>

#include <json.hpp>

namespace omni {

namespace {

using nlohmann::json;

[[noreturn]] void fail(const std::string& what) {
  throw std::invalid_argument("instance: " + what);
}

std::uint64_t parse_mask(const json& j) {
  if (j.is_number_unsigned()) return j.get<std::uint64_t>();
  if (j.is_string()) {
    const auto s = j.get<std::string>();
    std::uint64_t mask = 0;
    const auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), mask);
    if (ec != std::errc{} || ptr != s.data() + s.size()) fail("bad subset bitmask '" + s + "'");
    return mask;
  }
  fail("subset bitmask must be an unsigned integer or a decimal string");
}

Rational parse_rational(const json& j) {
  if (j.is_number_integer()) return Rational(j.get<long long>());
  if (j.is_string()) return Rational::parse(j.get<std::string>());
  fail("entropy value must be an integer or a \"p/q\" string");
}

PacketInstance parse_packets(const json& root) {
  const auto it = root.find("users");
  if (it == root.end() || !it->is_array()) fail("packets instance needs a \"users\" array");
  const int n = static_cast<int>(it->size());
  if (n < 2 || n > 64) fail("need between 2 and 64 users, got " + std::to_string(n));
  std::vector<std::vector<std::string>> holdings;
  holdings.reserve(static_cast<std::size_t>(n));
  int index = 0;
  for (const json& user : *it) {
    if (!user.is_array()) fail("users[" + std::to_string(index) + "] must be an array of packet ids");
    std::vector<std::string> ids;
    ids.reserve(user.size());
    for (const json& id : user) {
      if (!id.is_string()) fail("users[" + std::to_string(index) + "] holds a non-string packet id");
      ids.push_back(id.get<std::string>());
    }
    holdings.push_back(std::move(ids));
    ++index;
  }
  return {GroundSet(n), std::move(holdings)};
}

EntropyTable parse_table(const json& root, bool validate) {
  const auto nit = root.find("n");
  if (nit == root.end() || !nit->is_number_integer()) fail("table instance needs an integer \"n\"");
  const int n = nit->get<int>();
  if (n < 2 || n > EntropyTable::kMaxUsers) {
    fail("table supports 2 <= n <= " + std::to_string(EntropyTable::kMaxUsers));
  }
  const auto vit = root.find("values");
  if (vit == root.end() || !vit->is_array()) fail("table instance needs a \"values\" array");

  const std::uint64_t size = std::uint64_t{1} << n;
  std::vector<Rational> values(size);
  std::vector<bool> seen(size, false);
  for (const json& pair : *vit) {
    if (!pair.is_array() || pair.size() != 2) fail("each table entry must be a [mask, value] pair");
    const std::uint64_t mask = parse_mask(pair[0]);
    if (mask >= size) fail("mask " + std::to_string(mask) + " outside 2^" + std::to_string(n) + " subsets");
    if (seen[mask]) fail("duplicate mask " + std::to_string(mask));
    seen[mask] = true;
    values[mask] = parse_rational(pair[1]);
  }
  for (std::uint64_t m = 0; m < size; ++m) {
    if (!seen[m]) fail("missing value for mask " + std::to_string(m));
  }
  GroundSet ground(n);
  return validate ? EntropyTable::validated(std::move(ground), std::move(values))
                  : EntropyTable::unchecked(std::move(ground), std::move(values));
}

}  // namespace

Instance parse_instance(const std::string& text, bool validate_table) {
  json root;
  try {
    root = json::parse(text);
  } catch (const json::parse_error& e) {
    fail(e.what());  // nlohmann reports byte position and context
  }
  if (!root.is_object()) fail("top level must be a JSON object");
  const auto type = root.find("type");
  if (type == root.end() || !type->is_string()) fail("missing \"type\" (\"packets\" or \"table\")");
  const auto kind = type->get<std::string>();
  if (kind == "packets") return parse_packets(root);
  if (kind == "table") return parse_table(root, validate_table);
  fail("unknown type '" + kind + "' (expected \"packets\" or \"table\")");
}

Instance load_instance(const std::filesystem::path& path, bool validate_table) {
  std::ifstream in(path);
  if (!in) throw std::invalid_argument("cannot open '" + path.string() + "'");
  std::ostringstream buffer;
  buffer << in.rdbuf();
  try {
    return parse_instance(buffer.str(), validate_table);
  } catch (const std::invalid_argument& e) {
    throw std::invalid_argument(path.string() + ": " + e.what());
  }
}

std::string serialize_instance(const Instance& instance) {
  json root;
  if (const auto* packets = std::get_if<PacketInstance>(&instance)) {
    root["type"] = "packets";
    root["users"] = packets->holdings();
  } else {
    const auto& table = std::get<EntropyTable>(instance);
    root["type"] = "table";
    root["n"] = table.ground().size();
    json values = json::array();
    for (std::uint64_t m = 0; m < table.values().size(); ++m) {
      values.push_back(json::array({std::to_string(m), table.values()[m].str()}));
    }
    root["values"] = std::move(values);
  }
  return root.dump(2) + "\n";
}

std::unique_ptr<EntropyOracle> make_oracle(const Instance& instance) {
  if (const auto* packets = std::get_if<PacketInstance>(&instance)) {
    return std::make_unique<PacketOracle>(*packets);
  }
  return std::make_unique<TableOracle>(std::get<EntropyTable>(instance));
}

const GroundSet& instance_ground(const Instance& instance) {
  if (const auto* packets = std::get_if<PacketInstance>(&instance)) return packets->ground();
  return std::get<EntropyTable>(instance).ground();
}

}  // namespace omni
