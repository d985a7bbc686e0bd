#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "knot/cohom.hpp"
#include "knot/knot.hpp"
#include "knot/permgroup.hpp"

namespace knot {

/// A group specified either literally or as a named construction.
struct GroupSpec {
  PermGroup group;
  std::string source;  // canonical echo of the parsed spec
};

/// Parsed input document for sha / h1pic / adequacy runs.
struct InputDoc {
  GroupSpec group;
  int stabilizer_point = 0;
  std::vector<std::vector<Perm>> decomposition_generators;
  std::vector<Method> methods;  // defaults to {Classifier}
  std::string canonical;        // canonical serialization for hashing
};

/// Parse { "degree": d, "generators": [[...], ...] } or a named
/// construction { "construction": name, "p": .., "n": .., "mats": [...] }.
GroupSpec parse_group_spec(const std::string& json_text,
                           std::uint64_t cap = kDefaultOrderCap);

InputDoc parse_input_doc(const std::string& json_text,
                         std::uint64_t cap = kDefaultOrderCap);

std::string group_literal_json(const PermGroup& g);

/// Report serialization: stable key order, integers only, invariant lists
/// sorted by divisibility, input hash echoed.
std::string report_json(const KnotReport& rep, const std::string& input_echo);

/// Construction summary printed by the zoo command.
std::string zoo_json(const std::string& name, const PermGroup& g);

/// FNV-1a over the canonical input text; stable across runs and platforms.
std::uint64_t stable_hash(const std::string& text);

std::vector<std::array<long long, 4>> parse_mats_arg(const std::string& text);

}  // namespace knot
