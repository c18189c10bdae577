#pragma once

#include <cstdint>
#include <string>

#include "edgechain/types.hpp"

namespace edgechain {

struct ScenarioDefaults {
  int max_virtual_links = 100;

  friend bool operator==(const ScenarioDefaults&, const ScenarioDefaults&) = default;
};

/// Parsed and validated scenario file: the substrate, the requested chains,
/// the user distribution and scenario-wide knobs.
struct ScenarioConfig {
  std::vector<Mecsp> mecsps;
  std::vector<MeHost> hosts;
  std::vector<HostLink> host_links;
  std::vector<SvcChain> chains;
  UserDistribution user_distribution;
  Weights weights;
  ScenarioDefaults defaults;
  std::int64_t seed = 0;  // reserved; the pipeline is deterministic

  friend bool operator==(const ScenarioConfig&, const ScenarioConfig&) = default;
};

/// Parses a scenario from JSON text, applies defaults and validates.
/// Throws Error(Errc::Parse) with line information on malformed input and
/// id/reference/value errors on semantic problems.
ScenarioConfig parse_scenario(const std::string& text);

ScenarioConfig load_scenario(const std::string& path);

/// Semantic validation: unique ids, resolvable references, value ranges,
/// share bounds. Exact duplicate host links collapse to one; conflicting
/// duplicates are rejected.
void validate_scenario(ScenarioConfig& config);

std::string scenario_to_json(const ScenarioConfig& config);

}  // namespace edgechain
