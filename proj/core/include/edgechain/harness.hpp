#pragma once

#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "edgechain/consensus.hpp"
#include "edgechain/oracle.hpp"
#include "edgechain/scenario.hpp"

namespace edgechain {

struct RoundSummary {
  std::string chain_id;
  ConsensusOutcome outcome;
};

struct SimulationReport {
  std::vector<PlacementDecision> decisions;  // processing order
  std::vector<RoundSummary> rounds;
  std::map<std::string, int> apps_per_mecsp;
  std::map<std::string, int> apps_per_host;
  double total_cost = 0.0;
  std::string ledger_digest;
  std::vector<Block> ledger;
  WorldState final_state;  // replayed from the ledger
};

/// Full pipeline on one scenario: scenario entities onto the ledger, chains
/// in decreasing-demand order through consensus rounds (validator_count
/// honest validators), committed decisions posted, final state replayed
/// back from the ledger.
SimulationReport run_simulation(const ScenarioConfig& config,
                                int validator_count = 5);

/// One swept parameter. `param` addresses a scenario value
/// ("mecsp.<id>.gamma|delta|kappa|sigma" or "share.<id>"); `coupled`
/// optionally ties a second share to the swept one
/// ("share.<id>=1-share.<id2>").
struct SweepSpec {
  std::string param;
  double from = 0.0;
  double to = 0.0;
  double step = 0.0;
  std::string coupled;
};

struct SweepPoint {
  double value = 0.0;
  std::vector<PlacementDecision> decisions;
  std::map<std::string, int> apps_per_mecsp;
  std::map<std::string, int> apps_per_host;
  double total_cost = 0.0;
  bool all_placed = true;
  // chain id -> realized latency, in scenario chain order; nullopt when the
  // chain was not placed at this point.
  std::vector<std::pair<std::string, std::optional<double>>> chain_latency;
};

/// Evaluates each sweep point on a fresh world (points are independent
/// scenario evaluations, not an evolving system). Every reported placement
/// is re-validated before emission.
std::vector<SweepPoint> run_sweep(const ScenarioConfig& config,
                                  const SweepSpec& spec);

std::string sweep_csv(const ScenarioConfig& config,
                      const std::vector<SweepPoint>& points);

struct CompareRow {
  std::string chain_id;
  std::optional<double> heuristic_cost;  // nullopt: heuristic infeasible
  std::optional<double> oracle_cost;     // nullopt: no feasible assignment
  std::optional<double> ratio;           // heuristic / oracle when both exist
  bool assignments_match = false;
  bool agree_infeasible = false;
  std::uint64_t evaluated = 0;
  std::uint64_t feasible_count = 0;
};

/// Heuristic versus exhaustive optimum, chain by chain in processing
/// order. The oracle solves each chain on the world the heuristic saw, and
/// the world then evolves by the heuristic's decision, so link prices
/// interact across chains exactly as they do in a simulation run.
std::vector<CompareRow> run_compare(const ScenarioConfig& config,
                                    std::uint64_t limit = 10'000'000);

/// Applies a sweep-style parameter path to a copy of the config.
ScenarioConfig apply_param(ScenarioConfig config, const std::string& param,
                           double value);

// Deterministic renderings; the CLI writes these bytes verbatim.
std::string render_report(const SimulationReport& report);
std::string decisions_csv(const SimulationReport& report);
std::string compare_table(const std::vector<CompareRow>& rows);

}  // namespace edgechain
