#pragma once

#include <optional>
#include <string>
#include <vector>

#include "edgechain/cost.hpp"
#include "edgechain/feasibility.hpp"
#include "edgechain/types.hpp"
#include "edgechain/world.hpp"

namespace edgechain {

struct PlacementRequest {
  SvcChain chain;
  UserDistribution dist;
};

enum class Outcome { Placed, Infeasible };

struct PlacementDecision {
  std::string chain_id;
  Placement assignments;
  CostBreakdown cost;
  Outcome outcome = Outcome::Infeasible;
  std::string reason;  // set for Infeasible

  friend bool operator==(const PlacementDecision&, const PlacementDecision&) = default;
};

/// Digest identifying this placement algorithm build. Recorded in every
/// placement transaction and in validator votes so replicas can prove they
/// ran the same logic.
const std::string& algorithm_digest();

/// Orders every host (a permutation, nothing dropped) by:
///   1. effective unit price of the owner, gamma + (1 - P) * delta,
///      ascending — providers serving more of the chain's users and asking
///      lower prices come first;
///   2. hosts already running one of the app's placed predecessor apps
///      first;
///   3. total HostLink latency from the host to the placed predecessors'
///      hosts ascending (co-location counts as zero, missing links as
///      infinite);
///   4. host id ascending, to make full ties reproducible.
std::vector<std::string> rank_hosts(const MeApp& app, const SvcChain& chain,
                                    const Placement& placed_prefix,
                                    const WorldState& state,
                                    const UserDistribution& dist);

/// First-fit scan over rank_hosts: returns the first host whose partial
/// check is clean, with the assignment applied to the state; nullopt (and
/// an untouched state) when no host qualifies.
std::optional<std::string> place_app(const MeApp& app, const SvcChain& chain,
                                     const Placement& placed_prefix,
                                     WorldState& state,
                                     const UserDistribution& dist);

/// Places a whole chain app by app in forwarding order. All-or-nothing: if
/// any app finds no host, every assignment of this chain is rolled back and
/// the outcome is Infeasible with the state bit-identical to the input.
/// The chain must already be registered in the state.
PlacementDecision place_chain(const PlacementRequest& request, WorldState& state);

/// Processes requests in decreasing order of total weighted resource
/// demand (ties by chain id ascending), each via place_chain on the
/// evolving state. Decisions are returned in processing order.
std::vector<PlacementDecision> place_all(const std::vector<PlacementRequest>& requests,
                                         WorldState& state);

}  // namespace edgechain
