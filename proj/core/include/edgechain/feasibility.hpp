#pragma once

#include <string>
#include <vector>

#include "edgechain/types.hpp"
#include "edgechain/world.hpp"

namespace edgechain {

enum class ViolationKind {
  Bandwidth,
  Cpu,
  Memory,
  Latency,
  NoRoute,
  VirtualLinks,
};

std::string to_string(ViolationKind kind);

/// One constraint breach. margin is the exact amount by which the bound is
/// exceeded (resource units or milliseconds); re-adding it to the bound
/// makes the check pass. NoRoute carries margin 1: there is no numeric
/// excess when the substrate simply lacks a link.
struct Violation {
  ViolationKind kind;
  std::string subject;  // host / link / chain / app id
  double margin = 0.0;

  friend bool operator==(const Violation&, const Violation&) = default;
};

/// Full audit of committed placements. Host and link loads are recomputed
/// from scratch out of (chains, placement) rather than read from the
/// incrementally maintained usage, so this check is an independent route to
/// the same sums. Latency is checked per chain in `chains`.
/// Throws Unplaced if a chain in `chains` has an unassigned app.
std::vector<Violation> check_placement(const WorldState& state,
                                       const std::vector<SvcChain>& chains,
                                       const UserDistribution& dist);

/// Headroom check for placing `app_id` on `host_id` while the chain prefix
/// in `placed_prefix` is already assigned (and applied to the state):
/// cpu/mem on the candidate host, bandwidth and virtual-link slots on every
/// affected HostLink, and the cumulative latency of the placed hops plus
/// the candidate's hops against the chain budget. Violations are returned,
/// never thrown.
std::vector<Violation> check_partial(const WorldState& state,
                                     const SvcChain& chain,
                                     const Placement& placed_prefix,
                                     const std::string& app_id,
                                     const std::string& host_id,
                                     const UserDistribution& dist);

}  // namespace edgechain
