#pragma once

#include <optional>

#include "edgechain/types.hpp"
#include "edgechain/world.hpp"

namespace edgechain {

/// Cost of one chain placement split into its two summations, plus the
/// realized end-to-end latency. total is host_cost + link_cost by
/// construction.
struct CostBreakdown {
  double host_cost = 0.0;
  double link_cost = 0.0;
  double total = 0.0;
  double latency_ms = 0.0;

  friend bool operator==(const CostBreakdown&, const CostBreakdown&) = default;
};

/// Bandwidth pricing for a provider pair: the symmetric mean of the two
/// per-provider values, which reduces to the provider's own values on the
/// diagonal.
struct PairPricing {
  double kappa = 0.0;
  double sigma = 0.0;

  friend bool operator==(const PairPricing&, const PairPricing&) = default;
};

/// gamma + (1 - P) * delta: what one resource unit on this provider costs
/// per user once the premium for foreign users is factored in. Missing
/// share means no users of this provider (P = 0).
double effective_unit_price(const Mecsp& mecsp, const UserDistribution& dist);

/// Cost of hosting one app on one host for the whole user population:
///   n_s * (w_cpu*C_v + w_mem*M_v) * [gamma + (1 - P) * delta].
double host_app_cost(const MeApp& app, const MeHost& host,
                     const WorldState& state, const UserDistribution& dist);

PairPricing pair_pricing(const Mecsp& a, const Mecsp& b);

/// Link unit price in [0, 1]:
///   (applink_count / max_virtual_links) * (used_bandwidth / capacity).
/// When `prospective` is given, its virtual link and bandwidth are counted
/// as if already routed over this link, so the price reflects the state the
/// candidate decision would create.
double link_unit_price(const HostLink& link, const WorldState& state,
                       const std::optional<AppLink>& prospective = std::nullopt);

/// Traffic cost of one AppLink between hosts h_i and h_j. Zero when
/// co-located. F is the user fraction belonging to the endpoint owners
/// (counted once when both hosts share an owner), clamped to [0, 1]:
///   n_s * zeta * [F * kappa + (1 - F) * (kappa + sigma)].
/// The AppLink is included in zeta exactly once: as-is when the state
/// already routes it between these hosts, prospectively otherwise.
/// Throws NoRoute when distinct hosts have no connecting HostLink.
double link_cost(const AppLink& app_link, const MeHost& host_i,
                 const MeHost& host_j, const WorldState& state,
                 const UserDistribution& dist);

/// Sum of HostLink latencies over the chain's materialized hops;
/// co-located pairs contribute zero. Throws Unplaced/NoRoute.
double chain_latency(const SvcChain& chain, const Placement& placement,
                     const WorldState& state);

/// Evaluates the full objective for a candidate placement of one chain.
/// Pre: every chain app appears in `placement` and the state reflects it.
CostBreakdown chain_cost(const SvcChain& chain, const Placement& placement,
                         const WorldState& state, const UserDistribution& dist);

}  // namespace edgechain
