#pragma once

#include <cstdint>
#include <optional>

#include "edgechain/cost.hpp"
#include "edgechain/types.hpp"
#include "edgechain/world.hpp"

namespace edgechain {

struct OracleResult {
  std::optional<Placement> best;  // nullopt iff feasible_count == 0
  CostBreakdown best_cost;
  std::uint64_t evaluated = 0;
  std::uint64_t feasible_count = 0;
};

/// Exhaustive ground truth: enumerates every mapping of the chain's apps to
/// hosts, evaluates each candidate on a scratch copy of the state (clone,
/// apply, check, discard — deliberately not reusing the incremental
/// bookkeeping it is meant to audit), and returns the cheapest feasible
/// placement. Ties break toward the lexicographically smallest assignment
/// vector over (app order, host id).
///
/// Pre: the chain is registered in `state` and unplaced; other chains may
/// already be placed and constrain this one. Throws TooLarge when
/// |hosts|^|apps| exceeds `limit`.
OracleResult solve_exact(const SvcChain& chain, const WorldState& state,
                         const UserDistribution& dist,
                         std::uint64_t limit = 10'000'000);

}  // namespace edgechain
