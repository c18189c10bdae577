#pragma once

#include <map>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "edgechain/ledger.hpp"
#include "edgechain/placement.hpp"

namespace edgechain {

/// A Byzantine validator's fixed output: a decision-shaped forgery returned
/// regardless of input. An empty algorithm_digest mimics the honest
/// algorithm's digest.
struct Forgery {
  PlacementDecision decision;
  std::string algorithm_digest;
};

/// Honest validators replay the ledger and run the real placement
/// algorithm; a validator with a forgery set returns the forgery.
struct Validator {
  std::string id;
  std::optional<Forgery> forgery;

  bool honest() const { return !forgery.has_value(); }
};

struct Vote {
  std::string decision_digest;
  std::string algorithm_digest;

  friend bool operator==(const Vote&, const Vote&) = default;
};

struct ConsensusOutcome {
  std::optional<PlacementDecision> committed;  // nullopt: no strict majority
  std::string committed_digest;                // empty when no commit
  std::map<std::string, Vote> votes;           // validator id -> vote
  int quorum = 0;                              // strict-majority threshold
};

/// SHA-256 over the canonical serialization of
/// (chain id, sorted assignments, algorithm digest).
std::string decision_digest(const PlacementDecision& decision,
                            const std::string& algorithm_digest);

/// One agreement round: every validator derives its world by replaying the
/// ledger and produces a decision; decisions are grouped by canonical
/// digest; a group holding a strict majority (> N/2) commits. A committed
/// Placed decision is appended via post_placement; otherwise the ledger is
/// returned unchanged.
std::pair<ConsensusOutcome, std::vector<Block>> run_round(
    const PlacementRequest& request, const std::vector<Block>& chain,
    const std::vector<Validator>& validators, const Weights& weights = {});

struct AuditReport {
  bool no_quorum = false;
  std::vector<std::string> dissenters;            // validators off the committed digest
  std::vector<std::string> algorithm_mismatches;  // votes with a foreign algorithm digest
  bool committed_tx_match = true;  // trailing txs equal the committed assignments
};

/// Post-round traceability: names dissenting validators and algorithm
/// digest mismatches, and checks that the transactions at the ledger tip
/// match the committed decision.
AuditReport audit_round(const ConsensusOutcome& outcome,
                        const std::vector<Block>& chain);

}  // namespace edgechain
