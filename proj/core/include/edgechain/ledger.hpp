#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <variant>
#include <vector>

#include "edgechain/placement.hpp"
#include "edgechain/scenario.hpp"
#include "edgechain/types.hpp"
#include "edgechain/world.hpp"

namespace edgechain {

enum class RecordKind { Mecsp, MeHost, HostLink, SvcChain, MeApp, AppLink };
enum class RecordOp { Create, Update, Delete };

std::string to_string(RecordKind kind);
std::string to_string(RecordOp op);
RecordKind record_kind_from_string(const std::string& text);
RecordOp record_op_from_string(const std::string& text);

/// One entity record. The payload is the canonical JSON serialization of
/// the entity, with references to other entities expressed as record
/// addresses. The address is the content digest of
/// payload ‖ kind ‖ op ‖ prev_address, so identical content yields the same
/// address on every node.
struct LedgerRecord {
  std::string address;
  RecordKind kind = RecordKind::Mecsp;
  RecordOp op = RecordOp::Create;
  std::string prev_address;  // lineage for Update/Delete; empty for Create
  std::string payload;       // canonical JSON text

  friend bool operator==(const LedgerRecord&, const LedgerRecord&) = default;
};

std::string record_address(RecordKind kind, RecordOp op,
                           const std::string& payload,
                           const std::string& prev_address);

LedgerRecord make_record(RecordKind kind, RecordOp op, std::string payload,
                         std::string prev_address = "");

/// Records that an app-to-host assignment was committed, together with the
/// resource deduction it caused and the host's remaining resources after
/// it. algorithm_digest names the placement logic that produced the
/// decision.
struct PlacementTx {
  std::string app_address;
  std::string host_address;
  std::int64_t cpu_delta = 0;
  std::int64_t mem_delta = 0;
  std::int64_t remaining_cpu = 0;
  std::int64_t remaining_mem = 0;
  std::string algorithm_digest;

  friend bool operator==(const PlacementTx&, const PlacementTx&) = default;
};

using BlockEntry = std::variant<LedgerRecord, PlacementTx>;

/// Hash-chained block. `payload` is the canonical JSON array of entries —
/// kept as text because the hash covers exactly these bytes. `timestamp` is
/// caller-supplied logical time, never wall clock.
struct Block {
  std::uint64_t index = 0;
  std::string prev_hash;  // zero_hash() for genesis
  std::string payload;    // canonical JSON text of the entry array
  std::int64_t timestamp = 0;
  std::string hash;

  std::vector<BlockEntry> entries() const;

  friend bool operator==(const Block&, const Block&) = default;
};

std::string serialize_entries(const std::vector<BlockEntry>& entries);
std::string block_hash(const Block& block);

/// Appends one block holding `entries`. The input chain must verify; the
/// original blocks are untouched. Throws InvalidChain.
std::vector<Block> append_block(const std::vector<Block>& chain,
                                const std::vector<BlockEntry>& entries,
                                std::int64_t timestamp);

/// Recomputes every hash and link. Returns the first index whose stored
/// hash, prev linkage, or index fails, nullopt when the chain is intact.
std::optional<std::size_t> verify_chain(const std::vector<Block>& chain);

/// Folds records and placement transactions, in order, into a WorldState.
/// Weights are scenario-level configuration and ride alongside the chain.
/// Throws InvalidChain on a corrupt chain and ReplayError (with the block
/// index) on dangling addresses, capacity underflow, duplicate creates, or
/// transactions that disagree with the recorded deductions.
WorldState replay_state(const std::vector<Block>& chain,
                        const Weights& weights = {});

/// Appends one PlacementTx block per assignment of a Placed decision, in
/// chain forwarding order. `post_state` is the world after the decision was
/// applied; the extended chain is verified to replay exactly to it.
/// Infeasible decisions leave the chain unchanged.
std::vector<Block> post_placement(const std::vector<Block>& chain,
                                  const PlacementDecision& decision,
                                  const WorldState& post_state);

/// Genesis block plus one Create record per scenario entity, in scenario
/// order. Replaying the result equals build_world(config).
std::vector<Block> ledger_from_scenario(const ScenarioConfig& config);

/// Hash of the last block ("" for an empty chain).
std::string ledger_digest(const std::vector<Block>& chain);

/// Newline-delimited canonical JSON, one block per line.
void save_ledger(const std::string& path, const std::vector<Block>& chain);
std::vector<Block> load_ledger(const std::string& path);
std::string serialize_ledger(const std::vector<Block>& chain);
std::vector<Block> parse_ledger(const std::string& text);

// Canonical entity payloads. References are record addresses.
std::string mecsp_payload(const Mecsp& m);
std::string host_payload(const MeHost& h, const std::string& owner_address);
std::string host_link_payload(const HostLink& l, const std::string& endpoint_a_address,
                              const std::string& endpoint_b_address);
std::string app_payload(const MeApp& a);
std::string app_link_payload(const AppLink& l, const std::string& src_address,
                             const std::string& dst_address);
std::string chain_payload(const SvcChain& c,
                          const std::vector<std::string>& app_addresses,
                          const std::vector<std::string>& link_addresses);

}  // namespace edgechain
