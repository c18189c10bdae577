#pragma once

#include <cstdint>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "edgechain/detail/flat_index.hpp"
#include "edgechain/errors.hpp"
#include "edgechain/scenario.hpp"
#include "edgechain/types.hpp"

namespace edgechain {

/// Occupancy of one HostLink: materialized AppLink count and consumed
/// bandwidth. Only cross-host app pairs consume a link; co-located pairs
/// cost nothing here.
struct LinkUsage {
  int applink_count = 0;
  double used_bandwidth = 0.0;

  friend bool operator==(const LinkUsage&, const LinkUsage&) = default;
};

struct HostUsage {
  std::int64_t cpu_used = 0;
  std::int64_t mem_used = 0;

  friend bool operator==(const HostUsage&, const HostUsage&) = default;
};

/// The complete world: substrate graph, registered service chains, current
/// assignments, and the derived per-host/per-link occupancy.
///
/// A WorldState is a value. Mutations validate before committing, so every
/// reachable state satisfies the capacity bounds: host cpu/mem usage never
/// exceeds capacity, link bandwidth never exceeds capacity, and a link
/// never carries more AppLinks than max_virtual_links.
class WorldState {
 public:
  WorldState() = default;

  // Registration. Used by scenario loading and by ledger replay.
  void set_weights(const Weights& weights) { weights_ = weights; }
  void add_mecsp(Mecsp mecsp);
  void add_host(MeHost host);
  void add_host_link(HostLink link);
  void add_chain(SvcChain chain);

  // In-place entity maintenance backing ledger update/delete records.
  // Structural chain entities (SvcChain/MeApp/AppLink) are placed workloads
  // and are not updatable here.
  void update_mecsp(const Mecsp& mecsp);
  void update_host(const MeHost& host);
  void update_host_link(const HostLink& link);
  void remove_mecsp(const std::string& id);
  void remove_host(const std::string& id);
  void remove_host_link(const std::string& id);

  /// Assigns an app to a host: deducts cpu/mem from the host and, for every
  /// AppLink to an already-placed peer on a different host, consumes
  /// bandwidth and one virtual-link slot on the connecting HostLink.
  /// Validates everything up front; on error the state is untouched.
  /// Throws: AlreadyPlaced, CapacityExceeded, NoRoute, DanglingReference.
  void apply_assignment(const std::string& app_id, const std::string& host_id);

  /// Exact inverse of apply_assignment. Throws NotPlaced.
  void remove_assignment(const std::string& app_id);

  std::span<const Mecsp> mecsps() const { return mecsps_; }
  std::span<const MeHost> hosts() const { return hosts_; }
  std::span<const HostLink> host_links() const { return host_links_; }
  std::span<const SvcChain> chains() const { return chains_; }
  const Placement& placement() const { return placement_; }
  const Weights& weights() const { return weights_; }

  const Mecsp* find_mecsp(const std::string& id) const;
  const MeHost* find_host(const std::string& id) const;
  const HostLink* find_host_link(const std::string& id) const;
  const SvcChain* find_chain(const std::string& id) const;
  const MeApp* find_app(const std::string& app_id) const;
  const SvcChain* chain_of_app(const std::string& app_id) const;

  /// Owner of a host; throws DanglingReference if unknown.
  const Mecsp& mecsp_of(const MeHost& host) const;

  /// The substrate link connecting two distinct hosts, nullptr if none.
  const HostLink* link_between(const std::string& host_a,
                               const std::string& host_b) const;

  const HostUsage& host_usage(const std::string& host_id) const;
  const LinkUsage& link_usage(const std::string& link_id) const;
  const LinkUsage& link_usage(const HostLink& link) const {
    return link_usage(link.id);
  }
  std::int64_t cpu_remaining(const std::string& host_id) const;
  std::int64_t mem_remaining(const std::string& host_id) const;

  bool placed(const std::string& app_id) const {
    return placement_.count(app_id) > 0;
  }
  /// Host an app is placed on, nullptr when unplaced.
  const std::string* host_of(const std::string& app_id) const;

  friend bool operator==(const WorldState&, const WorldState&) = default;

 private:
  std::size_t host_pos(const std::string& id) const;
  void reindex();

  std::vector<Mecsp> mecsps_;
  std::vector<MeHost> hosts_;
  std::vector<HostLink> host_links_;
  std::vector<SvcChain> chains_;
  Placement placement_;
  std::vector<HostUsage> host_usage_;  // parallel to hosts_
  std::vector<LinkUsage> link_usage_;  // parallel to host_links_
  Weights weights_;

  detail::FlatIndex<std::string, std::size_t> mecsp_idx_;
  detail::FlatIndex<std::string, std::size_t> host_idx_;
  detail::FlatIndex<std::string, std::size_t> link_idx_;
  detail::FlatIndex<std::pair<std::string, std::string>, std::size_t> pair_idx_;
  detail::FlatIndex<std::string, std::pair<std::uint32_t, std::uint32_t>> app_idx_;
  detail::FlatIndex<std::string, std::size_t> chain_idx_;
};

/// Builds an empty-placement world from a validated scenario.
WorldState build_world(const ScenarioConfig& scenario);

}  // namespace edgechain
