#pragma once

#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <vector>

namespace edgechain {

/// A mobile edge service provider. Owns hosts and sets the four unit
/// prices used by the cost model:
///   gamma  resource unit price charged to its own subscribers
///   delta  resource premium when serving other providers' users
///   kappa  bandwidth base unit price
///   sigma  bandwidth premium
struct Mecsp {
  std::string id;
  double gamma = 0.0;
  double delta = 0.0;
  double kappa = 0.0;
  double sigma = 0.0;

  friend bool operator==(const Mecsp&, const Mecsp&) = default;
};

/// An edge server owned by one MECSP.
struct MeHost {
  std::string id;
  std::string owner;  // Mecsp id
  std::int64_t cpu_capacity = 0;  // vCPUs
  std::int64_t mem_capacity = 0;  // MB

  friend bool operator==(const MeHost&, const MeHost&) = default;
};

/// Undirected substrate link between two hosts. At most one link exists
/// per host pair.
struct HostLink {
  std::string id;
  std::string endpoint_a;  // MeHost id
  std::string endpoint_b;  // MeHost id
  double bandwidth_capacity = 0.0;  // Mbps
  double latency_ms = 0.0;
  int max_virtual_links = 100;

  friend bool operator==(const HostLink&, const HostLink&) = default;
};

/// A deployable application unit (VM-equivalent) with resource demands.
/// max_latency_ms, when set, bounds every materialized hop into this app;
/// unset means only the chain budget applies.
struct MeApp {
  std::string id;
  std::string vendor;  // MEAV id
  std::int64_t cpu_demand = 0;  // vCPUs
  std::int64_t mem_demand = 0;  // MB
  std::optional<double> max_latency_ms;

  friend bool operator==(const MeApp&, const MeApp&) = default;
};

/// Directed traffic relation between two apps of the same chain.
struct AppLink {
  std::string src;  // MeApp id
  std::string dst;  // MeApp id
  double bandwidth_demand = 0.0;  // Mbps

  friend bool operator==(const AppLink&, const AppLink&) = default;
};

/// An ordered forwarding graph of apps with an end-to-end latency budget.
struct SvcChain {
  std::string id;
  std::vector<MeApp> apps;    // forwarding order
  std::vector<AppLink> links;
  double max_latency_ms = 0.0;
  std::string requested_by;  // user id

  const MeApp* find_app(const std::string& app_id) const {
    for (const MeApp& app : apps) {
      if (app.id == app_id) return &app;
    }
    return nullptr;
  }

  friend bool operator==(const SvcChain&, const SvcChain&) = default;
};

/// How the requesting users split across providers. Shares over the listed
/// providers may sum to less than one; the deficit belongs to providers
/// outside the scenario.
struct UserDistribution {
  std::int64_t total_users = 1;
  std::map<std::string, double> shares;  // Mecsp id -> fraction in [0,1]

  double share_of(const std::string& mecsp_id) const {
    auto it = shares.find(mecsp_id);
    return it == shares.end() ? 0.0 : it->second;
  }

  friend bool operator==(const UserDistribution&, const UserDistribution&) = default;
};

/// Optional scale factors applied when vCPUs and MB are added into one
/// resource figure. (1, 1) reproduces the plain sum.
struct Weights {
  double cpu = 1.0;
  double mem = 1.0;

  friend bool operator==(const Weights&, const Weights&) = default;
};

/// app id -> host id. Each placed app maps to exactly one host.
using Placement = std::map<std::string, std::string>;

inline double weighted_demand(const MeApp& app, const Weights& w) {
  return w.cpu * static_cast<double>(app.cpu_demand) +
         w.mem * static_cast<double>(app.mem_demand);
}

inline double chain_demand(const SvcChain& chain, const Weights& w) {
  double total = 0.0;
  for (const MeApp& app : chain.apps) total += weighted_demand(app, w);
  return total;
}

}  // namespace edgechain
