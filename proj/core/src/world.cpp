#include "edgechain/world.hpp"

#include <algorithm>
#include <map>

namespace edgechain {

namespace {

std::pair<std::string, std::string> normalized_pair(const std::string& a,
                                                    const std::string& b) {
  return a < b ? std::make_pair(a, b) : std::make_pair(b, a);
}

}  // namespace

void WorldState::reindex() {
  mecsp_idx_.clear();
  host_idx_.clear();
  link_idx_.clear();
  pair_idx_.clear();
  app_idx_.clear();
  chain_idx_.clear();
  for (std::size_t i = 0; i < mecsps_.size(); ++i) {
    mecsp_idx_.insert_or_assign(mecsps_[i].id, i);
  }
  for (std::size_t i = 0; i < hosts_.size(); ++i) {
    host_idx_.insert_or_assign(hosts_[i].id, i);
  }
  for (std::size_t i = 0; i < host_links_.size(); ++i) {
    link_idx_.insert_or_assign(host_links_[i].id, i);
    pair_idx_.insert_or_assign(
        normalized_pair(host_links_[i].endpoint_a, host_links_[i].endpoint_b), i);
  }
  for (std::size_t c = 0; c < chains_.size(); ++c) {
    chain_idx_.insert_or_assign(chains_[c].id, c);
    for (std::size_t a = 0; a < chains_[c].apps.size(); ++a) {
      app_idx_.insert_or_assign(
          chains_[c].apps[a].id,
          std::make_pair(static_cast<std::uint32_t>(c), static_cast<std::uint32_t>(a)));
    }
  }
}

void WorldState::add_mecsp(Mecsp mecsp) {
  if (mecsp.id.empty()) throw Error(Errc::InvalidValue, "mecsp with empty id");
  if (mecsp_idx_.find(mecsp.id)) {
    throw Error(Errc::DuplicateId, "duplicate mecsp id: " + mecsp.id);
  }
  if (mecsp.gamma < 0 || mecsp.delta < 0 || mecsp.kappa < 0 || mecsp.sigma < 0) {
    throw Error(Errc::InvalidValue, "negative price on mecsp " + mecsp.id);
  }
  mecsp_idx_.insert_or_assign(mecsp.id, mecsps_.size());
  mecsps_.push_back(std::move(mecsp));
}

void WorldState::add_host(MeHost host) {
  if (host_idx_.find(host.id)) {
    throw Error(Errc::DuplicateId, "duplicate host id: " + host.id);
  }
  if (!mecsp_idx_.find(host.owner)) {
    throw Error(Errc::DanglingReference,
                "host " + host.id + " references unknown mecsp " + host.owner);
  }
  if (host.cpu_capacity <= 0 || host.mem_capacity <= 0) {
    throw Error(Errc::InvalidValue, "non-positive capacity on host " + host.id);
  }
  host_idx_.insert_or_assign(host.id, hosts_.size());
  hosts_.push_back(std::move(host));
  host_usage_.push_back({});
}

void WorldState::add_host_link(HostLink link) {
  if (link_idx_.find(link.id)) {
    throw Error(Errc::DuplicateId, "duplicate host link id: " + link.id);
  }
  if (link.endpoint_a == link.endpoint_b) {
    throw Error(Errc::InvalidValue, "host link " + link.id + " is a self-loop");
  }
  for (const std::string* ep : {&link.endpoint_a, &link.endpoint_b}) {
    if (!host_idx_.find(*ep)) {
      throw Error(Errc::DanglingReference,
                  "host link " + link.id + " references unknown host " + *ep);
    }
  }
  if (link.bandwidth_capacity <= 0) {
    throw Error(Errc::InvalidValue, "non-positive bandwidth on link " + link.id);
  }
  if (link.latency_ms < 0) {
    throw Error(Errc::InvalidValue, "negative latency on link " + link.id);
  }
  if (link.max_virtual_links < 1) {
    throw Error(Errc::InvalidValue, "max_virtual_links < 1 on link " + link.id);
  }
  auto key = normalized_pair(link.endpoint_a, link.endpoint_b);
  if (pair_idx_.find(key)) {
    throw Error(Errc::DuplicateId,
                "host pair already linked: " + key.first + "/" + key.second);
  }
  link_idx_.insert_or_assign(link.id, host_links_.size());
  pair_idx_.insert_or_assign(key, host_links_.size());
  host_links_.push_back(std::move(link));
  link_usage_.push_back({});
}

void WorldState::add_chain(SvcChain chain) {
  if (chain_idx_.find(chain.id)) {
    throw Error(Errc::DuplicateId, "duplicate chain id: " + chain.id);
  }
  if (chain.max_latency_ms <= 0) {
    throw Error(Errc::InvalidValue,
                "non-positive latency budget on chain " + chain.id);
  }
  std::map<std::string, int> local;
  for (const MeApp& app : chain.apps) {
    if (app_idx_.find(app.id) || local.count(app.id)) {
      throw Error(Errc::DuplicateId, "duplicate app id: " + app.id);
    }
    if (app.cpu_demand <= 0 || app.mem_demand <= 0) {
      throw Error(Errc::InvalidValue, "non-positive demand on app " + app.id);
    }
    local[app.id] = 1;
  }
  for (const AppLink& link : chain.links) {
    if (link.src == link.dst) {
      throw Error(Errc::InvalidValue, "app link self-loop on " + link.src);
    }
    if (!local.count(link.src) || !local.count(link.dst)) {
      throw Error(Errc::DanglingReference, "app link " + link.src + "->" +
                                               link.dst + " leaves chain " + chain.id);
    }
    if (link.bandwidth_demand < 0) {
      throw Error(Errc::InvalidValue,
                  "negative bandwidth demand on " + link.src + "->" + link.dst);
    }
  }
  std::size_t c = chains_.size();
  chain_idx_.insert_or_assign(chain.id, c);
  for (std::size_t a = 0; a < chain.apps.size(); ++a) {
    app_idx_.insert_or_assign(
        chain.apps[a].id,
        std::make_pair(static_cast<std::uint32_t>(c), static_cast<std::uint32_t>(a)));
  }
  chains_.push_back(std::move(chain));
}

void WorldState::update_mecsp(const Mecsp& mecsp) {
  const std::size_t* pos = mecsp_idx_.find(mecsp.id);
  if (!pos) throw Error(Errc::DanglingReference, "unknown mecsp " + mecsp.id);
  if (mecsp.gamma < 0 || mecsp.delta < 0 || mecsp.kappa < 0 || mecsp.sigma < 0) {
    throw Error(Errc::InvalidValue, "negative price on mecsp " + mecsp.id);
  }
  mecsps_[*pos] = mecsp;
}

void WorldState::update_host(const MeHost& host) {
  const std::size_t* pos = host_idx_.find(host.id);
  if (!pos) throw Error(Errc::DanglingReference, "unknown host " + host.id);
  if (!mecsp_idx_.find(host.owner)) {
    throw Error(Errc::DanglingReference,
                "host " + host.id + " references unknown mecsp " + host.owner);
  }
  const HostUsage& used = host_usage_[*pos];
  if (host.cpu_capacity < used.cpu_used || host.mem_capacity < used.mem_used) {
    throw Error(Errc::CapacityExceeded,
                "host " + host.id + " cannot shrink below current usage");
  }
  if (host.cpu_capacity <= 0 || host.mem_capacity <= 0) {
    throw Error(Errc::InvalidValue, "non-positive capacity on host " + host.id);
  }
  hosts_[*pos] = host;
}

void WorldState::update_host_link(const HostLink& link) {
  const std::size_t* pos = link_idx_.find(link.id);
  if (!pos) throw Error(Errc::DanglingReference, "unknown host link " + link.id);
  const HostLink& current = host_links_[*pos];
  if (normalized_pair(link.endpoint_a, link.endpoint_b) !=
      normalized_pair(current.endpoint_a, current.endpoint_b)) {
    throw Error(Errc::InvalidValue,
                "host link " + link.id + " cannot be re-attached");
  }
  const LinkUsage& used = link_usage_[*pos];
  if (link.bandwidth_capacity < used.used_bandwidth ||
      link.max_virtual_links < used.applink_count) {
    throw Error(Errc::CapacityExceeded,
                "host link " + link.id + " cannot shrink below current usage");
  }
  if (link.bandwidth_capacity <= 0 || link.latency_ms < 0 ||
      link.max_virtual_links < 1) {
    throw Error(Errc::InvalidValue, "invalid parameters on link " + link.id);
  }
  host_links_[*pos] = link;
}

void WorldState::remove_mecsp(const std::string& id) {
  const std::size_t* pos = mecsp_idx_.find(id);
  if (!pos) throw Error(Errc::DanglingReference, "unknown mecsp " + id);
  for (const MeHost& h : hosts_) {
    if (h.owner == id) {
      throw Error(Errc::InvalidValue,
                  "mecsp " + id + " still owns host " + h.id);
    }
  }
  mecsps_.erase(mecsps_.begin() + static_cast<std::ptrdiff_t>(*pos));
  reindex();
}

void WorldState::remove_host(const std::string& id) {
  const std::size_t* pos = host_idx_.find(id);
  if (!pos) throw Error(Errc::DanglingReference, "unknown host " + id);
  for (const auto& [app, host] : placement_) {
    if (host == id) {
      throw Error(Errc::InvalidValue, "host " + id + " still runs app " + app);
    }
  }
  for (const HostLink& l : host_links_) {
    if (l.endpoint_a == id || l.endpoint_b == id) {
      throw Error(Errc::InvalidValue, "host " + id + " still attached to link " + l.id);
    }
  }
  hosts_.erase(hosts_.begin() + static_cast<std::ptrdiff_t>(*pos));
  host_usage_.erase(host_usage_.begin() + static_cast<std::ptrdiff_t>(*pos));
  reindex();
}

void WorldState::remove_host_link(const std::string& id) {
  const std::size_t* pos = link_idx_.find(id);
  if (!pos) throw Error(Errc::DanglingReference, "unknown host link " + id);
  if (link_usage_[*pos].applink_count > 0) {
    throw Error(Errc::InvalidValue, "host link " + id + " still carries traffic");
  }
  host_links_.erase(host_links_.begin() + static_cast<std::ptrdiff_t>(*pos));
  link_usage_.erase(link_usage_.begin() + static_cast<std::ptrdiff_t>(*pos));
  reindex();
}

void WorldState::apply_assignment(const std::string& app_id,
                                  const std::string& host_id) {
  const auto* located = app_idx_.find(app_id);
  if (!located) throw Error(Errc::DanglingReference, "unknown app " + app_id);
  if (placement_.count(app_id)) {
    throw Error(Errc::AlreadyPlaced, "app " + app_id + " is already placed");
  }
  const std::size_t* host_pos = host_idx_.find(host_id);
  if (!host_pos) throw Error(Errc::DanglingReference, "unknown host " + host_id);

  const SvcChain& chain = chains_[located->first];
  const MeApp& app = chain.apps[located->second];
  const MeHost& host = hosts_[*host_pos];
  const HostUsage& usage = host_usage_[*host_pos];

  if (usage.cpu_used + app.cpu_demand > host.cpu_capacity) {
    throw Error(Errc::CapacityExceeded, "cpu capacity exceeded on host " + host_id);
  }
  if (usage.mem_used + app.mem_demand > host.mem_capacity) {
    throw Error(Errc::CapacityExceeded, "memory capacity exceeded on host " + host_id);
  }

  // Aggregate substrate-link demands toward already-placed peers before
  // checking headroom: several AppLinks may share one HostLink.
  std::map<std::size_t, std::pair<int, double>> deltas;  // link -> (count, bw)
  for (const AppLink& l : chain.links) {
    if (l.src != app_id && l.dst != app_id) continue;
    const std::string& peer = (l.src == app_id) ? l.dst : l.src;
    auto it = placement_.find(peer);
    if (it == placement_.end()) continue;
    if (it->second == host_id) continue;  // co-located: no substrate link used
    const std::size_t* link_pos = pair_idx_.find(normalized_pair(host_id, it->second));
    if (!link_pos) {
      throw Error(Errc::NoRoute, "no host link between " + host_id + " and " +
                                     it->second + " for app link " + l.src +
                                     "->" + l.dst);
    }
    auto& delta = deltas[*link_pos];
    delta.first += 1;
    delta.second += l.bandwidth_demand;
  }
  for (const auto& [link_pos, delta] : deltas) {
    const HostLink& link = host_links_[link_pos];
    const LinkUsage& lu = link_usage_[link_pos];
    if (lu.applink_count + delta.first > link.max_virtual_links) {
      throw Error(Errc::CapacityExceeded,
                  "virtual-link capacity exceeded on link " + link.id);
    }
    if (lu.used_bandwidth + delta.second > link.bandwidth_capacity) {
      throw Error(Errc::CapacityExceeded,
                  "bandwidth capacity exceeded on link " + link.id);
    }
  }

  // All checks passed; commit.
  host_usage_[*host_pos].cpu_used += app.cpu_demand;
  host_usage_[*host_pos].mem_used += app.mem_demand;
  for (const auto& [link_pos, delta] : deltas) {
    link_usage_[link_pos].applink_count += delta.first;
    link_usage_[link_pos].used_bandwidth += delta.second;
  }
  placement_.emplace(app_id, host_id);
}

void WorldState::remove_assignment(const std::string& app_id) {
  auto placed = placement_.find(app_id);
  if (placed == placement_.end()) {
    throw Error(Errc::NotPlaced, "app " + app_id + " is not placed");
  }
  const auto* located = app_idx_.find(app_id);
  if (!located) throw Error(Errc::DanglingReference, "unknown app " + app_id);
  const std::string host_id = placed->second;
  const std::size_t* host_pos = host_idx_.find(host_id);
  if (!host_pos) throw Error(Errc::DanglingReference, "unknown host " + host_id);

  const SvcChain& chain = chains_[located->first];
  const MeApp& app = chain.apps[located->second];

  host_usage_[*host_pos].cpu_used -= app.cpu_demand;
  host_usage_[*host_pos].mem_used -= app.mem_demand;
  for (const AppLink& l : chain.links) {
    if (l.src != app_id && l.dst != app_id) continue;
    const std::string& peer = (l.src == app_id) ? l.dst : l.src;
    auto it = placement_.find(peer);
    if (it == placement_.end() || it->second == host_id) continue;
    const std::size_t* link_pos = pair_idx_.find(normalized_pair(host_id, it->second));
    if (!link_pos) continue;  // cannot happen for states built through apply
    link_usage_[*link_pos].applink_count -= 1;
    link_usage_[*link_pos].used_bandwidth -= l.bandwidth_demand;
  }
  placement_.erase(placed);
}

const Mecsp* WorldState::find_mecsp(const std::string& id) const {
  const std::size_t* pos = mecsp_idx_.find(id);
  return pos ? &mecsps_[*pos] : nullptr;
}

const MeHost* WorldState::find_host(const std::string& id) const {
  const std::size_t* pos = host_idx_.find(id);
  return pos ? &hosts_[*pos] : nullptr;
}

const HostLink* WorldState::find_host_link(const std::string& id) const {
  const std::size_t* pos = link_idx_.find(id);
  return pos ? &host_links_[*pos] : nullptr;
}

const SvcChain* WorldState::find_chain(const std::string& id) const {
  const std::size_t* pos = chain_idx_.find(id);
  return pos ? &chains_[*pos] : nullptr;
}

const MeApp* WorldState::find_app(const std::string& app_id) const {
  const auto* located = app_idx_.find(app_id);
  return located ? &chains_[located->first].apps[located->second] : nullptr;
}

const SvcChain* WorldState::chain_of_app(const std::string& app_id) const {
  const auto* located = app_idx_.find(app_id);
  return located ? &chains_[located->first] : nullptr;
}

const Mecsp& WorldState::mecsp_of(const MeHost& host) const {
  const Mecsp* m = find_mecsp(host.owner);
  if (!m) {
    throw Error(Errc::DanglingReference,
                "host " + host.id + " references unknown mecsp " + host.owner);
  }
  return *m;
}

const HostLink* WorldState::link_between(const std::string& host_a,
                                         const std::string& host_b) const {
  if (host_a == host_b) return nullptr;
  const std::size_t* pos = pair_idx_.find(normalized_pair(host_a, host_b));
  return pos ? &host_links_[*pos] : nullptr;
}

const HostUsage& WorldState::host_usage(const std::string& host_id) const {
  return host_usage_[host_pos(host_id)];
}

const LinkUsage& WorldState::link_usage(const std::string& link_id) const {
  const std::size_t* pos = link_idx_.find(link_id);
  if (!pos) throw Error(Errc::DanglingReference, "unknown host link " + link_id);
  return link_usage_[*pos];
}

std::int64_t WorldState::cpu_remaining(const std::string& host_id) const {
  std::size_t pos = host_pos(host_id);
  return hosts_[pos].cpu_capacity - host_usage_[pos].cpu_used;
}

std::int64_t WorldState::mem_remaining(const std::string& host_id) const {
  std::size_t pos = host_pos(host_id);
  return hosts_[pos].mem_capacity - host_usage_[pos].mem_used;
}

const std::string* WorldState::host_of(const std::string& app_id) const {
  auto it = placement_.find(app_id);
  return it == placement_.end() ? nullptr : &it->second;
}

std::size_t WorldState::host_pos(const std::string& id) const {
  const std::size_t* pos = host_idx_.find(id);
  if (!pos) throw Error(Errc::DanglingReference, "unknown host " + id);
  return *pos;
}

WorldState build_world(const ScenarioConfig& scenario) {
  WorldState world;
  world.set_weights(scenario.weights);
  for (const Mecsp& m : scenario.mecsps) world.add_mecsp(m);
  for (const MeHost& h : scenario.hosts) world.add_host(h);
  for (const HostLink& l : scenario.host_links) world.add_host_link(l);
  for (const SvcChain& c : scenario.chains) world.add_chain(c);
  return world;
}

}  // namespace edgechain
