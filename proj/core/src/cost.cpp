#include "edgechain/cost.hpp"

#include <algorithm>

#include "edgechain/errors.hpp"

namespace edgechain {

double effective_unit_price(const Mecsp& mecsp, const UserDistribution& dist) {
  double share = dist.share_of(mecsp.id);
  return mecsp.gamma + (1.0 - share) * mecsp.delta;
}

double host_app_cost(const MeApp& app, const MeHost& host,
                     const WorldState& state, const UserDistribution& dist) {
  const Mecsp& owner = state.mecsp_of(host);
  double units = weighted_demand(app, state.weights());
  return static_cast<double>(dist.total_users) * units *
         effective_unit_price(owner, dist);
}

PairPricing pair_pricing(const Mecsp& a, const Mecsp& b) {
  return {(a.kappa + b.kappa) / 2.0, (a.sigma + b.sigma) / 2.0};
}

double link_unit_price(const HostLink& link, const WorldState& state,
                       const std::optional<AppLink>& prospective) {
  LinkUsage usage = state.link_usage(link);
  if (prospective) {
    usage.applink_count += 1;
    usage.used_bandwidth += prospective->bandwidth_demand;
  }
  double occupancy = static_cast<double>(usage.applink_count) /
                     static_cast<double>(link.max_virtual_links);
  double utilization = usage.used_bandwidth / link.bandwidth_capacity;
  return std::clamp(occupancy * utilization, 0.0, 1.0);
}

double link_cost(const AppLink& app_link, const MeHost& host_i,
                 const MeHost& host_j, const WorldState& state,
                 const UserDistribution& dist) {
  if (host_i.id == host_j.id) return 0.0;
  const HostLink* link = state.link_between(host_i.id, host_j.id);
  if (!link) {
    throw Error(Errc::NoRoute,
                "no host link between " + host_i.id + " and " + host_j.id);
  }

  // Include this AppLink in the unit price exactly once: as-is when the
  // state already routes it between these two hosts, prospectively when
  // costing a placement that does not exist yet.
  bool already_routed = false;
  const std::string* src_host = state.host_of(app_link.src);
  const std::string* dst_host = state.host_of(app_link.dst);
  if (src_host && dst_host) {
    already_routed = (*src_host == host_i.id && *dst_host == host_j.id) ||
                     (*src_host == host_j.id && *dst_host == host_i.id);
  }
  double zeta = link_unit_price(
      *link, state, already_routed ? std::nullopt : std::optional<AppLink>(app_link));

  const Mecsp& owner_i = state.mecsp_of(host_i);
  const Mecsp& owner_j = state.mecsp_of(host_j);
  PairPricing price = pair_pricing(owner_i, owner_j);

  // Fraction of users subscribed to the endpoint owners; one provider
  // counts once even when it owns both hosts.
  double own_users = owner_i.id == owner_j.id
                         ? dist.share_of(owner_i.id)
                         : dist.share_of(owner_i.id) + dist.share_of(owner_j.id);
  own_users = std::clamp(own_users, 0.0, 1.0);

  double unit = own_users * price.kappa +
                (1.0 - own_users) * (price.kappa + price.sigma);
  return static_cast<double>(dist.total_users) * zeta * unit;
}

double chain_latency(const SvcChain& chain, const Placement& placement,
                     const WorldState& state) {
  double total = 0.0;
  for (const AppLink& l : chain.links) {
    auto src = placement.find(l.src);
    auto dst = placement.find(l.dst);
    if (src == placement.end() || dst == placement.end()) {
      throw Error(Errc::Unplaced,
                  "app link " + l.src + "->" + l.dst + " has an unplaced endpoint");
    }
    if (src->second == dst->second) continue;  // co-located hop: zero
    const HostLink* link = state.link_between(src->second, dst->second);
    if (!link) {
      throw Error(Errc::NoRoute, "no host link between " + src->second + " and " +
                                     dst->second);
    }
    total += link->latency_ms;
  }
  return total;
}

CostBreakdown chain_cost(const SvcChain& chain, const Placement& placement,
                         const WorldState& state, const UserDistribution& dist) {
  CostBreakdown breakdown;
  for (const MeApp& app : chain.apps) {
    auto it = placement.find(app.id);
    if (it == placement.end()) {
      throw Error(Errc::Unplaced, "app " + app.id + " has no assignment");
    }
    const MeHost* host = state.find_host(it->second);
    if (!host) throw Error(Errc::DanglingReference, "unknown host " + it->second);
    breakdown.host_cost += host_app_cost(app, *host, state, dist);
  }
  for (const AppLink& l : chain.links) {
    const MeHost* host_i = state.find_host(placement.at(l.src));
    const MeHost* host_j = state.find_host(placement.at(l.dst));
    breakdown.link_cost += link_cost(l, *host_i, *host_j, state, dist);
  }
  breakdown.total = breakdown.host_cost + breakdown.link_cost;
  breakdown.latency_ms = chain_latency(chain, placement, state);
  return breakdown;
}

}  // namespace edgechain
