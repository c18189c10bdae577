#include "edgechain/scenario.hpp"

#include <json.hpp>

#include <algorithm>
#include <cmath>
#include <fstream>
#include <set>
#include <sstream>
#include <utility>

#include "edgechain/errors.hpp"

namespace edgechain {

using nlohmann::json;

namespace {

constexpr double kShareSumTolerance = 1e-9;

std::size_t line_of_offset(const std::string& text, std::size_t offset) {
  std::size_t line = 1;
  for (std::size_t i = 0; i < offset && i < text.size(); ++i) {
    if (text[i] == '\n') ++line;
  }
  return line;
}

double get_number(const json& j, const char* key) {
  const auto& v = j.at(key);
  if (!v.is_number()) {
    throw Error(Errc::Parse, std::string("field '") + key + "' must be a number");
  }
  return v.get<double>();
}

std::int64_t get_integer(const json& j, const char* key) {
  const auto& v = j.at(key);
  if (!v.is_number_integer()) {
    throw Error(Errc::Parse, std::string("field '") + key + "' must be an integer");
  }
  return v.get<std::int64_t>();
}

std::string get_string(const json& j, const char* key) {
  const auto& v = j.at(key);
  if (!v.is_string()) {
    throw Error(Errc::Parse, std::string("field '") + key + "' must be a string");
  }
  return v.get<std::string>();
}

Mecsp parse_mecsp(const json& j) {
  Mecsp m;
  m.id = get_string(j, "id");
  m.gamma = get_number(j, "gamma");
  m.delta = get_number(j, "delta");
  m.kappa = get_number(j, "kappa");
  m.sigma = get_number(j, "sigma");
  return m;
}

MeHost parse_host(const json& j) {
  MeHost h;
  h.id = get_string(j, "id");
  h.owner = get_string(j, "owner");
  h.cpu_capacity = get_integer(j, "cpu_capacity");
  h.mem_capacity = get_integer(j, "mem_capacity");
  return h;
}

HostLink parse_host_link(const json& j, int default_max_virtual_links) {
  HostLink l;
  l.id = get_string(j, "id");
  l.endpoint_a = get_string(j, "endpoint_a");
  l.endpoint_b = get_string(j, "endpoint_b");
  l.bandwidth_capacity = get_number(j, "bandwidth_capacity");
  l.latency_ms = get_number(j, "latency_ms");
  l.max_virtual_links = j.contains("max_virtual_links")
                            ? static_cast<int>(get_integer(j, "max_virtual_links"))
                            : default_max_virtual_links;
  return l;
}

MeApp parse_app(const json& j) {
  MeApp a;
  a.id = get_string(j, "id");
  a.vendor = j.contains("vendor") ? get_string(j, "vendor") : "";
  a.cpu_demand = get_integer(j, "cpu_demand");
  a.mem_demand = get_integer(j, "mem_demand");
  if (j.contains("max_latency_ms")) a.max_latency_ms = get_number(j, "max_latency_ms");
  return a;
}

SvcChain parse_chain(const json& j) {
  SvcChain c;
  c.id = get_string(j, "id");
  c.max_latency_ms = get_number(j, "max_latency_ms");
  c.requested_by = j.contains("requested_by") ? get_string(j, "requested_by") : "";
  for (const json& app : j.value("apps", json::array())) {
    c.apps.push_back(parse_app(app));
  }
  for (const json& link : j.value("links", json::array())) {
    AppLink l;
    l.src = get_string(link, "src");
    l.dst = get_string(link, "dst");
    l.bandwidth_demand = get_number(link, "bandwidth_demand");
    c.links.push_back(l);
  }
  return c;
}

std::pair<std::string, std::string> normalized_pair(const std::string& a,
                                                    const std::string& b) {
  return a < b ? std::make_pair(a, b) : std::make_pair(b, a);
}

}  // namespace

ScenarioConfig parse_scenario(const std::string& text) {
  json j;
  try {
    j = json::parse(text);
  } catch (const json::parse_error& e) {
    throw Error(Errc::Parse, "scenario parse error at line " +
                                 std::to_string(line_of_offset(text, e.byte)) +
                                 ": " + e.what());
  }
  if (!j.is_object()) throw Error(Errc::Parse, "scenario root must be an object");

  ScenarioConfig config;
  try {
    if (j.contains("defaults")) {
      const json& d = j["defaults"];
      if (d.contains("max_virtual_links")) {
        config.defaults.max_virtual_links =
            static_cast<int>(get_integer(d, "max_virtual_links"));
      }
    }
    for (const json& m : j.value("mecsps", json::array())) {
      config.mecsps.push_back(parse_mecsp(m));
    }
    for (const json& h : j.value("hosts", json::array())) {
      config.hosts.push_back(parse_host(h));
    }
    for (const json& l : j.value("host_links", json::array())) {
      config.host_links.push_back(
          parse_host_link(l, config.defaults.max_virtual_links));
    }
    for (const json& c : j.value("chains", json::array())) {
      config.chains.push_back(parse_chain(c));
    }
    if (j.contains("user_distribution")) {
      const json& d = j["user_distribution"];
      config.user_distribution.total_users = get_integer(d, "total_users");
      for (const auto& [key, value] : d.value("shares", json::object()).items()) {
        if (!value.is_number()) {
          throw Error(Errc::Parse, "share of '" + key + "' must be a number");
        }
        config.user_distribution.shares[key] = value.get<double>();
      }
    }
    if (j.contains("weights")) {
      config.weights.cpu = get_number(j["weights"], "cpu");
      config.weights.mem = get_number(j["weights"], "mem");
    }
    if (j.contains("seed")) config.seed = get_integer(j, "seed");
  } catch (const json::exception& e) {
    throw Error(Errc::Parse, std::string("scenario schema error: ") + e.what());
  }

  validate_scenario(config);
  return config;
}

ScenarioConfig load_scenario(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw Error(Errc::Parse, "cannot open scenario file: " + path);
  std::ostringstream buffer;
  buffer << in.rdbuf();
  return parse_scenario(buffer.str());
}

void validate_scenario(ScenarioConfig& config) {
  std::set<std::string> mecsp_ids;
  for (const Mecsp& m : config.mecsps) {
    if (m.id.empty()) throw Error(Errc::InvalidValue, "mecsp with empty id");
    if (!mecsp_ids.insert(m.id).second) {
      throw Error(Errc::DuplicateId, "duplicate mecsp id: " + m.id);
    }
    if (m.gamma < 0 || m.delta < 0 || m.kappa < 0 || m.sigma < 0) {
      throw Error(Errc::InvalidValue, "negative price on mecsp " + m.id);
    }
  }

  std::set<std::string> host_ids;
  for (const MeHost& h : config.hosts) {
    if (!host_ids.insert(h.id).second) {
      throw Error(Errc::DuplicateId, "duplicate host id: " + h.id);
    }
    if (!mecsp_ids.count(h.owner)) {
      throw Error(Errc::DanglingReference,
                  "host " + h.id + " references unknown mecsp " + h.owner);
    }
    if (h.cpu_capacity <= 0 || h.mem_capacity <= 0) {
      throw Error(Errc::InvalidValue, "non-positive capacity on host " + h.id);
    }
  }

  // Collapse exact duplicate links per host pair; conflicting duplicates
  // are configuration errors.
  std::vector<HostLink> links;
  std::map<std::pair<std::string, std::string>, const HostLink*> by_pair;
  std::set<std::string> link_ids;
  for (const HostLink& l : config.host_links) {
    if (!link_ids.insert(l.id).second) {
      throw Error(Errc::DuplicateId, "duplicate host link id: " + l.id);
    }
    if (l.endpoint_a == l.endpoint_b) {
      throw Error(Errc::InvalidValue, "host link " + l.id + " is a self-loop");
    }
    for (const std::string* ep : {&l.endpoint_a, &l.endpoint_b}) {
      if (!host_ids.count(*ep)) {
        throw Error(Errc::DanglingReference,
                    "host link " + l.id + " references unknown host " + *ep);
      }
    }
    if (l.bandwidth_capacity <= 0) {
      throw Error(Errc::InvalidValue, "non-positive bandwidth on link " + l.id);
    }
    if (l.latency_ms < 0) {
      throw Error(Errc::InvalidValue, "negative latency on link " + l.id);
    }
    if (l.max_virtual_links < 1) {
      throw Error(Errc::InvalidValue, "max_virtual_links < 1 on link " + l.id);
    }
    auto key = normalized_pair(l.endpoint_a, l.endpoint_b);
    auto it = by_pair.find(key);
    if (it != by_pair.end()) {
      const HostLink& prior = *it->second;
      bool same = prior.bandwidth_capacity == l.bandwidth_capacity &&
                  prior.latency_ms == l.latency_ms &&
                  prior.max_virtual_links == l.max_virtual_links;
      if (!same) {
        throw Error(Errc::DuplicateId, "conflicting host links for pair " +
                                           key.first + "/" + key.second);
      }
      continue;  // exact duplicate, collapse
    }
    links.push_back(l);
    by_pair[key] = &links.back();
  }
  config.host_links = std::move(links);

  std::set<std::string> chain_ids;
  std::set<std::string> app_ids;  // globally unique: placements key on them
  for (const SvcChain& c : config.chains) {
    if (!chain_ids.insert(c.id).second) {
      throw Error(Errc::DuplicateId, "duplicate chain id: " + c.id);
    }
    if (c.max_latency_ms <= 0) {
      throw Error(Errc::InvalidValue, "non-positive latency budget on chain " + c.id);
    }
    std::set<std::string> local_apps;
    for (const MeApp& a : c.apps) {
      if (!app_ids.insert(a.id).second) {
        throw Error(Errc::DuplicateId, "duplicate app id: " + a.id);
      }
      local_apps.insert(a.id);
      if (a.cpu_demand <= 0 || a.mem_demand <= 0) {
        throw Error(Errc::InvalidValue, "non-positive demand on app " + a.id);
      }
      if (a.max_latency_ms && *a.max_latency_ms <= 0) {
        throw Error(Errc::InvalidValue, "non-positive latency budget on app " + a.id);
      }
    }
    std::set<std::pair<std::string, std::string>> seen_links;
    for (const AppLink& l : c.links) {
      if (l.src == l.dst) {
        throw Error(Errc::InvalidValue, "app link self-loop on " + l.src);
      }
      if (!local_apps.count(l.src) || !local_apps.count(l.dst)) {
        throw Error(Errc::DanglingReference, "app link " + l.src + "->" + l.dst +
                                                 " leaves chain " + c.id);
      }
      if (!seen_links.insert({l.src, l.dst}).second) {
        throw Error(Errc::DuplicateId,
                    "duplicate app link " + l.src + "->" + l.dst);
      }
      if (l.bandwidth_demand < 0) {
        throw Error(Errc::InvalidValue,
                    "negative bandwidth demand on " + l.src + "->" + l.dst);
      }
    }
  }

  const UserDistribution& dist = config.user_distribution;
  if (dist.total_users <= 0) {
    throw Error(Errc::InvalidValue, "total_users must be positive");
  }
  double sum = 0.0;
  for (const auto& [id, share] : dist.shares) {
    if (!mecsp_ids.count(id)) {
      throw Error(Errc::DanglingReference, "share for unknown mecsp " + id);
    }
    if (share < 0.0 || share > 1.0) {
      throw Error(Errc::InvalidValue, "share of " + id + " outside [0,1]");
    }
    sum += share;
  }
  if (sum > 1.0 + kShareSumTolerance) {
    throw Error(Errc::InvalidValue, "user shares sum to more than 1");
  }

  if (config.weights.cpu < 0 || config.weights.mem < 0) {
    throw Error(Errc::InvalidValue, "resource weights must be non-negative");
  }
  if (config.defaults.max_virtual_links < 1) {
    throw Error(Errc::InvalidValue, "default max_virtual_links must be >= 1");
  }
}

std::string scenario_to_json(const ScenarioConfig& config) {
  json j;
  j["mecsps"] = json::array();
  for (const Mecsp& m : config.mecsps) {
    j["mecsps"].push_back({{"id", m.id},
                           {"gamma", m.gamma},
                           {"delta", m.delta},
                           {"kappa", m.kappa},
                           {"sigma", m.sigma}});
  }
  j["hosts"] = json::array();
  for (const MeHost& h : config.hosts) {
    j["hosts"].push_back({{"id", h.id},
                          {"owner", h.owner},
                          {"cpu_capacity", h.cpu_capacity},
                          {"mem_capacity", h.mem_capacity}});
  }
  j["host_links"] = json::array();
  for (const HostLink& l : config.host_links) {
    j["host_links"].push_back({{"id", l.id},
                               {"endpoint_a", l.endpoint_a},
                               {"endpoint_b", l.endpoint_b},
                               {"bandwidth_capacity", l.bandwidth_capacity},
                               {"latency_ms", l.latency_ms},
                               {"max_virtual_links", l.max_virtual_links}});
  }
  j["chains"] = json::array();
  for (const SvcChain& c : config.chains) {
    json apps = json::array();
    for (const MeApp& a : c.apps) {
      json app = {{"id", a.id},
                  {"vendor", a.vendor},
                  {"cpu_demand", a.cpu_demand},
                  {"mem_demand", a.mem_demand}};
      if (a.max_latency_ms) app["max_latency_ms"] = *a.max_latency_ms;
      apps.push_back(app);
    }
    json links = json::array();
    for (const AppLink& l : c.links) {
      links.push_back({{"src", l.src},
                       {"dst", l.dst},
                       {"bandwidth_demand", l.bandwidth_demand}});
    }
    j["chains"].push_back({{"id", c.id},
                           {"max_latency_ms", c.max_latency_ms},
                           {"requested_by", c.requested_by},
                           {"apps", apps},
                           {"links", links}});
  }
  j["user_distribution"] = {{"total_users", config.user_distribution.total_users},
                            {"shares", config.user_distribution.shares}};
  j["weights"] = {{"cpu", config.weights.cpu}, {"mem", config.weights.mem}};
  j["defaults"] = {{"max_virtual_links", config.defaults.max_virtual_links}};
  j["seed"] = config.seed;
  return j.dump(2) + "\n";
}

}  // namespace edgechain
