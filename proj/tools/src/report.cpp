#include "app.hpp"

#include <cmred/error.hpp>

#include <sstream>

namespace cmred::app {

using nlohmann::json;

std::string_view status_name(CheckStatus s) {
  switch (s) {
    case CheckStatus::Pass: return "pass";
    case CheckStatus::Fail: return "fail";
    case CheckStatus::Skipped: return "skipped";
  }
  return "";
}

namespace {

CheckStatus status_from(const std::string& s) {
  if (s == "pass") return CheckStatus::Pass;
  if (s == "fail") return CheckStatus::Fail;
  if (s == "skipped") return CheckStatus::Skipped;
  throw ParseError("unknown check status '" + s + "'");
}

// CM types are shown as sorted 1-based index lists.
json one_based(const std::vector<int>& zero_based) {
  json a = json::array();
  for (int i : zero_based) a.push_back(i + 1);
  return a;
}

std::vector<int> zero_based(const json& a) {
  std::vector<int> out;
  for (const auto& x : a) out.push_back(x.get<int>() - 1);
  return out;
}

json witness_json(const Witness& w) {
  json j;
  if (w.cm_type) j["cm_type"] = one_based(subset_indices(*w.cm_type));
  j["class"] = w.class_index;
  j["bit"] = w.bit;
  j["lhs"] = w.lhs.to_string();
  j["rhs"] = w.rhs.to_string();
  return j;
}

Witness witness_from(const json& j) {
  Witness w;
  if (j.contains("cm_type")) w.cm_type = subset_from_indices(zero_based(j["cm_type"]));
  w.class_index = j.at("class").get<std::size_t>();
  w.bit = j.at("bit").get<int>();
  w.lhs = Rational::parse(j.at("lhs").get<std::string>());
  w.rhs = Rational::parse(j.at("rhs").get<std::string>());
  return w;
}

json orbits_json(const std::vector<OrbitSummary>& orbits) {
  json a = json::array();
  for (const auto& o : orbits)
    a.push_back({{"representative", one_based(o.representative)}, {"size", o.size}});
  return a;
}

std::vector<OrbitSummary> orbits_from(const json& a) {
  std::vector<OrbitSummary> out;
  for (const auto& o : a)
    out.push_back({zero_based(o.at("representative")), o.at("size").get<std::uint64_t>()});
  return out;
}

std::string cm_type_text(const std::vector<int>& zero_based_indices) {
  std::string s = "[";
  for (std::size_t i = 0; i < zero_based_indices.size(); ++i) {
    if (i) s += ",";
    s += std::to_string(zero_based_indices[i] + 1);
  }
  return s + "]";
}

}  // namespace

json to_json(const Report& r) {
  json j;
  j["version"] = r.version;
  j["command"] = r.command;
  j["timing"] = {{"elapsed_ms", r.elapsed_ms}};
  if (r.group) {
    j["group"] = {{"source", r.group->source}, {"description", r.group->description},
                  {"order", r.group->order},   {"n", r.group->n},
                  {"h", r.group->h},           {"classes", r.group->classes}};
  }
  if (r.parameters) {
    j["parameters"] = {{"eps_max", r.parameters->eps_max},
                       {"brute_cap", r.parameters->brute_cap},
                       {"seed", r.parameters->seed}};
  }
  if (r.group || !r.checks.empty()) {
    json checks = json::array();
    for (const auto& c : r.checks) {
      json cj = {{"name", c.name}, {"status", std::string(status_name(c.status))}, {"cases", c.cases}};
      if (!c.note.empty()) cj["note"] = c.note;
      if (c.witness) cj["witness"] = witness_json(*c.witness);
      checks.push_back(std::move(cj));
    }
    j["checks"] = std::move(checks);
  }
  if (r.orbits) {
    json strata = json::array();
    for (const auto& s : r.orbits->strata) {
      strata.push_back({{"eps", s.eps},
                        {"skipped", s.skipped},
                        {"bit0", orbits_json(s.bit0)},
                        {"full", orbits_json(s.full)}});
    }
    j["orbits"] = {{"n", r.orbits->n}, {"strata", std::move(strata)}};
  }
  if (r.certificate) {
    const auto& c = *r.certificate;
    j["certificate"] = {{"two_transitive", c.two_transitive},
                        {"pair_orbit_count", c.pair_orbit_count},
                        {"orbit_counts", c.orbit_counts},
                        {"criterion_met", c.criterion_met},
                        {"statement", c.statement}};
  }
  if (r.command == "zoo-list") {
    json zoo = json::array();
    for (const auto& e : r.zoo)
      zoo.push_back({{"spec", e.spec}, {"description", e.description}, {"large", e.large}});
    j["zoo"] = std::move(zoo);
  }
  return j;
}

Report report_from_json(const json& j) {
  Report r;
  try {
    r.version = j.at("version").get<std::string>();
    r.command = j.at("command").get<std::string>();
    r.elapsed_ms = j.at("timing").at("elapsed_ms").get<std::uint64_t>();
    if (j.contains("group")) {
      const auto& g = j["group"];
      r.group = GroupSummary{g.at("source").get<std::string>(),
                             g.at("description").get<std::string>(),
                             g.at("order").get<std::uint64_t>(),
                             g.at("n").get<std::size_t>(),
                             g.at("h").get<std::size_t>(),
                             g.at("classes").get<std::size_t>()};
    }
    if (j.contains("parameters")) {
      const auto& p = j["parameters"];
      r.parameters = Parameters{p.at("eps_max").get<std::size_t>(),
                                p.at("brute_cap").get<std::size_t>(),
                                p.at("seed").get<std::uint64_t>()};
    }
    if (j.contains("checks")) {
      for (const auto& cj : j["checks"]) {
        IdentityReport c;
        c.name = cj.at("name").get<std::string>();
        c.status = status_from(cj.at("status").get<std::string>());
        c.cases = cj.at("cases").get<std::uint64_t>();
        if (cj.contains("note")) c.note = cj["note"].get<std::string>();
        if (cj.contains("witness")) c.witness = witness_from(cj["witness"]);
        r.checks.push_back(std::move(c));
      }
    }
    if (j.contains("orbits")) {
      OrbitTable t;
      t.n = j["orbits"].at("n").get<std::size_t>();
      for (const auto& s : j["orbits"].at("strata")) {
        OrbitStratum st;
        st.eps = s.at("eps").get<std::size_t>();
        st.skipped = s.at("skipped").get<bool>();
        st.bit0 = orbits_from(s.at("bit0"));
        st.full = orbits_from(s.at("full"));
        t.strata.push_back(std::move(st));
      }
      r.orbits = std::move(t);
    }
    if (j.contains("certificate")) {
      const auto& c = j["certificate"];
      TransitivityCertificate cert;
      cert.two_transitive = c.at("two_transitive").get<bool>();
      cert.pair_orbit_count = c.at("pair_orbit_count").get<std::size_t>();
      cert.orbit_counts = c.at("orbit_counts").get<std::vector<std::size_t>>();
      cert.criterion_met = c.at("criterion_met").get<bool>();
      cert.statement = c.at("statement").get<std::string>();
      r.certificate = std::move(cert);
    }
    if (j.contains("zoo")) {
      for (const auto& e : j["zoo"])
        r.zoo.push_back({e.at("spec").get<std::string>(), e.at("description").get<std::string>(),
                         e.at("large").get<bool>()});
    }
  } catch (const json::exception& e) {
    throw ParseError(std::string("malformed report: ") + e.what());
  }
  return r;
}

std::string render_json(const Report& report) { return to_json(report).dump(2) + "\n"; }

std::string render_text(const Report& r) {
  std::ostringstream os;
  if (r.command == "zoo-list") {
    for (const auto& e : r.zoo) {
      os << e.spec;
      for (std::size_t pad = e.spec.size(); pad < 12; ++pad) os << ' ';
      os << e.description << (e.large ? " (needs --large)" : "") << "\n";
    }
    return os.str();
  }
  if (r.group) {
    os << "group " << r.group->source << ": " << r.group->description << "\n";
    os << "  |G| = " << r.group->order << ", n = " << r.group->n << ", h = " << r.group->h
       << ", classes = " << r.group->classes << "\n";
  }
  if (r.parameters) {
    os << "  eps_max = " << r.parameters->eps_max << ", brute_cap = " << r.parameters->brute_cap
       << ", seed = " << r.parameters->seed << "\n";
  }
  for (const auto& c : r.checks) {
    os << status_name(c.status) << "  " << c.name << " (" << c.cases << " cases)";
    if (!c.note.empty()) os << " " << c.note;
    os << "\n";
    if (c.witness) os << "      " << c.witness->describe() << "\n";
  }
  if (r.orbits) {
    os << "orbits of CM types (n = " << r.orbits->n << ")\n";
    for (const auto& s : r.orbits->strata) {
      os << "  eps " << s.eps << ": ";
      if (s.skipped) {
        os << "skipped: cap\n";
        continue;
      }
      os << s.bit0.size() << " under G, " << s.full.size() << " under G x <rho>\n";
      for (const auto& o : s.bit0)
        os << "    " << cm_type_text(o.representative) << " size " << o.size << "\n";
    }
  }
  if (r.certificate) {
    const auto& c = *r.certificate;
    os << "certificate: criterion " << (c.criterion_met ? "met" : "not met")
       << ", 2-transitive = " << (c.two_transitive ? "yes" : "no")
       << ", orbits on ordered pairs = " << c.pair_orbit_count << "\n";
    os << "  " << c.statement << "\n";
  }
  os << "elapsed " << r.elapsed_ms << " ms\n";
  return os.str();
}

}  // namespace cmred::app
