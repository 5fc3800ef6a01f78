#include "app.hpp"

#include <cmred/error.hpp>

#include <chrono>
#include <fstream>
#include <sstream>

#ifndef CMRED_VERSION
#define CMRED_VERSION "0.0.0"
#endif

namespace cmred::app {

std::string version() { return CMRED_VERSION; }

LoadedGroup parse_group_json(std::string_view text) {
  nlohmann::json j;
  try {
    j = nlohmann::json::parse(text);
  } catch (const nlohmann::json::parse_error& e) {
    throw ParseError(std::string("malformed group file: ") + e.what(), e.byte);
  }
  if (!j.is_object()) throw ParseError("group file must hold a JSON object");
  for (const char* key : {"degree", "group_generators", "subgroup_generators"})
    if (!j.contains(key)) throw ParseError(std::string("group file lacks \"") + key + "\"");
  if (!j["degree"].is_number_integer()) throw ParseError("\"degree\" must be an integer");
  const auto degree = j["degree"].get<long long>();
  if (degree < 1 || degree > static_cast<long long>(kMaxDegree))
    throw ParseError("\"degree\" must lie in 1.." + std::to_string(kMaxDegree));

  auto read_perms = [&](const char* key) {
    const auto& arr = j[key];
    if (!arr.is_array()) throw ParseError(std::string("\"") + key + "\" must be an array");
    std::vector<Permutation> out;
    for (std::size_t k = 0; k < arr.size(); ++k) {
      const auto& p = arr[k];
      const std::string where = std::string(key) + "[" + std::to_string(k) + "]";
      if (!p.is_array() || p.size() != static_cast<std::size_t>(degree))
        throw ParseError(where + " must be an array of " + std::to_string(degree) + " integers");
      std::vector<int> images;
      for (const auto& x : p) {
        if (!x.is_number_integer()) throw ParseError(where + " holds a non-integer");
        images.push_back(x.get<int>());
      }
      try {
        out.push_back(Permutation::from_images(images));
      } catch (const InvalidPermutation& e) {
        throw ParseError(where + ": " + e.what());
      }
    }
    return out;
  };

  std::vector<Permutation> gens = read_perms("group_generators");
  std::vector<Permutation> sub = read_perms("subgroup_generators");
  FiniteGroup G = FiniteGroup::close_generators(static_cast<std::size_t>(degree), gens);
  return {std::move(G), std::move(sub), "group from file, degree " + std::to_string(degree)};
}

LoadedGroup load_group(std::string_view source, const ZooOptions& options) {
  constexpr std::string_view kFile = "file:";
  if (source.substr(0, kFile.size()) == kFile) {
    const std::string path(source.substr(kFile.size()));
    std::ifstream in(path);
    if (!in) throw ParseError("cannot read group file '" + path + "'", kFile.size());
    std::stringstream buf;
    buf << in.rdbuf();
    return parse_group_json(buf.str());
  }
  ZooGroup z = build_zoo_group(parse_zoo_spec(source), options);
  return {std::move(z.group), std::move(z.subgroup_gens), std::move(z.description)};
}

namespace {

std::string command_name(Command c) {
  switch (c) {
    case Command::ZooList: return "zoo-list";
    case Command::Verify: return "verify";
    case Command::Orbits: return "orbits";
    case Command::Certify: return "certify";
  }
  return "";
}

}  // namespace

Report run(const RunConfig& config) {
  const auto start = std::chrono::steady_clock::now();
  Report r;
  r.version = version();
  r.command = command_name(config.command);

  if (config.command == Command::ZooList) {
    r.zoo = zoo_catalog();
  } else {
    if (config.eps_max && *config.eps_max > kMaxEps)
      throw UnsupportedParameter("eps-max must be at most " + std::to_string(kMaxEps));
    ZooOptions options;
    options.allow_large = config.allow_large;
    LoadedGroup loaded = load_group(config.source, options);
    const UnitaryGaloisModel model(std::move(loaded.group), loaded.subgroup_gens);

    r.group = GroupSummary{config.source, loaded.description, model.group().order(),
                           model.n(),     model.h(),           model.classes().count()};
    const std::size_t eps_max = std::min(config.eps_max.value_or(model.n()), model.n());
    r.parameters = Parameters{eps_max, config.brute_cap, config.seed};

    if (config.command == Command::Verify) {
      const ClosedForm closed(model);
      SamplingPolicy policy;
      policy.seed = config.seed;
      const A0Path path =
          model.gamma_order() <= config.brute_cap ? A0Path::Brute : A0Path::Closed;
      r.checks.push_back(check_closed_form(closed, eps_max, policy, config.brute_cap));
      r.checks.push_back(check_conj_sum(model));
      r.checks.push_back(check_reduction_all(closed, eps_max, policy));
      r.checks.push_back(check_cm0_all(closed, eps_max, policy));
      r.checks.push_back(
          check_galois_invariance(closed, kGaloisPairs, config.seed, path, config.brute_cap));
    }
    if (config.command == Command::Verify || config.command == Command::Orbits)
      r.orbits = orbit_table(model, eps_max);
    if (config.command == Command::Verify || config.command == Command::Certify)
      r.certificate = certify(model);
  }

  r.elapsed_ms = static_cast<std::uint64_t>(std::chrono::duration_cast<std::chrono::milliseconds>(
                                                std::chrono::steady_clock::now() - start)
                                                .count());
  return r;
}

int exit_code(const Report& report) {
  for (const auto& c : report.checks)
    if (c.status == CheckStatus::Fail) return 1;
  return 0;
}

bool operator==(const Report& a, const Report& b) {
  return a.version == b.version && a.command == b.command && a.group == b.group &&
         a.parameters == b.parameters && a.checks == b.checks && a.orbits == b.orbits &&
         a.certificate == b.certificate && a.zoo == b.zoo && a.elapsed_ms == b.elapsed_ms;
}

}  // namespace cmred::app
