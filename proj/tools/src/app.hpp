#pragma once

#include <cmred/certifier.hpp>
#include <cmred/cm_engine.hpp>
#include <cmred/zoo.hpp>

#include <nlohmann/json.hpp>

#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

namespace cmred::app {

inline constexpr std::size_t kMaxEps = 64;
inline constexpr std::size_t kGaloisPairs = 50;

enum class Command { ZooList, Verify, Orbits, Certify };
enum class Format { Json, Text };

struct RunConfig {
  Command command = Command::Verify;
  std::string source;  // zoo spec or "file:<path>"; empty for zoo-list
  std::optional<std::size_t> eps_max;  // defaults to n
  std::size_t brute_cap = kDefaultBruteCap;
  std::uint64_t seed = 0;
  Format format = Format::Json;
  bool allow_large = false;
};

/// A group with the generators of its subgroup H, from either source.
struct LoadedGroup {
  FiniteGroup group;
  std::vector<Permutation> subgroup_gens;
  std::string description;
};

/// "file:<path>" reads the JSON group file, anything else is a zoo spec.
/// Malformed input raises ParseError.
LoadedGroup load_group(std::string_view source, const ZooOptions& options = {});

/// Parses the group file schema
///   {"degree": d, "group_generators": [[...], ...], "subgroup_generators": [[...], ...]}
/// with 0-based image arrays.
LoadedGroup parse_group_json(std::string_view text);

struct GroupSummary {
  std::string source;
  std::string description;
  std::uint64_t order = 0;
  std::size_t n = 0;
  std::size_t h = 0;
  std::size_t classes = 0;

  friend bool operator==(const GroupSummary&, const GroupSummary&) = default;
};

struct Parameters {
  std::size_t eps_max = 0;
  std::size_t brute_cap = 0;
  std::uint64_t seed = 0;

  friend bool operator==(const Parameters&, const Parameters&) = default;
};

struct Report {
  std::string version;
  std::string command;
  std::optional<GroupSummary> group;
  std::optional<Parameters> parameters;
  std::vector<IdentityReport> checks;
  std::optional<OrbitTable> orbits;
  std::optional<TransitivityCertificate> certificate;
  std::vector<ZooEntry> zoo;
  std::uint64_t elapsed_ms = 0;

  friend bool operator==(const Report& a, const Report& b);
};

std::string version();

/// Executes the command. Module errors propagate as exceptions.
Report run(const RunConfig& config);

/// 0 when no check failed, 1 otherwise.
int exit_code(const Report& report);

nlohmann::json to_json(const Report& report);
Report report_from_json(const nlohmann::json& j);

/// Canonical serialization: sorted keys, two-space indent, trailing newline.
std::string render_json(const Report& report);
std::string render_text(const Report& report);

std::string_view status_name(CheckStatus s);

}  // namespace cmred::app
