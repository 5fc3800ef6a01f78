#pragma once

#include <cmred/finite_group.hpp>
#include <cmred/permutation.hpp>

#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

namespace cmred {

enum class ZooFamily {
  Sym,
  Alt,
  Cyclic,
  Dihedral,
  Psl2,
  Pgl2,
  Psl3,
  Pgl3,
  Sp4f2,
  Sp6f2,
  Psu3,
  Pgu3,
};

/// A named group from the built-in catalog, "family:parameter".
/// The sp families take a sign, every other family an integer.
struct ZooSpec {
  ZooFamily family = ZooFamily::Sym;
  int parameter = 0;  // n, q, or +1 / -1 for the sign

  std::string to_string() const;
  friend bool operator==(const ZooSpec&, const ZooSpec&) = default;
};

/// Throws ParseError (with the offending character offset) for unknown
/// families and malformed or out-of-range parameters.
ZooSpec parse_zoo_spec(std::string_view text);

struct ZooOptions {
  /// Sp_6(F_2) is only built when set.
  bool allow_large = false;
  GroupLimits limits{};
};

struct ZooGroup {
  ZooSpec spec;
  FiniteGroup group;
  /// Generators of the stabilizer of point 0.
  std::vector<Permutation> subgroup_gens;
  /// Order obtained by a count that does not go through `group`.
  std::uint64_t independent_order = 0;
  std::string description;
};

/// Builds the permutation group and the stabilizer of point 0.
/// Throws UnsupportedParameter for gated specs and std::logic_error when
/// the group order disagrees with the independent count.
ZooGroup build_zoo_group(const ZooSpec& spec, const ZooOptions& options = {});

struct ZooEntry {
  std::string spec;
  std::string description;
  bool large = false;

  friend bool operator==(const ZooEntry&, const ZooEntry&) = default;
};

/// Representative specs with a one-line description, in display order.
std::vector<ZooEntry> zoo_catalog();

}  // namespace cmred
