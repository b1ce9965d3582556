#pragma once

#include <set>
#include <string>
#include <vector>

#include "json.hpp"

#include "logres/blowup.hpp"
#include "logres/monomial_ideal.hpp"

namespace logres {

struct Member {
  unsigned index = 0;
  std::string label;
  SimpleVariety variety;
};

/// Indexed family of simple varieties in one chart. The index range is
/// declared, not inferred, so a chart that happens to miss the low indices
/// still blows up in step with its siblings.
struct CompatibleSystem {
  Chart chart;
  std::vector<Member> members;
  unsigned lowest = 1;
  unsigned highest = 0;

  /// Range taken from the members (empty system: length 0).
  static CompatibleSystem make(Chart chart, std::vector<Member> members);

  unsigned length() const { return highest >= lowest ? highest - lowest + 1 : 0; }
  MonomialIdeal ideal() const;
};

struct ValidationReport {
  bool valid = true;
  std::vector<std::string> violations;
};

/// Chart-level form of the compatibility conditions. Two visible simple
/// varieties always meet at the origin, so every same-index pair needs a
/// strictly lower member containing the intersection; the union's ideal must
/// have the simple shape with the members as its components.
ValidationReport validate_compatible_system(const CompatibleSystem& s);

enum class ResolutionMode { canonical, minimal };
std::string to_string(ResolutionMode m);

struct ResolutionResult {
  Atlas atlas;
  ResolutionMode mode = ResolutionMode::canonical;
  unsigned stages = 0;
  /// per_stage_systems[s] holds one system per leaf chart after stage s+1.
  std::vector<std::vector<CompatibleSystem>> per_stage_systems;
  std::vector<bool> per_stage_valid;

  nlohmann::json to_json() const;
};

/// Blows up the lowest-index members stage by stage. Throws InvalidSystem
/// when the input fails validation or a chart sees two centers at once.
ResolutionResult resolve_system(const CompatibleSystem& s, ResolutionMode mode);

/// Y ∩ Z for the slice Z = V(zeroed), as a system in Z's coordinates.
/// Throws NonTransverseSlice.
CompatibleSystem restrict_system(const CompatibleSystem& s, const std::set<std::string>& zeroed);

/// Checks the subsystem condition for the members at `sub` (positions in
/// s.members), then whether the canonical resolution makes the sub-ideal
/// principal in every leaf. Throws NotSubsystem.
bool verify_subsystem_resolution(const CompatibleSystem& s, const std::vector<std::size_t>& sub);

/// Resolution of the restriction against the restriction of the resolution.
struct FunctorialityReport {
  bool equal = true;
  std::size_t compared_charts = 0;
  std::vector<std::string> mismatches;
};
FunctorialityReport compare_functoriality(const CompatibleSystem& s, const std::set<std::string>& zeroed,
                                          ResolutionMode mode);

nlohmann::json system_to_json(const CompatibleSystem& s);

}  // namespace logres
