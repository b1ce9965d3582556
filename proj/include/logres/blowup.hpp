#pragma once

#include <map>
#include <optional>
#include <set>
#include <string>
#include <vector>

#include "json.hpp"

#include "logres/monomial_ideal.hpp"
#include "logres/polynomial.hpp"

namespace logres {

struct ExceptionalDivisor {
  std::string label;
  std::string variable;
  friend bool operator==(const ExceptionalDivisor&, const ExceptionalDivisor&) = default;
};

/// Affine chart of an iterated blow-up. Substituted variables carry a
/// trailing prime, so x2 becomes x2' in the x1-direction.
struct Chart {
  std::string id;
  VariableList variables;
  std::set<std::string> log_marked;
  VariableList parent_variables;
  VariableList root_variables;
  std::map<std::string, Polynomial> to_parent;  // parent variable -> monomial here
  std::map<std::string, Polynomial> to_root;    // root variable -> monomial here
  std::vector<ExceptionalDivisor> exceptional;
  std::optional<std::string> parent;
  std::optional<std::string> direction;  // exceptional variable of the last blow-up

  static Chart root(VariableList vars, std::set<std::string> log_marked = {}, std::string id = "0");

  bool has_variable(const std::string& v) const;
};

/// One child per center variable x_j, in chart order: x_k -> x_j*x_k' for the
/// other center variables. The new divisor is labelled `label` and cut out
/// by x_j. Throws CenterNotInChart, CodimensionOne.
std::vector<Chart> blow_up_center(const Chart& chart, const SimpleVariety& center, const std::string& label);

struct IdealTransform {
  MonomialIdeal total;
  std::map<std::string, unsigned> exceptional_multiplicities;
  MonomialIdeal strict;
};

/// Pulls J (over the parent's or the root's variables) back to `chart` and
/// divides out the largest common power of every exceptional variable.
IdealTransform transform_ideal(const Chart& chart, const MonomialIdeal& J);

/// Strict transform of a simple variety of the parent chart, i.e. the
/// saturation of its pulled-back prime by the new exceptional variable.
/// Empty when the variety does not meet the chart.
std::optional<SimpleVariety> strict_transform_variety(const Chart& child, const SimpleVariety& V);

/// Same, for a variety given over the root chart: its ideal is pulled back
/// along to_root and saturated by every exceptional variable.
std::optional<SimpleVariety> strict_transform_from_root(const Chart& chart, const SimpleVariety& V);

struct StageEntry {
  std::string chart;
  std::string label;
  SimpleVariety center;
};

/// The blow-up tree.
class Atlas {
 public:
  Atlas() = default;
  explicit Atlas(Chart root);

  const Chart& root() const { return charts_.front(); }
  const std::vector<Chart>& charts() const { return charts_; }
  const Chart& chart(const std::string& id) const;
  const std::vector<std::string>& children(const std::string& id) const;
  std::vector<const Chart*> leaves() const;

  void add_children(const std::string& parent, const std::vector<Chart>& kids);
  void log_stage(std::size_t stage, std::vector<StageEntry> entries);
  const std::vector<std::pair<std::size_t, std::vector<StageEntry>>>& stage_log() const { return stage_log_; }

  nlohmann::json to_json() const;

 private:
  std::vector<Chart> charts_;
  std::map<std::string, std::size_t> index_;
  std::map<std::string, std::vector<std::string>> children_;
  std::vector<std::pair<std::size_t, std::vector<StageEntry>>> stage_log_;
};

nlohmann::json chart_to_json(const Chart& c);

inline constexpr int kSchemaVersion = 1;

}  // namespace logres
