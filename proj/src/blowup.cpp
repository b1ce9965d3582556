#include "logres/blowup.hpp"

#include <algorithm>

#include "logres/errors.hpp"

namespace logres {

Chart Chart::root(VariableList vars, std::set<std::string> log_marked, std::string id) {
  Chart c;
  c.id = std::move(id);
  c.variables = vars;
  c.log_marked = std::move(log_marked);
  c.parent_variables = vars;
  c.root_variables = vars;
  for (const auto& v : vars) {
    c.to_parent.emplace(v, Polynomial::variable(v, vars));
    c.to_root.emplace(v, Polynomial::variable(v, vars));
  }
  return c;
}

bool Chart::has_variable(const std::string& v) const {
  return std::find(variables.begin(), variables.end(), v) != variables.end();
}

std::vector<Chart> blow_up_center(const Chart& chart, const SimpleVariety& center, const std::string& label) {
  for (const auto& v : center.vanishing_set()) {
    if (!chart.has_variable(v)) throw CenterNotInChart(center.to_string(chart.variables) + " in chart " + chart.id);
  }
  if (center.codimension() < 2) throw CodimensionOne(center.to_string(chart.variables));

  const bool center_log = std::any_of(center.vanishing_set().begin(), center.vanishing_set().end(),
                                      [&](const std::string& v) { return chart.log_marked.count(v) > 0; });
  std::vector<Chart> out;
  for (std::size_t pos = 0; pos < chart.variables.size(); ++pos) {
    const std::string& xj = chart.variables[pos];
    if (!center.vanishing_set().count(xj)) continue;

    Chart child;
    child.id = chart.id + "." + std::to_string(pos + 1);
    child.parent = chart.id;
    child.direction = xj;
    child.parent_variables = chart.variables;
    child.root_variables = chart.root_variables;

    std::map<std::string, std::string> rename;
    for (const auto& v : chart.variables) {
      const bool substituted = center.vanishing_set().count(v) && v != xj;
      rename[v] = substituted ? v + "'" : v;
      child.variables.push_back(rename[v]);
    }
    for (const auto& v : chart.variables) {
      Polynomial image = Polynomial::variable(rename[v], child.variables);
      if (rename[v] != v) image *= Polynomial::variable(xj, child.variables);
      child.to_parent.emplace(v, image);
      if (chart.log_marked.count(v)) child.log_marked.insert(rename[v]);
    }
    if (center_log) child.log_marked.insert(xj);

    for (const auto& [rv, mono] : chart.to_root) {
      child.to_root.emplace(rv, substitute(mono, child.to_parent, child.variables));
    }
    for (const auto& e : chart.exceptional) {
      if (e.variable == xj) continue;
      child.exceptional.push_back({e.label, rename[e.variable]});
    }
    child.exceptional.push_back({label, xj});
    out.push_back(std::move(child));
  }
  return out;
}

IdealTransform transform_ideal(const Chart& chart, const MonomialIdeal& J) {
  const auto same = [](const VariableList& a, const VariableList& b) {
    return std::set<std::string>(a.begin(), a.end()) == std::set<std::string>(b.begin(), b.end());
  };
  const std::map<std::string, Polynomial>* map = nullptr;
  if (same(J.variables(), chart.parent_variables)) map = &chart.to_parent;
  else if (same(J.variables(), chart.root_variables)) map = &chart.to_root;
  else throw MixedVariableSets("ideal is over neither the parent nor the root of chart " + chart.id);

  IdealTransform t{J.substitute(*map, chart.variables), {}, {}};
  MonomialIdeal rest = t.total;
  for (const auto& e : chart.exceptional) {
    auto [power, quotient] = rest.divide_common(e.variable);
    t.exceptional_multiplicities[e.label] = power;
    rest = quotient;
  }
  t.strict = rest;
  return t;
}

namespace {

std::optional<SimpleVariety> variety_of(const MonomialIdeal& I) {
  if (I.is_unit()) return std::nullopt;
  std::set<std::string> vanishing;
  for (const auto& g : I.generators()) {
    if (total_degree(g) != 1) throw InvalidArgument("strict transform is not a coordinate subspace: " + I.to_string());
    for (std::size_t i = 0; i < g.size(); ++i) {
      if (g[i]) vanishing.insert(I.variables()[i]);
    }
  }
  return SimpleVariety(std::move(vanishing));
}

}  // namespace

std::optional<SimpleVariety> strict_transform_variety(const Chart& child, const SimpleVariety& V) {
  if (!child.direction) return V;
  const MonomialIdeal pulled = V.ideal(child.parent_variables).substitute(child.to_parent, child.variables);
  return variety_of(pulled.saturate(*child.direction));
}

std::optional<SimpleVariety> strict_transform_from_root(const Chart& chart, const SimpleVariety& V) {
  MonomialIdeal I = V.ideal(chart.root_variables).substitute(chart.to_root, chart.variables);
  for (const auto& e : chart.exceptional) I = I.saturate(e.variable);
  return variety_of(I);
}

// ---------------------------------------------------------------- Atlas

Atlas::Atlas(Chart root) {
  index_.emplace(root.id, 0);
  charts_.push_back(std::move(root));
}

const Chart& Atlas::chart(const std::string& id) const {
  auto it = index_.find(id);
  if (it == index_.end()) throw InvalidArgument("no chart '" + id + "'");
  return charts_[it->second];
}

const std::vector<std::string>& Atlas::children(const std::string& id) const {
  static const std::vector<std::string> none;
  auto it = children_.find(id);
  return it == children_.end() ? none : it->second;
}

std::vector<const Chart*> Atlas::leaves() const {
  std::vector<const Chart*> out;
  for (const auto& c : charts_) {
    if (children(c.id).empty()) out.push_back(&c);
  }
  return out;
}

void Atlas::add_children(const std::string& parent, const std::vector<Chart>& kids) {
  auto& list = children_[parent];
  for (const auto& k : kids) {
    if (index_.count(k.id)) throw InvalidArgument("duplicate chart id '" + k.id + "'");
    index_.emplace(k.id, charts_.size());
    list.push_back(k.id);
    charts_.push_back(k);
  }
}

void Atlas::log_stage(std::size_t stage, std::vector<StageEntry> entries) {
  stage_log_.emplace_back(stage, std::move(entries));
}

nlohmann::json chart_to_json(const Chart& c) {
  nlohmann::json j;
  j["id"] = c.id;
  j["variables"] = c.variables;
  j["log_marked"] = c.log_marked;
  j["parent"] = c.parent ? nlohmann::json(*c.parent) : nlohmann::json(nullptr);
  nlohmann::json tp = nlohmann::json::object();
  for (const auto& [k, v] : c.to_parent) tp[k] = v.to_string();
  j["to_parent"] = tp;
  nlohmann::json tr = nlohmann::json::object();
  for (const auto& [k, v] : c.to_root) tr[k] = v.to_string();
  j["to_root"] = tr;
  nlohmann::json ex = nlohmann::json::array();
  for (const auto& e : c.exceptional) ex.push_back({{"label", e.label}, {"variable", e.variable}});
  j["exceptional"] = ex;
  return j;
}

nlohmann::json Atlas::to_json() const {
  nlohmann::json j;
  j["schema_version"] = kSchemaVersion;
  nlohmann::json charts = nlohmann::json::array();
  for (const auto& c : charts_) {
    nlohmann::json cj = chart_to_json(c);
    cj["children"] = children(c.id);
    charts.push_back(cj);
  }
  j["charts"] = charts;
  nlohmann::json stages = nlohmann::json::array();
  for (const auto& [stage, entries] : stage_log_) {
    nlohmann::json centers = nlohmann::json::array();
    for (const auto& e : entries) {
      centers.push_back({{"chart", e.chart}, {"label", e.label},
                         {"center", e.center.to_string(chart(e.chart).variables)}});
    }
    stages.push_back({{"stage", stage}, {"centers", centers}});
  }
  j["stage_log"] = stages;
  return j;
}

}  // namespace logres
