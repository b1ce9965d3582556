#include "logres/resolution.hpp"

#include <algorithm>
#include <map>
#include <sstream>

#include "logres/errors.hpp"
#include "logres/parallel.hpp"

namespace logres {

CompatibleSystem CompatibleSystem::make(Chart chart, std::vector<Member> members) {
  CompatibleSystem s{std::move(chart), std::move(members), 1, 0};
  if (!s.members.empty()) {
    s.lowest = s.members.front().index;
    s.highest = s.members.front().index;
    for (const auto& m : s.members) {
      s.lowest = std::min(s.lowest, m.index);
      s.highest = std::max(s.highest, m.index);
    }
  }
  return s;
}

MonomialIdeal CompatibleSystem::ideal() const {
  std::vector<SimpleVariety> vs;
  for (const auto& m : members) vs.push_back(m.variety);
  return ideal_of_union(vs, chart.variables);
}

namespace {

std::string describe(const Member& m, const VariableList& vars) {
  return "(" + std::to_string(m.index) + "," + m.label + ") " + m.variety.to_string(vars);
}

// Some member of index < bound whose variety contains V(A ∪ B).
bool lower_container(const std::vector<Member>& members, unsigned bound, const SimpleVariety& meet) {
  return std::any_of(members.begin(), members.end(),
                     [&](const Member& c) { return c.index < bound && c.variety.contains(meet); });
}

}  // namespace

ValidationReport validate_compatible_system(const CompatibleSystem& s) {
  ValidationReport r;
  const auto& ms = s.members;
  for (const auto& m : ms) {
    for (const auto& v : m.variety.vanishing_set()) {
      if (!s.chart.has_variable(v)) {
        r.violations.push_back("member " + describe(m, s.chart.variables) + " uses unknown variable " + v);
      }
    }
    if (m.index < s.lowest || m.index > s.highest) {
      r.violations.push_back("member " + describe(m, s.chart.variables) + " outside the index range");
    }
  }
  if (!r.violations.empty()) {
    r.valid = false;
    return r;
  }
  for (std::size_t a = 0; a < ms.size(); ++a) {
    for (std::size_t b = a + 1; b < ms.size(); ++b) {
      if (ms[a].index != ms[b].index) continue;
      const SimpleVariety meet = ms[a].variety.intersect(ms[b].variety);
      if (!lower_container(ms, ms[a].index, meet)) {
        r.violations.push_back("condition (i): " + describe(ms[a], s.chart.variables) + " and " +
                               describe(ms[b], s.chart.variables) + " meet outside every lower member");
      }
    }
  }
  if (!ms.empty()) {
    const MonomialIdeal J = s.ideal();
    if (!J.is_simple()) {
      r.violations.push_back("condition (ii): ideal " + J.to_string() + " is not simple");
    } else {
      // a member buried inside another is not a component, and blowing it
      // up would not split off an exceptional factor
      const auto parts = decompose_simple_ideal(J);
      for (const auto& m : ms) {
        if (std::find(parts.begin(), parts.end(), m.variety) == parts.end()) {
          r.violations.push_back("condition (ii): member " + describe(m, s.chart.variables) +
                                 " is not a component of V(" + J.to_string() + ")");
        }
      }
    }
  }
  r.valid = r.violations.empty();
  return r;
}

std::string to_string(ResolutionMode m) { return m == ResolutionMode::canonical ? "canonical" : "minimal"; }

namespace {

struct ChartStep {
  std::vector<Chart> children;
  std::vector<CompatibleSystem> systems;
  std::optional<StageEntry> entry;
};

ChartStep advance(const CompatibleSystem& sys, unsigned stage, unsigned idx) {
  ChartStep step;
  std::vector<const Member*> centers;
  for (const auto& m : sys.members) {
    if (m.index == idx) centers.push_back(&m);
  }
  if (centers.size() > 1) {
    throw InvalidSystem("chart " + sys.chart.id + " has " + std::to_string(centers.size()) +
                        " centers of index " + std::to_string(idx));
  }
  if (centers.empty()) {
    CompatibleSystem next = sys;
    next.lowest = idx + 1;
    next.members.erase(std::remove_if(next.members.begin(), next.members.end(),
                                      [&](const Member& m) { return m.index <= idx; }),
                       next.members.end());
    step.systems.push_back(std::move(next));
    return step;
  }
  const Member& center = *centers.front();
  const std::string label = "E" + std::to_string(stage) + "." + center.label;
  step.children = blow_up_center(sys.chart, center.variety, label);
  step.entry = StageEntry{sys.chart.id, label, center.variety};
  for (const auto& child : step.children) {
    CompatibleSystem next{child, {}, idx + 1, sys.highest};
    for (const auto& m : sys.members) {
      if (m.index <= idx) continue;
      auto strict = strict_transform_variety(child, m.variety);
      if (strict) next.members.push_back({m.index, m.label, *strict});
    }
    step.systems.push_back(std::move(next));
  }
  return step;
}

}  // namespace

ResolutionResult resolve_system(const CompatibleSystem& s, ResolutionMode mode) {
  const auto report = validate_compatible_system(s);
  if (!report.valid) throw InvalidSystem(report.violations.front());

  ResolutionResult result;
  result.atlas = Atlas(s.chart);
  result.mode = mode;
  const unsigned len = s.length();
  result.stages = mode == ResolutionMode::canonical ? len : (len > 0 ? len - 1 : 0);

  std::vector<CompatibleSystem> current{s};
  for (unsigned stage = 1; stage <= result.stages; ++stage) {
    const unsigned idx = s.lowest + stage - 1;
    auto steps = parallel_map<ChartStep>(current.size(), [&](std::size_t i) { return advance(current[i], stage, idx); });
    std::vector<CompatibleSystem> next;
    std::vector<StageEntry> entries;
    for (auto& st : steps) {
      if (st.entry) {
        result.atlas.add_children(st.entry->chart, st.children);
        entries.push_back(*st.entry);
      }
      for (auto& sys : st.systems) next.push_back(std::move(sys));
    }
    result.atlas.log_stage(stage, std::move(entries));
    bool ok = true;
    for (const auto& sys : next) ok = ok && validate_compatible_system(sys).valid;
    result.per_stage_valid.push_back(ok);
    result.per_stage_systems.push_back(next);
    current = std::move(next);
  }
  return result;
}

CompatibleSystem restrict_system(const CompatibleSystem& s, const std::set<std::string>& zeroed) {
  for (const auto& z : zeroed) {
    if (!s.chart.has_variable(z)) throw NonTransverseSlice("slice variable " + z + " not in chart");
  }
  VariableList vars;
  for (const auto& v : s.chart.variables) {
    if (!zeroed.count(v)) vars.push_back(v);
  }
  std::set<std::string> log_marked;
  for (const auto& v : s.chart.log_marked) {
    if (!zeroed.count(v)) log_marked.insert(v);
  }
  CompatibleSystem out{Chart::root(vars, log_marked, s.chart.id), {}, s.lowest, s.highest};
  for (const auto& m : s.members) {
    std::set<std::string> left;
    for (const auto& v : m.variety.vanishing_set()) {
      if (!zeroed.count(v)) left.insert(v);
    }
    if (left.empty()) {
      throw NonTransverseSlice("member " + describe(m, s.chart.variables) + " contains the slice");
    }
    out.members.push_back({m.index, m.label, SimpleVariety(std::move(left))});
  }
  const auto report = validate_compatible_system(out);
  if (!report.valid) throw NonTransverseSlice("restricted system is not compatible: " + report.violations.front());
  return out;
}

bool verify_subsystem_resolution(const CompatibleSystem& s, const std::vector<std::size_t>& sub) {
  std::set<std::size_t> in_sub(sub.begin(), sub.end());
  std::vector<Member> sub_members;
  for (auto i : in_sub) {
    if (i >= s.members.size()) throw NotSubsystem("member position " + std::to_string(i) + " out of range");
    sub_members.push_back(s.members[i]);
  }
  CompatibleSystem subsystem{s.chart, sub_members, s.lowest, s.highest};
  if (!sub_members.empty()) {
    subsystem.highest = 0;
    for (const auto& m : sub_members) subsystem.highest = std::max(subsystem.highest, m.index);
  }
  const auto report = validate_compatible_system(subsystem);
  if (!report.valid) throw NotSubsystem("not compatible: " + report.violations.front());

  const unsigned b = subsystem.highest;
  for (std::size_t j = 0; j < s.members.size(); ++j) {
    if (in_sub.count(j)) continue;
    const Member& y = s.members[j];
    if (y.index > b) continue;
    for (const auto& k : sub_members) {
      if (k.index < y.index) continue;
      const SimpleVariety meet = y.variety.intersect(k.variety);
      if (!lower_container(sub_members, y.index, meet)) {
        throw NotSubsystem(describe(y, s.chart.variables) + " meets " + describe(k, s.chart.variables) +
                           " outside every lower member of the subsystem");
      }
    }
  }

  const ResolutionResult res = resolve_system(s, ResolutionMode::canonical);
  const MonomialIdeal J = subsystem.ideal();
  for (const Chart* leaf : res.atlas.leaves()) {
    if (!transform_ideal(*leaf, J).total.is_principal()) return false;
  }
  return true;
}

namespace {

std::string chart_signature(const VariableList& vars, const std::set<std::string>& log_marked,
                            const std::map<std::string, std::string>& to_root,
                            const std::vector<ExceptionalDivisor>& exceptional) {
  std::ostringstream os;
  os << "vars[";
  for (const auto& v : vars) os << v << (log_marked.count(v) ? "*" : "") << ";";
  os << "] root[";
  for (const auto& [k, v] : to_root) os << k << "->" << v << ";";
  os << "] exc[";
  std::vector<std::string> ex;
  for (const auto& e : exceptional) ex.push_back(e.label + ":" + e.variable);
  std::sort(ex.begin(), ex.end());
  for (const auto& e : ex) os << e << ";";
  os << "]";
  return os.str();
}

}  // namespace

FunctorialityReport compare_functoriality(const CompatibleSystem& s, const std::set<std::string>& zeroed,
                                          ResolutionMode mode) {
  FunctorialityReport rep;
  const CompatibleSystem small = restrict_system(s, zeroed);
  const ResolutionResult big_res = resolve_system(s, mode);
  const ResolutionResult small_res = resolve_system(small, mode);

  std::multiset<std::string> big_sigs, small_sigs;
  const SimpleVariety Z(zeroed);
  for (const Chart* leaf : big_res.atlas.leaves()) {
    const auto Zt = zeroed.empty() ? std::optional<SimpleVariety>(SimpleVariety{}) : strict_transform_from_root(*leaf, Z);
    if (!Zt) continue;
    const auto& W = Zt->vanishing_set();
    VariableList vars;
    std::set<std::string> log_marked;
    for (const auto& v : leaf->variables) {
      if (W.count(v)) continue;
      vars.push_back(v);
      if (leaf->log_marked.count(v)) log_marked.insert(v);
    }
    std::map<std::string, Rational> zero_point;
    for (const auto& w : W) zero_point.emplace(w, Rational(0));
    std::map<std::string, std::string> to_root;
    for (const auto& [rv, mono] : leaf->to_root) {
      if (zeroed.count(rv)) continue;
      const Polynomial restricted = mono.partial_evaluate(zero_point);
      if (restricted.is_zero()) {
        rep.mismatches.push_back("chart " + leaf->id + ": " + rv + " restricts to zero");
      }
      to_root[rv] = restricted.embed(vars).to_string();
    }
    std::vector<ExceptionalDivisor> ex;
    for (const auto& e : leaf->exceptional) {
      if (!W.count(e.variable)) ex.push_back(e);
    }
    big_sigs.insert(chart_signature(vars, log_marked, to_root, ex));
    ++rep.compared_charts;
  }
  for (const Chart* leaf : small_res.atlas.leaves()) {
    std::map<std::string, std::string> to_root;
    for (const auto& [rv, mono] : leaf->to_root) to_root[rv] = mono.to_string();
    small_sigs.insert(chart_signature(leaf->variables, leaf->log_marked, to_root, leaf->exceptional));
  }
  if (big_sigs != small_sigs) {
    for (const auto& sig : big_sigs) {
      if (!small_sigs.count(sig)) rep.mismatches.push_back("only in restricted resolution: " + sig);
    }
    for (const auto& sig : small_sigs) {
      if (!big_sigs.count(sig)) rep.mismatches.push_back("only in resolution of restriction: " + sig);
    }
  }
  rep.equal = rep.mismatches.empty();
  return rep;
}

nlohmann::json system_to_json(const CompatibleSystem& s) {
  nlohmann::json members = nlohmann::json::array();
  for (const auto& m : s.members) {
    members.push_back({{"index", m.index}, {"label", m.label}, {"variety", m.variety.to_string(s.chart.variables)}});
  }
  return {{"chart", s.chart.id}, {"lowest", s.lowest}, {"highest", s.highest}, {"members", members}};
}

nlohmann::json ResolutionResult::to_json() const {
  nlohmann::json j;
  j["schema_version"] = kSchemaVersion;
  j["mode"] = to_string(mode);
  j["stages"] = stages;
  j["atlas"] = atlas.to_json();
  nlohmann::json per = nlohmann::json::array();
  for (std::size_t s = 0; s < per_stage_systems.size(); ++s) {
    nlohmann::json systems = nlohmann::json::array();
    for (const auto& sys : per_stage_systems[s]) systems.push_back(system_to_json(sys));
    per.push_back({{"stage", s + 1}, {"compatible", static_cast<bool>(per_stage_valid[s])}, {"systems", systems}});
  }
  j["per_stage_systems"] = per;
  return j;
}

}  // namespace logres
