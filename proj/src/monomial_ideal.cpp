#include "logres/monomial_ideal.hpp"

#include <algorithm>
#include <sstream>

#include "logres/errors.hpp"

namespace logres {

namespace {

bool divides(const Exponent& a, const Exponent& b) {
  for (std::size_t i = 0; i < a.size(); ++i) {
    if (a[i] > b[i]) return false;
  }
  return true;
}

Exponent lcm(const Exponent& a, const Exponent& b) {
  Exponent out(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) out[i] = std::max(a[i], b[i]);
  return out;
}

bool generator_order(const Exponent& a, const Exponent& b) {
  const unsigned da = total_degree(a), db = total_degree(b);
  if (da != db) return da < db;
  return a > b;
}

std::string monomial_string(const VariableList& vars, const Exponent& e) {
  std::ostringstream os;
  bool any = false;
  for (std::size_t i = 0; i < e.size(); ++i) {
    if (e[i] == 0) continue;
    if (any) os << "*";
    os << vars[i];
    if (e[i] > 1) os << "^" << e[i];
    any = true;
  }
  return any ? os.str() : "1";
}

bool same_set(const VariableList& a, const VariableList& b) {
  return std::set<std::string>(a.begin(), a.end()) == std::set<std::string>(b.begin(), b.end()) &&
         a.size() == b.size();
}

}  // namespace

// ---------------------------------------------------------------- SimpleVariety

bool SimpleVariety::contains(const SimpleVariety& other) const {
  return std::includes(other.vanishing_.begin(), other.vanishing_.end(), vanishing_.begin(), vanishing_.end());
}

SimpleVariety SimpleVariety::intersect(const SimpleVariety& other) const {
  std::set<std::string> u = vanishing_;
  u.insert(other.vanishing_.begin(), other.vanishing_.end());
  return SimpleVariety(std::move(u));
}

MonomialIdeal SimpleVariety::ideal(const VariableList& vars) const {
  std::vector<Exponent> gens;
  for (const auto& name : vanishing_) {
    auto it = std::find(vars.begin(), vars.end(), name);
    if (it == vars.end()) throw InvalidArgument("variable '" + name + "' not in chart");
    Exponent e(vars.size(), 0);
    e[static_cast<std::size_t>(it - vars.begin())] = 1;
    gens.push_back(e);
  }
  return MonomialIdeal(vars, gens);
}

std::string SimpleVariety::to_string(const VariableList& vars) const {
  std::ostringstream os;
  os << "V(";
  bool first = true;
  for (const auto& v : vars) {
    if (!vanishing_.count(v)) continue;
    os << (first ? "" : ",") << v;
    first = false;
  }
  for (const auto& v : vanishing_) {
    if (std::find(vars.begin(), vars.end(), v) == vars.end()) {
      os << (first ? "" : ",") << v;
      first = false;
    }
  }
  os << ")";
  return os.str();
}

// ---------------------------------------------------------------- MonomialIdeal

MonomialIdeal::MonomialIdeal(VariableList vars, std::vector<Exponent> generators)
    : vars_(std::move(vars)), gens_(std::move(generators)) {
  for (const auto& g : gens_) {
    if (g.size() != vars_.size()) throw InvalidArgument("generator length does not match variables");
  }
  minimalize();
}

MonomialIdeal MonomialIdeal::unit(VariableList vars) {
  const std::size_t n = vars.size();
  return MonomialIdeal(std::move(vars), {Exponent(n, 0)});
}

MonomialIdeal MonomialIdeal::from_strings(VariableList vars, const std::vector<std::string>& gens) {
  std::vector<Exponent> out;
  for (const auto& g : gens) {
    const Polynomial p = Polynomial::parse(g, vars);
    if (!p.is_monomial()) throw ParseError("'" + g + "' is not a monomial");
    out.push_back(p.leading_term().first);
  }
  return MonomialIdeal(std::move(vars), out);
}

void MonomialIdeal::minimalize() {
  std::sort(gens_.begin(), gens_.end(), generator_order);
  gens_.erase(std::unique(gens_.begin(), gens_.end()), gens_.end());
  std::vector<Exponent> kept;
  for (const auto& g : gens_) {
    // kept is degree-sorted, so only earlier entries can divide g
    const bool redundant = std::any_of(kept.begin(), kept.end(), [&](const Exponent& k) { return divides(k, g); });
    if (!redundant) kept.push_back(g);
  }
  gens_ = std::move(kept);
}

bool MonomialIdeal::is_unit() const { return gens_.size() == 1 && total_degree(gens_.front()) == 0; }

bool MonomialIdeal::contains(const Exponent& monomial) const {
  return std::any_of(gens_.begin(), gens_.end(), [&](const Exponent& g) { return divides(g, monomial); });
}

bool MonomialIdeal::contains(const Polynomial& f) const {
  const Polynomial g = f.embed(vars_);
  for (const auto& [e, c] : g.terms()) {
    if (!contains(e)) return false;
  }
  return true;
}

MonomialIdeal MonomialIdeal::embed(const VariableList& target) const {
  if (target == vars_) return *this;
  std::vector<Exponent> out;
  for (const auto& g : gens_) {
    Exponent e(target.size(), 0);
    for (std::size_t i = 0; i < g.size(); ++i) {
      if (g[i] == 0) continue;
      auto it = std::find(target.begin(), target.end(), vars_[i]);
      if (it == target.end()) throw MixedVariableSets("'" + vars_[i] + "' missing from target ring");
      e[static_cast<std::size_t>(it - target.begin())] = g[i];
    }
    out.push_back(e);
  }
  return MonomialIdeal(target, out);
}

MonomialIdeal MonomialIdeal::sum(const MonomialIdeal& other) const {
  if (!same_set(vars_, other.vars_)) throw MixedVariableSets("sum over different rings");
  std::vector<Exponent> gens = gens_;
  const auto rhs = other.embed(vars_);
  gens.insert(gens.end(), rhs.gens_.begin(), rhs.gens_.end());
  return MonomialIdeal(vars_, gens);
}

MonomialIdeal MonomialIdeal::substitute(const std::map<std::string, Polynomial>& assignment,
                                        const VariableList& target) const {
  std::vector<Exponent> out;
  for (const auto& g : gens_) {
    const Polynomial image = logres::substitute(Polynomial::monomial(vars_, g), assignment, target);
    if (!image.is_monomial()) throw InvalidArgument("substitution is not monomial");
    out.push_back(image.leading_term().first);
  }
  return MonomialIdeal(target, out);
}

MonomialIdeal MonomialIdeal::saturate(const std::string& var) const {
  auto it = std::find(vars_.begin(), vars_.end(), var);
  if (it == vars_.end()) return *this;
  const std::size_t idx = static_cast<std::size_t>(it - vars_.begin());
  std::vector<Exponent> out = gens_;
  for (auto& g : out) g[idx] = 0;
  return MonomialIdeal(vars_, out);
}

std::pair<unsigned, MonomialIdeal> MonomialIdeal::divide_common(const std::string& var) const {
  auto it = std::find(vars_.begin(), vars_.end(), var);
  if (it == vars_.end() || gens_.empty()) return {0, *this};
  const std::size_t idx = static_cast<std::size_t>(it - vars_.begin());
  unsigned m = gens_.front()[idx];
  for (const auto& g : gens_) m = std::min(m, g[idx]);
  std::vector<Exponent> out = gens_;
  for (auto& g : out) g[idx] -= m;
  return {m, MonomialIdeal(vars_, out)};
}

std::optional<MonomialIdeal::SimpleShape> MonomialIdeal::simple_shape() const {
  if (gens_.empty() || is_unit()) return std::nullopt;
  SimpleShape shape;
  std::vector<bool> used(vars_.size(), false);
  for (const auto& g : gens_) {
    std::vector<std::size_t> support;
    for (std::size_t i = 0; i < g.size(); ++i) {
      if (g[i] > 1) return std::nullopt;
      if (g[i] == 1) support.push_back(i);
    }
    if (support.size() > 2) return std::nullopt;
    for (auto i : support) {
      if (used[i]) return std::nullopt;
      used[i] = true;
    }
    if (support.size() == 1) shape.singletons.push_back(vars_[support[0]]);
    else shape.pairs.emplace_back(vars_[support[0]], vars_[support[1]]);
  }
  auto pos = [&](const std::string& v) { return std::find(vars_.begin(), vars_.end(), v) - vars_.begin(); };
  std::sort(shape.singletons.begin(), shape.singletons.end(),
            [&](const auto& a, const auto& b) { return pos(a) < pos(b); });
  std::sort(shape.pairs.begin(), shape.pairs.end(),
            [&](const auto& a, const auto& b) { return pos(a.first) < pos(b.first); });
  return shape;
}

std::vector<std::string> MonomialIdeal::to_strings() const {
  std::vector<std::string> out;
  for (const auto& g : gens_) out.push_back(monomial_string(vars_, g));
  return out;
}

std::string MonomialIdeal::to_string() const {
  std::ostringstream os;
  os << "<";
  const auto s = to_strings();
  for (std::size_t i = 0; i < s.size(); ++i) os << (i ? ", " : "") << s[i];
  os << ">";
  return os.str();
}

bool operator==(const MonomialIdeal& a, const MonomialIdeal& b) {
  if (a.vars_ == b.vars_) return a.gens_ == b.gens_;
  if (!same_set(a.vars_, b.vars_)) return false;
  return a.gens_ == b.embed(a.vars_).gens_;
}

MonomialIdeal intersect_monomial_ideals(const std::vector<MonomialIdeal>& ideals) {
  if (ideals.empty()) throw InvalidArgument("intersection of no ideals");
  const VariableList& vars = ideals.front().variables();
  MonomialIdeal acc = ideals.front();
  for (std::size_t k = 1; k < ideals.size(); ++k) {
    if (!same_set(vars, ideals[k].variables())) {
      throw MixedVariableSets("intersection over different rings");
    }
    const MonomialIdeal rhs = ideals[k].embed(vars);
    std::vector<Exponent> gens;
    for (const auto& a : acc.generators()) {
      for (const auto& b : rhs.generators()) gens.push_back(lcm(a, b));
    }
    acc = MonomialIdeal(vars, gens);
  }
  return acc;
}

std::vector<SimpleVariety> decompose_simple_ideal(const MonomialIdeal& J) {
  const auto shape = J.simple_shape();
  if (!shape) throw NotSimpleShape(J.to_string());
  const std::size_t q = shape->pairs.size();
  std::vector<SimpleVariety> out;
  for (std::size_t mask = 0; mask < (std::size_t{1} << q); ++mask) {
    std::set<std::string> v(shape->singletons.begin(), shape->singletons.end());
    for (std::size_t k = 0; k < q; ++k) {
      const auto& [lo, hi] = shape->pairs[k];
      v.insert((mask >> k) & 1u ? lo : hi);
    }
    out.emplace_back(std::move(v));
  }
  return out;
}

MonomialIdeal ideal_of_union(const std::vector<SimpleVariety>& vs, const VariableList& vars) {
  if (vs.empty()) return MonomialIdeal::unit(vars);
  std::vector<MonomialIdeal> primes;
  for (const auto& v : vs) primes.push_back(v.ideal(vars));
  return intersect_monomial_ideals(primes);
}

}  // namespace logres
