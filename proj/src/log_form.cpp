#include "logres/log_form.hpp"

#include <algorithm>
#include <sstream>

#include "logres/errors.hpp"

namespace logres {

namespace {

// Name of the coordinate cut out by `eq`, or empty if eq is not a bare variable.
std::string coordinate_of(const Polynomial& eq) {
  if (!eq.is_monomial() || eq.degree() != 1) return {};
  const auto [e, c] = eq.leading_term();
  if (!c.is_one()) return {};
  return eq.support().front();
}

}  // namespace

bool LogFrame::is_log_coordinate(const std::string& var) const {
  return std::any_of(poles.begin(), poles.end(), [&](const Pole& p) { return coordinate_of(p.equation) == var; });
}

const Pole* LogFrame::pole(const std::string& label) const {
  for (const auto& p : poles) {
    if (p.label == label) return &p;
  }
  return nullptr;
}

LogFrame LogFrame::coordinates(std::string chart_id, VariableList vars, const VariableList& log_marked) {
  LogFrame f{std::move(chart_id), std::move(vars), {}};
  for (const auto& v : log_marked) f.poles.push_back({v, Polynomial::variable(v, f.variables)});
  return f;
}

LogForm::LogForm(LogFrame frame) : frame_(std::move(frame)) {}

Polynomial LogForm::holomorphic(const std::string& var) const {
  auto it = holomorphic_.find(var);
  return it == holomorphic_.end() ? Polynomial(frame_.variables) : it->second;
}

Polynomial LogForm::log(const std::string& pole) const {
  auto it = log_.find(pole);
  return it == log_.end() ? Polynomial(frame_.variables) : it->second;
}

void LogForm::add_holomorphic(const std::string& var, const Polynomial& coeff) {
  if (std::find(frame_.variables.begin(), frame_.variables.end(), var) == frame_.variables.end()) {
    throw InvalidArgument("d" + var + " is not in the frame");
  }
  auto [it, inserted] = holomorphic_.emplace(var, coeff);
  if (!inserted) it->second += coeff;
  normalize();
}

void LogForm::add_log(const std::string& pole, const Polynomial& coeff) {
  if (!frame_.pole(pole)) throw ComponentNotLogMarked("'" + pole + "' is not a pole of the frame");
  auto [it, inserted] = log_.emplace(pole, coeff);
  if (!inserted) it->second += coeff;
  normalize();
}

void LogForm::normalize() {
  for (const auto& p : frame_.poles) {
    const std::string v = coordinate_of(p.equation);
    if (v.empty()) continue;
    auto it = holomorphic_.find(v);
    if (it == holomorphic_.end()) continue;
    Polynomial folded = it->second * p.equation;
    holomorphic_.erase(it);
    auto [lt, inserted] = log_.emplace(p.label, folded);
    if (!inserted) lt->second += folded;
  }
  for (auto it = holomorphic_.begin(); it != holomorphic_.end();) {
    it = it->second.is_zero() ? holomorphic_.erase(it) : std::next(it);
  }
  for (auto it = log_.begin(); it != log_.end();) {
    it = it->second.is_zero() ? log_.erase(it) : std::next(it);
  }
}

LogForm LogForm::differential(const LogFrame& frame, const Polynomial& f) {
  LogForm out(frame);
  for (const auto& v : frame.variables) {
    Polynomial d = f.derivative(v);
    if (!d.is_zero()) out.holomorphic_.emplace(v, d);
  }
  out.normalize();
  return out;
}

LogForm LogForm::log_connection(const LogFrame& frame, const Polynomial& s, const std::string& pole) {
  LogForm out = differential(frame, s);
  out.add_log(pole, -s);
  return out;
}

bool LogForm::is_zero() const { return holomorphic_.empty() && log_.empty(); }

LogForm& LogForm::operator+=(const LogForm& o) {
  for (const auto& [k, c] : o.holomorphic_) {
    auto [it, inserted] = holomorphic_.emplace(k, c);
    if (!inserted) it->second += c;
  }
  for (const auto& [k, c] : o.log_) {
    auto [it, inserted] = log_.emplace(k, c);
    if (!inserted) it->second += c;
  }
  normalize();
  return *this;
}

LogForm& LogForm::operator*=(const Polynomial& f) {
  for (auto& [k, c] : holomorphic_) c *= f;
  for (auto& [k, c] : log_) c *= f;
  normalize();
  return *this;
}

bool operator==(const LogForm& a, const LogForm& b) {
  auto same = [](const std::map<std::string, Polynomial>& x, const std::map<std::string, Polynomial>& y) {
    if (x.size() != y.size()) return false;
    for (const auto& [k, c] : x) {
      auto it = y.find(k);
      if (it == y.end() || !(it->second == c)) return false;
    }
    return true;
  };
  return same(a.holomorphic_, b.holomorphic_) && same(a.log_, b.log_);
}

Polynomial LogForm::contract(const std::map<std::string, Polynomial>& components) const {
  Polynomial out(frame_.variables);
  auto component = [&](const std::string& key) {
    auto it = components.find(key);
    return it == components.end() ? Polynomial(frame_.variables) : it->second;
  };
  for (const auto& [v, c] : holomorphic_) out += c * component(v);
  for (const auto& [label, beta] : log_) {
    const std::string v = coordinate_of(frame_.pole(label)->equation);
    if (v.empty()) throw InvalidArgument("contraction needs coordinate poles, '" + label + "' is not one");
    out += beta * component(v);
  }
  return out;
}

LogForm::Cleared LogForm::expand_cleared() const {
  Cleared out{Polynomial::constant(1, frame_.variables), {}};
  std::vector<const Pole*> used;
  for (const auto& [label, beta] : log_) used.push_back(frame_.pole(label));
  for (const auto* p : used) out.denominator *= p->equation;
  for (const auto& v : frame_.variables) out.numerators[v] = holomorphic(v) * out.denominator;
  for (std::size_t i = 0; i < used.size(); ++i) {
    Polynomial others = Polynomial::constant(1, frame_.variables);
    for (std::size_t j = 0; j < used.size(); ++j) {
      if (j != i) others *= used[j]->equation;
    }
    const Polynomial& beta = log_.at(used[i]->label);
    for (const auto& v : frame_.variables) {
      out.numerators[v] += beta * used[i]->equation.derivative(v) * others;
    }
  }
  for (auto it = out.numerators.begin(); it != out.numerators.end();) {
    it = it->second.is_zero() ? out.numerators.erase(it) : std::next(it);
  }
  return out;
}

std::string LogForm::to_string() const {
  if (is_zero()) return "0";
  std::ostringstream os;
  bool first = true;
  auto sep = [&] {
    if (!first) os << " + ";
    first = false;
  };
  for (const auto& p : frame_.poles) {
    auto it = log_.find(p.label);
    if (it == log_.end()) continue;
    sep();
    const std::string v = coordinate_of(p.equation);
    os << "(" << it->second.to_string() << ")";
    if (!v.empty()) os << " d" << v << "/" << v;
    else os << " dlog(" << p.label << ")";
  }
  for (const auto& v : frame_.variables) {
    auto it = holomorphic_.find(v);
    if (it == holomorphic_.end()) continue;
    sep();
    os << "(" << it->second.to_string() << ") d" << v;
  }
  return os.str();
}

}  // namespace logres
