#include "logres/residues.hpp"

#include "logres/errors.hpp"

namespace logres {

DivisorArrangement::DivisorArrangement(unsigned n, std::vector<DivisorComponent> components)
    : n_(n), components_(std::move(components)) {
  if (n_ < 1) throw InvalidArgument("need n >= 1");
  for (unsigned j = 0; j <= n_; ++j) x_.push_back("x" + std::to_string(j));
  for (std::size_t i = 0; i < components_.size(); ++i) {
    auto& c = components_[i];
    c.equation = c.equation.embed(x_);
    if (c.equation.is_zero() || c.degree == 0) throw InvalidArgument(label(i) + " must have positive degree");
    for (const auto& [e, coef] : c.equation.terms()) {
      if (total_degree(e) != c.degree) {
        throw InvalidArgument(label(i) + " is not homogeneous of degree " + std::to_string(c.degree));
      }
    }
    for (std::size_t k = 0; k < i; ++k) {
      // proportional equations cut out the same divisor
      const auto& a = components_[k].equation;
      const auto& b = c.equation;
      if (a.num_terms() == b.num_terms() && a * b.leading_term().second == b * a.leading_term().second) {
        throw InvalidArgument(label(i) + " repeats " + label(k));
      }
    }
  }
}

DivisorArrangement DivisorArrangement::from_strings(unsigned n, const std::vector<std::string>& equations) {
  VariableList x;
  for (unsigned j = 0; j <= n; ++j) x.push_back("x" + std::to_string(j));
  std::vector<DivisorComponent> comps;
  for (const auto& s : equations) {
    Polynomial p = Polynomial::parse(s, x);
    const int d = p.degree();
    comps.push_back({p, static_cast<unsigned>(d < 0 ? 0 : d)});
  }
  return DivisorArrangement(n, std::move(comps));
}

Polynomial DivisorArrangement::dehomogenize(std::size_t i, unsigned j) const {
  VariableList chart;
  for (unsigned v = 0; v <= n_; ++v) {
    if (v != j) chart.push_back(x_[v]);
  }
  return components_.at(i).equation.partial_evaluate({{x_[j], Rational(1)}}).embed(chart);
}

LogFrame DivisorArrangement::chart_frame(unsigned j) const {
  LogFrame f;
  f.chart_id = "U" + std::to_string(j);
  for (unsigned v = 0; v <= n_; ++v) {
    if (v != j) f.variables.push_back(x_[v]);
  }
  for (std::size_t i = 0; i < components_.size(); ++i) {
    Polynomial s = dehomogenize(i, j);
    if (!s.is_constant()) f.poles.push_back({label(i), s});
  }
  return f;
}

Polynomial residue_of_form(const LogForm& eta, const std::string& pole) {
  const Pole* p = eta.frame().pole(pole);
  if (!p) throw ComponentNotLogMarked("chart " + eta.frame().chart_id + " has no log pole " + pole);
  return normal_form(eta.log(pole), p->equation);
}

Polynomial residue_of_form(const LogForm& eta, std::size_t component) {
  const auto& poles = eta.frame().poles;
  if (component < 1 || component > poles.size()) {
    throw ComponentNotLogMarked("chart " + eta.frame().chart_id + " has no log pole number " +
                                std::to_string(component));
  }
  return residue_of_form(eta, poles[component - 1].label);
}

nlohmann::json LogFormsReport::to_json() const {
  nlohmann::json forms_json = nlohmann::json::array();
  for (const auto& f : forms) {
    nlohmann::json charts = nlohmann::json::object();
    for (const auto& [id, w] : f.charts) charts[id] = w.to_string();
    nlohmann::json res = nlohmann::json::array();
    for (const auto& r : f.residues) res.push_back(r.to_string());
    forms_json.push_back({{"index", f.index}, {"charts", charts}, {"regular", f.regular}, {"residues", res}});
  }
  return {{"forms", forms_json},
          {"count", forms.size()},
          {"residue_rank", residue_rank},
          {"all_regular", all_regular},
          {"independent", independent}};
}

LogFormsReport construct_global_log_forms(const DivisorArrangement& arr) {
  const std::size_t c = arr.size();
  if (c < 1) throw InvalidArgument("need at least one component");
  const unsigned n = arr.n();
  const VariableList& x = arr.homogeneous_variables();
  LogFormsReport rep;
  rep.residue_matrix = RationalMatrix(c - 1, c);

  for (std::size_t i = 0; i + 1 < c; ++i) {
    const auto& si = arr.components()[i];
    const auto& sj = arr.components()[i + 1];
    const Rational wi(static_cast<long>(sj.degree));      // weight of dlog s_i
    const Rational wj(-static_cast<long>(si.degree));     // weight of dlog s_{i+1}

    // homogeneous numerators over s_i s_{i+1}; the form descends to P^n iff
    // its contraction with the Euler field vanishes
    std::map<std::string, Polynomial> N;
    Polynomial euler(x);
    for (const auto& v : x) {
      N[v] = wi * sj.equation * si.equation.derivative(v) + wj * si.equation * sj.equation.derivative(v);
      euler += Polynomial::variable(v, x) * N[v];
    }
    const Polynomial Q = si.equation * sj.equation;

    GlobalLogForm g;
    g.index = i + 1;
    g.regular = euler.is_zero();
    for (unsigned j = 0; j <= n; ++j) {
      const LogFrame frame = arr.chart_frame(j);
      LogForm eta(frame);
      if (frame.pole(DivisorArrangement::label(i))) {
        eta.add_log(DivisorArrangement::label(i), Polynomial::constant(wi, frame.variables));
      }
      if (frame.pole(DivisorArrangement::label(i + 1))) {
        eta.add_log(DivisorArrangement::label(i + 1), Polynomial::constant(wj, frame.variables));
      }
      // the chart form must agree with the restriction of the homogeneous one
      const auto cleared = eta.expand_cleared();
      const std::map<std::string, Rational> at{{x[j], Rational(1)}};
      const Polynomial Qj = Q.partial_evaluate(at).embed(frame.variables);
      for (const auto& v : frame.variables) {
        const auto it = cleared.numerators.find(v);
        const Polynomial lhs = it == cleared.numerators.end() ? Polynomial(frame.variables) : it->second;
        const Polynomial Nj = N.at(v).partial_evaluate(at).embed(frame.variables);
        if (!(lhs * Qj == Nj * cleared.denominator)) g.regular = false;
      }
      g.charts.emplace(frame.chart_id, std::move(eta));
    }

    for (std::size_t l = 0; l < c; ++l) {
      Rational value;
      for (unsigned j = 0; j <= n; ++j) {
        const LogForm& eta = g.charts.at("U" + std::to_string(j));
        if (!eta.frame().pole(DivisorArrangement::label(l))) continue;
        const Polynomial r = residue_of_form(eta, DivisorArrangement::label(l));
        if (!r.is_constant()) g.regular = false;
        value = r.constant_term();
        break;
      }
      g.residues.push_back(value);
      rep.residue_matrix(i, l) = value;
    }
    rep.all_regular = rep.all_regular && g.regular;
    rep.forms.push_back(std::move(g));
  }
  rep.residue_rank = rep.residue_matrix.rank();
  rep.independent = rep.residue_rank == c - 1;
  return rep;
}

}  // namespace logres
