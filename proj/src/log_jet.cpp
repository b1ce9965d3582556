#include "logres/log_jet.hpp"

#include <algorithm>

#include "logres/errors.hpp"

namespace logres {

JetChart::JetChart(unsigned n_, unsigned c_, unsigned k_, unsigned t_) : n(n_), c(c_), k(k_), t(t_) {
  if (n < 1 || c < 1 || k > c || c > n) {
    throw OutOfRange("need 0 <= k <= c <= n, got n=" + std::to_string(n) + " c=" + std::to_string(c) +
                     " k=" + std::to_string(k));
  }
  if (t < 1 || t > n) throw OutOfRange("fiber chart " + std::to_string(t) + " not in 1.." + std::to_string(n));
}

VariableList JetChart::variables() const {
  VariableList vars;
  for (unsigned i = 1; i <= n; ++i) vars.push_back(z(i));
  for (unsigned j = 1; j <= n; ++j) {
    if (j != t) vars.push_back(xi(j));
  }
  return vars;
}

std::set<std::string> JetChart::log_marked() const {
  std::set<std::string> out;
  for (unsigned i = 1; i <= k; ++i) out.insert(z(i));
  return out;
}

std::string JetChart::id() const {
  return "n" + std::to_string(n) + "c" + std::to_string(c) + "k" + std::to_string(k) + "t" + std::to_string(t);
}

Chart JetChart::chart() const { return Chart::root(variables(), log_marked(), "0"); }

MonomialIdeal dtilde_ideal(const std::set<unsigned>& J, const JetChart& jc) {
  const VariableList vars = jc.variables();
  const bool through_point = std::all_of(J.begin(), J.end(), [&](unsigned i) { return i <= jc.k; });
  if (!through_point || !J.count(jc.t)) return MonomialIdeal::unit(vars);
  std::set<std::string> vanishing;
  for (unsigned i : J) vanishing.insert(JetChart::z(i));
  for (unsigned j = 1; j <= jc.n; ++j) {
    if (!J.count(j)) vanishing.insert(JetChart::xi(j));
  }
  return SimpleVariety(vanishing).ideal(vars);
}

std::vector<std::set<unsigned>> nonempty_subsets(unsigned c) {
  std::vector<std::set<unsigned>> out;
  for (unsigned mask = 1; mask < (1u << c); ++mask) {
    std::set<unsigned> s;
    for (unsigned i = 0; i < c; ++i) {
      if (mask & (1u << i)) s.insert(i + 1);
    }
    out.push_back(s);
  }
  return out;
}

std::string subset_label(const std::set<unsigned>& J, unsigned c) {
  std::vector<std::vector<unsigned>> same;
  for (const auto& s : nonempty_subsets(c)) {
    if (s.size() == J.size()) same.emplace_back(s.begin(), s.end());
  }
  std::sort(same.begin(), same.end());
  const std::vector<unsigned> key(J.begin(), J.end());
  const auto it = std::find(same.begin(), same.end(), key);
  if (it == same.end()) throw OutOfRange("subset " + subset_string(J) + " not in 1.." + std::to_string(c));
  return std::to_string(it - same.begin() + 1);
}

std::string subset_string(const std::set<unsigned>& J) {
  std::string s = "{";
  bool first = true;
  for (unsigned i : J) {
    s += (first ? "" : ",") + std::to_string(i);
    first = false;
  }
  return s + "}";
}

CompatibleSystem build_dtilde_system(unsigned n, unsigned c, unsigned k, unsigned t) {
  const JetChart jc(n, c, k, t);
  CompatibleSystem s{jc.chart(), {}, 1, c};
  auto subsets = nonempty_subsets(k);
  // index first, then lexicographic within an index
  std::sort(subsets.begin(), subsets.end(), [](const auto& a, const auto& b) {
    if (a.size() != b.size()) return a.size() < b.size();
    return std::lexicographical_compare(a.begin(), a.end(), b.begin(), b.end());
  });
  for (const auto& J : subsets) {
    const MonomialIdeal I = dtilde_ideal(J, jc);
    if (I.is_unit()) continue;
    std::set<std::string> vanishing;
    for (const auto& g : I.generators()) {
      for (std::size_t i = 0; i < g.size(); ++i) {
        if (g[i]) vanishing.insert(I.variables()[i]);
      }
    }
    s.members.push_back({static_cast<unsigned>(J.size()), subset_label(J, c), SimpleVariety(vanishing)});
  }
  return s;
}

nlohmann::json JcalCertificate::to_json() const {
  return {{"generators", generators.to_strings()},
          {"closed_form", closed_form.to_strings()},
          {"equal", equal},
          {"nonempty_j_only", nonempty_j_only}};
}

JcalCertificate jcal_generators(const std::set<unsigned>& I, const JetChart& jc) {
  if (I.empty()) throw InvalidArgument("I must be nonempty");
  const VariableList vars = jc.variables();
  std::vector<MonomialIdeal> primes;
  for (const auto& J : nonempty_subsets(jc.c)) {
    if (!std::includes(I.begin(), I.end(), J.begin(), J.end())) continue;
    primes.push_back(dtilde_ideal(J, jc));
  }
  JcalCertificate cert;
  cert.generators = primes.empty() ? MonomialIdeal::unit(vars) : intersect_monomial_ideals(primes);

  // closed form, with xi_t replaced by 1
  std::vector<std::string> gens;
  for (unsigned i = 1; i <= jc.n; ++i) {
    const bool log_i = I.count(i) && i <= jc.k;
    const std::string x = i == jc.t ? "1" : JetChart::xi(i);
    gens.push_back(log_i ? JetChart::z(i) + "*" + x : x);
  }
  cert.closed_form = MonomialIdeal::from_strings(vars, gens);
  cert.equal = cert.generators == cert.closed_form;
  return cert;
}

GammaPullback gamma_pullback_check(const std::vector<Polynomial>& sections, const std::set<unsigned>& I,
                                   const JetChart& jc) {
  if (sections.size() != jc.n) throw InvalidArgument("need one section per xi_i");
  const VariableList vars = jc.variables();
  Polynomial p(vars);
  for (unsigned i = 1; i <= jc.n; ++i) {
    Polynomial term = sections[i - 1].embed(vars);
    if (i != jc.t) term *= Polynomial::variable(JetChart::xi(i), vars);
    if (I.count(i) && i <= jc.k) term *= Polynomial::variable(JetChart::z(i), vars);
    p += term;
  }
  return {p, jcal_generators(I, jc).generators.contains(p)};
}

MonomialIdeal gamma_generated_ideal(const std::set<unsigned>& I, const JetChart& jc) {
  const VariableList vars = jc.variables();
  std::vector<Exponent> gens;
  for (unsigned i = 1; i <= jc.n; ++i) {
    std::vector<Polynomial> sections(jc.n, Polynomial(vars));
    sections[i - 1] = Polynomial::constant(1, vars);
    const auto g = gamma_pullback_check(sections, I, jc);
    gens.push_back(g.pullback.leading_term().first);
  }
  return MonomialIdeal(vars, gens);
}

std::map<std::string, std::map<std::string, unsigned>> verify_principalization(const ResolutionResult& result,
                                                                               const std::set<unsigned>& I,
                                                                               const JetChart& jc) {
  const MonomialIdeal J = jcal_generators(I, jc).generators;
  std::map<std::string, std::map<std::string, unsigned>> F;
  for (const Chart* leaf : result.atlas.leaves()) {
    const IdealTransform t = transform_ideal(*leaf, J);
    if (!t.strict.is_unit()) {
      throw NotResolved("ideal of " + subset_string(I) + " not principal in chart " + leaf->id + ": strict " +
                        t.strict.to_string());
    }
    F[leaf->id] = t.exceptional_multiplicities;
  }
  return F;
}

}  // namespace logres
