#pragma once

#include <map>
#include <set>
#include <string>
#include <vector>

#include "json.hpp"

#include "logres/monomial_ideal.hpp"
#include "logres/resolution.hpp"

namespace logres {

/// Fiber chart xi_t = 1 of the projectivized log cotangent bundle over a
/// polydisc where z_1..z_k cut out the components through the point.
/// Variables: z1..zn, then xi_j for j != t.
struct JetChart {
  unsigned n = 0;
  unsigned c = 0;
  unsigned k = 0;
  unsigned t = 1;

  /// Throws OutOfRange unless 0 <= k <= c <= n and 1 <= t <= n.
  JetChart(unsigned n, unsigned c, unsigned k, unsigned t);

  VariableList variables() const;
  std::set<std::string> log_marked() const;
  Chart chart() const;
  std::string id() const;

  static std::string z(unsigned i) { return "z" + std::to_string(i); }
  static std::string xi(unsigned j) { return "xi" + std::to_string(j); }
};

/// Prime of D~_J after xi_t = 1; the unit ideal when D~_J misses the chart.
MonomialIdeal dtilde_ideal(const std::set<unsigned>& J, const JetChart& jc);

/// Label of J: 1-based rank in the lexicographic order of the #J-subsets of {1..c}.
std::string subset_label(const std::set<unsigned>& J, unsigned c);
std::string subset_string(const std::set<unsigned>& J);
std::vector<std::set<unsigned>> nonempty_subsets(unsigned c);

/// Visible D~_J (J ⊆ {1..k}) with index #J and declared range [1, c].
CompatibleSystem build_dtilde_system(unsigned n, unsigned c, unsigned k, unsigned t);

struct JcalCertificate {
  MonomialIdeal generators;
  MonomialIdeal closed_form;
  bool equal = false;
  /// Always set: the intersection runs over nonempty J only.
  bool nonempty_j_only = true;

  nlohmann::json to_json() const;
};

/// Intersection of the D~_J primes over nonempty J ⊆ I, compared with the
/// dehomogenized closed form <z_i xi_i (i in I∩[k]), xi_j (otherwise)>.
JcalCertificate jcal_generators(const std::set<unsigned>& I, const JetChart& jc);

struct GammaPullback {
  Polynomial pullback;
  bool member_of_jcal = false;
};

/// sigma = sum s_i xi_i pulled back by the local model of gamma_I and
/// dehomogenized at xi_t = 1. `sections` holds s_1..s_n over z.
GammaPullback gamma_pullback_check(const std::vector<Polynomial>& sections, const std::set<unsigned>& I,
                                   const JetChart& jc);

/// Ideal generated by the pullbacks of the coordinate sections xi_1..xi_n.
MonomialIdeal gamma_generated_ideal(const std::set<unsigned>& I, const JetChart& jc);

/// F_I per leaf chart: label -> multiplicity. Throws NotResolved.
std::map<std::string, std::map<std::string, unsigned>> verify_principalization(const ResolutionResult& result,
                                                                               const std::set<unsigned>& I,
                                                                               const JetChart& jc);

}  // namespace logres
