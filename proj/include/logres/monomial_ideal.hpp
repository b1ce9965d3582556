#pragma once

#include <map>
#include <optional>
#include <set>
#include <string>
#include <vector>

#include "logres/polynomial.hpp"

namespace logres {

class MonomialIdeal;

/// V(x_s : s in vanishing set), a coordinate subspace of a chart.
class SimpleVariety {
 public:
  SimpleVariety() = default;
  explicit SimpleVariety(std::set<std::string> vanishing) : vanishing_(std::move(vanishing)) {}

  const std::set<std::string>& vanishing_set() const { return vanishing_; }
  std::size_t codimension() const { return vanishing_.size(); }
  bool contains(const SimpleVariety& other) const;  // other ⊆ this as varieties
  SimpleVariety intersect(const SimpleVariety& other) const;
  MonomialIdeal ideal(const VariableList& vars) const;
  /// "V(a,b)" with names in the order of `vars`.
  std::string to_string(const VariableList& vars) const;

  friend auto operator<=>(const SimpleVariety&, const SimpleVariety&) = default;

 private:
  std::set<std::string> vanishing_;
};

/// Monomial ideal given by its unique minimal generators, kept sorted
/// (degree ascending, then lex descending). An empty generator list is the
/// zero ideal, the zero exponent alone is the unit ideal.
class MonomialIdeal {
 public:
  MonomialIdeal() = default;
  MonomialIdeal(VariableList vars, std::vector<Exponent> generators);

  static MonomialIdeal unit(VariableList vars);
  static MonomialIdeal zero(VariableList vars) { return MonomialIdeal(std::move(vars), {}); }
  /// Generators written as products of names, e.g. {"z1*xi1", "xi2"}; "1" is the unit.
  static MonomialIdeal from_strings(VariableList vars, const std::vector<std::string>& gens);

  const VariableList& variables() const { return vars_; }
  const std::vector<Exponent>& generators() const { return gens_; }

  bool is_zero() const { return gens_.empty(); }
  bool is_unit() const;
  bool is_principal() const { return gens_.size() == 1; }
  bool contains(const Exponent& monomial) const;
  bool contains(const Polynomial& f) const;

  MonomialIdeal sum(const MonomialIdeal& other) const;
  MonomialIdeal embed(const VariableList& target) const;

  /// Image under a monomial substitution into `target`.
  MonomialIdeal substitute(const std::map<std::string, Polynomial>& assignment, const VariableList& target) const;

  /// (I : x^inf): every generator with x set to 1.
  MonomialIdeal saturate(const std::string& var) const;

  /// Largest power of `var` dividing every generator, and the quotient.
  std::pair<unsigned, MonomialIdeal> divide_common(const std::string& var) const;

  /// Singletons and disjoint pairs when the ideal has the simple shape.
  struct SimpleShape {
    std::vector<std::string> singletons;
    std::vector<std::pair<std::string, std::string>> pairs;  // lower chart index first
  };
  std::optional<SimpleShape> simple_shape() const;
  bool is_simple() const { return simple_shape().has_value(); }

  std::vector<std::string> to_strings() const;
  std::string to_string() const;

  friend bool operator==(const MonomialIdeal& a, const MonomialIdeal& b);

 private:
  void minimalize();

  VariableList vars_;
  std::vector<Exponent> gens_;
};

/// Minimal generators of the intersection (lcm of generator pairs).
/// Throws MixedVariableSets when the rings differ.
MonomialIdeal intersect_monomial_ideals(const std::vector<MonomialIdeal>& ideals);

/// The 2^(#pairs) components of a simple ideal. Throws NotSimpleShape.
std::vector<SimpleVariety> decompose_simple_ideal(const MonomialIdeal& J);

/// Ideal of a union of simple varieties.
MonomialIdeal ideal_of_union(const std::vector<SimpleVariety>& vs, const VariableList& vars);

}  // namespace logres
