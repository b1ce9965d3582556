#pragma once

#include <map>
#include <memory>
#include <optional>
#include <ostream>
#include <string>
#include <string_view>
#include <vector>

#include "logres/rational.hpp"

namespace logres {

using Exponent = std::vector<unsigned>;
using VariableList = std::vector<std::string>;

/// Graded lexicographic order, largest first.
struct GrlexGreater {
  bool operator()(const Exponent& a, const Exponent& b) const;
};

unsigned total_degree(const Exponent& e);

/// Multivariate polynomial over Q in an explicitly ordered list of
/// variables. Values are immutable in practice: every operation returns a
/// new polynomial, the variable list is shared.
///
/// Binary operations between polynomials over different variable lists work
/// in the merged ring (left operand's variables first, then any new names of
/// the right operand in their order).
class Polynomial {
 public:
  using TermMap = std::map<Exponent, Rational, GrlexGreater>;

  Polynomial();
  explicit Polynomial(VariableList vars);

  static Polynomial constant(const Rational& c, VariableList vars = {});
  static Polynomial variable(const std::string& name, VariableList vars = {});
  static Polynomial monomial(VariableList vars, Exponent e, const Rational& c = 1);

  /// Parses the textual form. Without `vars`, variables are taken in order
  /// of first appearance. Printing and reparsing with the same list is exact.
  static Polynomial parse(std::string_view text, std::optional<VariableList> vars = std::nullopt);

  const VariableList& variables() const { return *vars_; }
  const TermMap& terms() const { return terms_; }
  std::size_t num_terms() const { return terms_.size(); }
  std::optional<std::size_t> index_of(const std::string& name) const;

  bool is_zero() const { return terms_.empty(); }
  bool is_constant() const;
  bool is_monomial() const { return terms_.size() == 1; }
  Rational constant_term() const;
  /// -1 for the zero polynomial.
  int degree() const;
  int degree_in(const std::string& name) const;
  /// Names of the variables that actually occur.
  VariableList support() const;

  /// Leading term in grlex order; throws on zero.
  std::pair<Exponent, Rational> leading_term() const;

  /// Same polynomial over another variable list; occurring variables must be
  /// present in `target`.
  Polynomial embed(const VariableList& target) const;

  Polynomial derivative(const std::string& name) const;
  Rational evaluate(const std::map<std::string, Rational>& point) const;
  /// Substitutes only the listed variables by constants.
  Polynomial partial_evaluate(const std::map<std::string, Rational>& point) const;
  Polynomial pow(unsigned k) const;

  /// Coefficient of a variable power, as a polynomial in the other variables.
  Polynomial coefficient_of(const std::string& name, unsigned power) const;

  std::string to_string() const;

  Polynomial& operator+=(const Polynomial& o);
  Polynomial& operator-=(const Polynomial& o);
  Polynomial& operator*=(const Polynomial& o);
  Polynomial& operator*=(const Rational& c);

  friend Polynomial operator+(Polynomial a, const Polynomial& b) { return a += b; }
  friend Polynomial operator-(Polynomial a, const Polynomial& b) { return a -= b; }
  friend Polynomial operator*(const Polynomial& a, const Polynomial& b);
  friend Polynomial operator*(Polynomial a, const Rational& c) { return a *= c; }
  friend Polynomial operator*(const Rational& c, Polynomial a) { return a *= c; }
  friend Polynomial operator-(const Polynomial& a);

  friend bool operator==(const Polynomial& a, const Polynomial& b);
  friend std::ostream& operator<<(std::ostream& os, const Polynomial& p) { return os << p.to_string(); }

 private:
  Polynomial(std::shared_ptr<const VariableList> vars, TermMap terms);
  void add_term(const Exponent& e, const Rational& c);
  static std::shared_ptr<const VariableList> merged(const Polynomial& a, const Polynomial& b);

  std::shared_ptr<const VariableList> vars_;
  TermMap terms_;
};

/// q with f = q*g. Throws NotDivisible / DivisionByZero.
Polynomial exact_divide(const Polynomial& f, const Polynomial& g);

/// Remainder of f modulo the principal ideal (g), grlex normal form.
Polynomial normal_form(const Polynomial& f, const Polynomial& g);

/// Replaces each occurring variable by its image. The result lives over
/// `target` when given, otherwise over the merged variables of the images.
Polynomial substitute(const Polynomial& f, const std::map<std::string, Polynomial>& assignment,
                      std::optional<VariableList> target = std::nullopt);

/// Union of variable lists preserving first-seen order.
VariableList merge_variables(const VariableList& a, const VariableList& b);

}  // namespace logres
