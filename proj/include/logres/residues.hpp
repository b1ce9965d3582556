#pragma once

#include <map>
#include <string>
#include <vector>

#include "json.hpp"

#include "logres/log_form.hpp"
#include "logres/matrix.hpp"
#include "logres/polynomial.hpp"

namespace logres {

/// Hypersurfaces D_i = (s_i = 0) in P^n, s_i homogeneous in x0..xn.
struct DivisorComponent {
  Polynomial equation;
  unsigned degree = 0;
};

class DivisorArrangement {
 public:
  /// Checks homogeneity, the declared degrees and distinctness.
  DivisorArrangement(unsigned n, std::vector<DivisorComponent> components);
  /// Parses each equation over x0..xn and reads off its degree.
  static DivisorArrangement from_strings(unsigned n, const std::vector<std::string>& equations);

  unsigned n() const { return n_; }
  std::size_t size() const { return components_.size(); }
  const std::vector<DivisorComponent>& components() const { return components_; }
  const VariableList& homogeneous_variables() const { return x_; }
  static std::string label(std::size_t i) { return "D" + std::to_string(i + 1); }

  /// Frame on the chart x_j = 1 with a pole for every component meeting it.
  LogFrame chart_frame(unsigned j) const;
  /// s_i with x_j = 1.
  Polynomial dehomogenize(std::size_t i, unsigned j) const;

 private:
  unsigned n_;
  VariableList x_;
  std::vector<DivisorComponent> components_;
};

/// beta at the pole, reduced modulo the pole's equation. Throws ComponentNotLogMarked.
Polynomial residue_of_form(const LogForm& eta, const std::string& pole);
/// Same with the pole given by its 1-based position in the frame.
Polynomial residue_of_form(const LogForm& eta, std::size_t component);

struct GlobalLogForm {
  std::size_t index = 0;  // eta_i, 1-based
  std::map<std::string, LogForm> charts;
  bool regular = false;
  std::vector<Rational> residues;  // one per component
};

struct LogFormsReport {
  std::vector<GlobalLogForm> forms;
  RationalMatrix residue_matrix;
  std::size_t residue_rank = 0;
  bool all_regular = true;
  bool independent = true;

  nlohmann::json to_json() const;
};

/// eta_i = d_{i+1} dlog s_i - d_i dlog s_{i+1}, i = 1..c-1, in every
/// standard chart, with chart regularity and residue independence checked.
LogFormsReport construct_global_log_forms(const DivisorArrangement& arr);

}  // namespace logres
