#pragma once

#include <map>
#include <string>
#include <vector>

#include "logres/polynomial.hpp"

namespace logres {

/// A log pole of a frame: a label and the chart equation of the component.
/// When the equation is a bare variable the pole is a coordinate pole and the
/// frame element dz/z replaces dz.
struct Pole {
  std::string label;
  Polynomial equation;
};

/// Frame of logarithmic 1-forms on a chart: coordinates plus the log poles.
struct LogFrame {
  std::string chart_id;
  VariableList variables;
  std::vector<Pole> poles;

  bool is_log_coordinate(const std::string& var) const;
  const Pole* pole(const std::string& label) const;
  /// Coordinate frame with the listed variables marked log (pole label = name).
  static LogFrame coordinates(std::string chart_id, VariableList vars, const VariableList& log_marked);
};

/// alpha + sum beta_p dsigma_p/sigma_p.
///
/// Holomorphic coefficients of log-marked coordinates are folded into the
/// log part (alpha dz = (alpha z) dz/z), so that with coordinate poles the
/// representation is unique.
class LogForm {
 public:
  LogForm() = default;
  explicit LogForm(LogFrame frame);

  const LogFrame& frame() const { return frame_; }
  const std::map<std::string, Polynomial>& holomorphic_part() const { return holomorphic_; }
  const std::map<std::string, Polynomial>& log_part() const { return log_; }

  /// Coefficient accessors; zero when absent.
  Polynomial holomorphic(const std::string& var) const;
  Polynomial log(const std::string& pole) const;

  void add_holomorphic(const std::string& var, const Polynomial& coeff);
  void add_log(const std::string& pole, const Polynomial& coeff);

  /// df as a form in this frame.
  static LogForm differential(const LogFrame& frame, const Polynomial& f);

  /// ds - s dsD/sD with the pole labelled `pole`.
  static LogForm log_connection(const LogFrame& frame, const Polynomial& s, const std::string& pole);

  bool is_zero() const;

  LogForm& operator+=(const LogForm& o);
  LogForm& operator*=(const Polynomial& f);
  friend LogForm operator+(LogForm a, const LogForm& b) { return a += b; }
  friend LogForm operator*(LogForm a, const Polynomial& f) { return a *= f; }
  friend bool operator==(const LogForm& a, const LogForm& b);

  /// Maps every coefficient through `fn`.
  template <class Fn>
  LogForm map_coefficients(Fn fn) const {
    LogForm out(frame_);
    for (const auto& [k, c] : holomorphic_) out.holomorphic_.emplace(k, fn(c));
    for (const auto& [k, c] : log_) out.log_.emplace(k, fn(c));
    out.normalize();
    return out;
  }

  /// Pairing with a log tangent vector written in the dual frame: for a
  /// coordinate pole v the component multiplies v d/dv, otherwise d/dv.
  /// Requires coordinate poles only.
  Polynomial contract(const std::map<std::string, Polynomial>& components) const;

  /// Denominator prod(sigma_p) and numerators N_v with
  /// form = sum_v (N_v / denominator) dv.
  struct Cleared {
    Polynomial denominator;
    std::map<std::string, Polynomial> numerators;
  };
  Cleared expand_cleared() const;

  std::string to_string() const;

 private:
  void normalize();

  LogFrame frame_;
  std::map<std::string, Polynomial> holomorphic_;
  std::map<std::string, Polynomial> log_;
};

}  // namespace logres
