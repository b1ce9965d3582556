#pragma once

#include <cstdint>
#include <map>
#include <optional>
#include <random>
#include <set>
#include <string>
#include <vector>

#include "json.hpp"

#include "logres/log_form.hpp"
#include "logres/matrix.hpp"
#include "logres/multi_index.hpp"
#include "logres/polynomial.hpp"

namespace logres {

/// Local model on the total space of L^m over a chart of Y: base
/// coordinates z1..zn, fiber coordinate t with Y = (t = 0), and the n+1
/// sections tau_0..tau_n in chart form.
struct ConnectionContext {
  unsigned n = 1;
  unsigned epsilon = 1;
  unsigned delta = 1;
  unsigned r = 1;
  VariableList base;
  std::string t = "t";
  std::vector<Polynomial> tau;

  /// tau_0 = 1, tau_j = z_j.
  static ConnectionContext standard(unsigned n, unsigned epsilon, unsigned delta, unsigned r);

  LogFrame frame() const;
  VariableList variables() const;  // base then t
  Polynomial tau_power(const MultiIndex& I, unsigned multiple = 1) const;
  unsigned m() const { return epsilon + (r + 1) * delta; }
  /// Monomials z^beta with |beta| <= epsilon, i.e. a basis of sections of L^epsilon.
  std::vector<Polynomial> section_basis() const;
};

/// nabla(a tau^{(r+1)I}) divided by tau^{rI}. Throws DivisibilityFailure.
LogForm nabla_component(const ConnectionContext& ctx, const Polynomial& a, const MultiIndex& I);

/// xi0 t d/dt + sum xi_j d/dz_j at a base point.
struct LogTangentVector {
  Rational xi0;
  std::vector<Rational> xi;
  std::vector<Rational> basepoint;
  bool is_zero() const;
};

/// Precomputed nabla_I(z^beta) for every I in I(delta) and basis monomial.
class ConnectionEvaluator {
 public:
  explicit ConnectionEvaluator(ConnectionContext ctx);

  const ConnectionContext& context() const { return ctx_; }
  const std::vector<MultiIndex>& indices() const { return indices_; }
  const std::vector<Polynomial>& basis() const { return basis_; }

  /// nabla^xi_I(a) for a = sum coeff[b] * basis[b].
  Rational evaluate(std::size_t I, const std::vector<Rational>& coeff, const LogTangentVector& xi) const;
  /// nabla^xi_I(basis[b]).
  Rational evaluate_basis(std::size_t I, std::size_t b, const LogTangentVector& xi) const;

 private:
  ConnectionContext ctx_;
  std::vector<MultiIndex> indices_;
  std::vector<Polynomial> basis_;
  // per (I, b): coefficient of t d/dt pairing and of each d/dz_j
  std::vector<std::vector<Polynomial>> log_coeff_;
  std::vector<std::vector<std::vector<Polynomial>>> dz_coeff_;
};

struct RankReport {
  std::size_t rank = 0;
  BigInt bound;
  bool satisfied = false;
  std::size_t rows = 0;
  std::size_t cols = 0;
  bool block_diagonal = false;
  RationalMatrix matrix;

  nlohmann::json to_json() const;
};

/// Stratum of a base point: the j in {0..n} with tau_j(y) = 0.
std::set<unsigned> stratum_of(const ConnectionContext& ctx, const std::vector<Rational>& y);

/// Exact rank of res_J o nabla^xi. Throws BasepointNotInStratum.
RankReport connection_rank(const ConnectionEvaluator& ev, const LogTangentVector& xi, const std::set<unsigned>& J);
RankReport connection_rank(const ConnectionContext& ctx, const LogTangentVector& xi, const std::set<unsigned>& J);

/// sum_I a_I tau^{(r+1)I} in chart form. Throws DegreeMismatch.
Polynomial fermat_section(const ConnectionContext& ctx, const CoefficientVector<Polynomial>& a);
/// Homogeneous form over x0..xn with tau_j = x_j; each a_I homogeneous of degree epsilon.
Polynomial fermat_section_homogeneous(unsigned n, unsigned epsilon, unsigned delta, unsigned r,
                                      const CoefficientVector<Polynomial>& a);

/// Cleared numerators of sum_I tau^{rI} nabla_I(a_I) after t = sigma(a);
/// all of them vanish when the tautological relation holds.
std::map<std::string, Polynomial> tautological_residual(const ConnectionContext& ctx,
                                                        const CoefficientVector<Polynomial>& a);

/// Rational in [-bound, bound] with denominator in [1, bound].
class RationalSampler {
 public:
  explicit RationalSampler(std::uint64_t seed, long bound = 1000);
  RationalSampler(std::uint64_t seed, std::uint64_t stream, long bound = 1000);
  Rational draw();
  Rational draw_nonzero();
  long uniform(long lo, long hi);

 private:
  std::mt19937_64 gen_;
  long bound_;
};

CoefficientVector<Polynomial> random_coefficients(const ConnectionContext& ctx, RationalSampler& rng);

struct SamplingReport {
  std::size_t trials = 0;
  std::size_t failures = 0;
  std::map<std::string, std::size_t> strata;
  std::map<std::string, std::size_t> failures_by_stratum;
  nlohmann::json to_json() const;
};

/// Random (a, point, xi) draws; a failure is a draw where every nabla^xi_I(a_I)
/// vanishes. Strata cycle through the subsets of {1..n} (tau_0 = 1 never
/// vanishes in the chart). Requires delta >= 2n.
SamplingReport sample_indeterminacy(const ConnectionContext& ctx, std::size_t trials, std::uint64_t seed,
                                    const std::optional<CoefficientVector<Polynomial>>& fixed_a = std::nullopt);

std::string stratum_string(const std::set<unsigned>& J);

}  // namespace logres
