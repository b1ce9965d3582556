#include "logres/log_connection.hpp"

#include <algorithm>

#include "logres/errors.hpp"
#include "logres/parallel.hpp"

namespace logres {

ConnectionContext ConnectionContext::standard(unsigned n, unsigned epsilon, unsigned delta, unsigned r) {
  if (n < 1) throw InvalidArgument("n must be positive");
  ConnectionContext ctx;
  ctx.n = n;
  ctx.epsilon = epsilon;
  ctx.delta = delta;
  ctx.r = r;
  for (unsigned j = 1; j <= n; ++j) ctx.base.push_back("z" + std::to_string(j));
  const VariableList vars = ctx.variables();
  ctx.tau.push_back(Polynomial::constant(1, vars));
  for (const auto& z : ctx.base) ctx.tau.push_back(Polynomial::variable(z, vars));
  return ctx;
}

VariableList ConnectionContext::variables() const {
  VariableList v = base;
  v.push_back(t);
  return v;
}

LogFrame ConnectionContext::frame() const { return LogFrame::coordinates("fiber", variables(), {t}); }

Polynomial ConnectionContext::tau_power(const MultiIndex& I, unsigned multiple) const {
  if (I.size() != tau.size()) throw InvalidArgument("multi-index " + I.to_string() + " has the wrong length");
  Polynomial p = Polynomial::constant(1, variables());
  for (std::size_t j = 0; j < I.size(); ++j) {
    if (I[j]) p *= tau[j].embed(variables()).pow(I[j] * multiple);
  }
  return p;
}

std::vector<Polynomial> ConnectionContext::section_basis() const {
  // dehomogenized degree-epsilon monomials, x0^epsilon (= 1) first
  std::vector<Polynomial> out;
  for (const auto& B : enumerate_multiindices(n, epsilon)) {
    Exponent e(base.size(), 0);
    for (unsigned j = 1; j <= n; ++j) e[j - 1] = B[j];
    out.push_back(Polynomial::monomial(base, e));
  }
  return out;
}

LogForm nabla_component(const ConnectionContext& ctx, const Polynomial& a, const MultiIndex& I) {
  const VariableList vars = ctx.variables();
  const LogFrame frame = ctx.frame();
  const Polynomial F = a.embed(vars) * ctx.tau_power(I, ctx.r + 1);
  const LogForm full = LogForm::log_connection(frame, F, ctx.t);
  const Polynomial d = ctx.tau_power(I, ctx.r);
  try {
    return full.map_coefficients([&](const Polynomial& c) { return exact_divide(c.embed(vars), d); });
  } catch (const NotDivisible&) {
    throw DivisibilityFailure("nabla(a tau^" + I.to_string() + ") not divisible by tau^(r I)");
  }
}

bool LogTangentVector::is_zero() const {
  return xi0.is_zero() && std::all_of(xi.begin(), xi.end(), [](const Rational& x) { return x.is_zero(); });
}

ConnectionEvaluator::ConnectionEvaluator(ConnectionContext ctx)
    : ctx_(std::move(ctx)), indices_(enumerate_multiindices(ctx_.n, ctx_.delta)), basis_(ctx_.section_basis()) {
  log_coeff_.resize(indices_.size());
  dz_coeff_.resize(indices_.size());
  for (std::size_t i = 0; i < indices_.size(); ++i) {
    for (const auto& b : basis_) {
      const LogForm w = nabla_component(ctx_, b, indices_[i]);
      log_coeff_[i].push_back(w.log(ctx_.t));
      std::vector<Polynomial> dz;
      for (const auto& z : ctx_.base) dz.push_back(w.holomorphic(z));
      dz_coeff_[i].push_back(std::move(dz));
    }
  }
}

Rational ConnectionEvaluator::evaluate_basis(std::size_t I, std::size_t b, const LogTangentVector& xi) const {
  std::map<std::string, Rational> point;
  for (std::size_t j = 0; j < ctx_.base.size(); ++j) point[ctx_.base[j]] = xi.basepoint.at(j);
  Rational v = log_coeff_[I][b].evaluate(point) * xi.xi0;
  for (std::size_t j = 0; j < ctx_.base.size(); ++j) {
    if (!xi.xi[j].is_zero()) v += dz_coeff_[I][b][j].evaluate(point) * xi.xi[j];
  }
  return v;
}

Rational ConnectionEvaluator::evaluate(std::size_t I, const std::vector<Rational>& coeff,
                                       const LogTangentVector& xi) const {
  Rational v;
  for (std::size_t b = 0; b < basis_.size(); ++b) {
    if (!coeff[b].is_zero()) v += coeff[b] * evaluate_basis(I, b, xi);
  }
  return v;
}

nlohmann::json RankReport::to_json() const {
  return {{"rank", rank},   {"bound", bound.get_str()}, {"satisfied", satisfied},
          {"rows", rows},   {"cols", cols},             {"block_diagonal", block_diagonal}};
}

std::set<unsigned> stratum_of(const ConnectionContext& ctx, const std::vector<Rational>& y) {
  if (y.size() != ctx.n) throw InvalidArgument("base point needs " + std::to_string(ctx.n) + " coordinates");
  std::map<std::string, Rational> point;
  for (std::size_t j = 0; j < y.size(); ++j) point[ctx.base[j]] = y[j];
  std::set<unsigned> J;
  for (unsigned j = 0; j < ctx.tau.size(); ++j) {
    if (ctx.tau[j].partial_evaluate(point).is_zero()) J.insert(j);
  }
  return J;
}

std::string stratum_string(const std::set<unsigned>& J) {
  std::string s = "{";
  bool first = true;
  for (unsigned j : J) {
    s += (first ? "" : ",") + std::to_string(j);
    first = false;
  }
  return s + "}";
}

RankReport connection_rank(const ConnectionEvaluator& ev, const LogTangentVector& xi, const std::set<unsigned>& J) {
  const ConnectionContext& ctx = ev.context();
  if (xi.xi.size() != ctx.n) throw InvalidArgument("tangent vector needs " + std::to_string(ctx.n) + " components");
  const auto actual = stratum_of(ctx, xi.basepoint);
  if (actual != J) {
    throw BasepointNotInStratum("base point lies on stratum " + stratum_string(actual) + ", not " +
                                stratum_string(J));
  }
  const auto& all = ev.indices();
  const std::size_t nb = ev.basis().size();
  std::vector<std::size_t> rows;
  for (std::size_t i = 0; i < all.size(); ++i) {
    if (!all[i].meets(J)) rows.push_back(i);
  }
  RankReport rep;
  rep.rows = rows.size();
  rep.cols = all.size() * nb;
  rep.matrix = RationalMatrix(rep.rows, rep.cols);
  const std::vector<Rational> none(nb);
  rep.block_diagonal = true;
  // column (I', b) is the image of the vector with a_{I'} = basis[b], zero elsewhere
  for (std::size_t col_i = 0; col_i < all.size(); ++col_i) {
    for (std::size_t b = 0; b < nb; ++b) {
      std::vector<Rational> unit(nb);
      unit[b] = 1;
      for (std::size_t r = 0; r < rows.size(); ++r) {
        const Rational v = ev.evaluate(rows[r], rows[r] == col_i ? unit : none, xi);
        rep.matrix(r, col_i * nb + b) = v;
        if (rows[r] != col_i && !v.is_zero()) rep.block_diagonal = false;
      }
    }
  }
  rep.rank = rep.matrix.rank();
  const unsigned k = ctx.n + 1 - static_cast<unsigned>(J.size()) - 1;
  rep.bound = binomial(k + ctx.delta, k);
  rep.satisfied = BigInt(static_cast<unsigned long>(rep.rank)) >= rep.bound;
  return rep;
}

RankReport connection_rank(const ConnectionContext& ctx, const LogTangentVector& xi, const std::set<unsigned>& J) {
  return connection_rank(ConnectionEvaluator(ctx), xi, J);
}

namespace {

void check_shape(const CoefficientVector<Polynomial>& a, unsigned n, unsigned delta) {
  if (a.n != n || a.degree != delta) {
    throw DegreeMismatch("coefficients indexed by I(" + std::to_string(a.degree) + ") in " + std::to_string(a.n) +
                         " variables, expected I(" + std::to_string(delta) + ") in " + std::to_string(n));
  }
  for (const auto& I : enumerate_multiindices(n, delta)) {
    if (!a.entries.count(I)) throw DegreeMismatch("missing coefficient a_" + I.to_string());
  }
  if (a.entries.size() != enumerate_multiindices(n, delta).size()) {
    throw DegreeMismatch("coefficients outside I(" + std::to_string(delta) + ")");
  }
}

}  // namespace

Polynomial fermat_section(const ConnectionContext& ctx, const CoefficientVector<Polynomial>& a) {
  check_shape(a, ctx.n, ctx.delta);
  Polynomial s(ctx.base);
  for (const auto& [I, c] : a.entries) {
    if (c.degree() > static_cast<int>(ctx.epsilon)) {
      throw DegreeMismatch("a_" + I.to_string() + " has degree " + std::to_string(c.degree()) + " > epsilon");
    }
    s += (c.embed(ctx.variables()) * ctx.tau_power(I, ctx.r + 1)).embed(ctx.base);
  }
  return s;
}

Polynomial fermat_section_homogeneous(unsigned n, unsigned epsilon, unsigned delta, unsigned r,
                                      const CoefficientVector<Polynomial>& a) {
  check_shape(a, n, delta);
  VariableList x;
  for (unsigned j = 0; j <= n; ++j) x.push_back("x" + std::to_string(j));
  Polynomial s(x);
  for (const auto& [I, c] : a.entries) {
    const Polynomial ce = c.embed(x);
    for (const auto& [e, coef] : ce.terms()) {
      if (total_degree(e) != epsilon) {
        throw DegreeMismatch("a_" + I.to_string() + " is not homogeneous of degree " + std::to_string(epsilon));
      }
    }
    Exponent e(n + 1);
    for (unsigned j = 0; j <= n; ++j) e[j] = I[j] * (r + 1);
    s += ce * Polynomial::monomial(x, e);
  }
  return s;
}

std::map<std::string, Polynomial> tautological_residual(const ConnectionContext& ctx,
                                                        const CoefficientVector<Polynomial>& a) {
  const Polynomial sigma = fermat_section(ctx, a);
  const VariableList vars = ctx.variables();
  LogForm total(ctx.frame());
  for (const auto& [I, c] : a.entries) total += nabla_component(ctx, c, I) * ctx.tau_power(I, ctx.r);
  // t = sigma turns dt/t into dsigma/sigma
  std::map<std::string, Polynomial> at_sigma{{ctx.t, sigma}};
  for (const auto& z : ctx.base) at_sigma.emplace(z, Polynomial::variable(z, ctx.base));
  const Polynomial beta = substitute(total.log(ctx.t), at_sigma, ctx.base);
  std::map<std::string, Polynomial> out;
  for (const auto& z : ctx.base) {
    const Polynomial alpha = substitute(total.holomorphic(z), at_sigma, ctx.base);
    out.emplace(z, sigma * alpha + beta * sigma.derivative(z));
  }
  return out;
}

RationalSampler::RationalSampler(std::uint64_t seed, long bound) : gen_(seed), bound_(bound) {}

RationalSampler::RationalSampler(std::uint64_t seed, std::uint64_t stream, long bound) : bound_(bound) {
  std::seed_seq seq{static_cast<std::uint32_t>(seed), static_cast<std::uint32_t>(seed >> 32),
                    static_cast<std::uint32_t>(stream), static_cast<std::uint32_t>(stream >> 32)};
  gen_.seed(seq);
}

long RationalSampler::uniform(long lo, long hi) { return std::uniform_int_distribution<long>(lo, hi)(gen_); }

Rational RationalSampler::draw() { return Rational(uniform(-bound_, bound_), uniform(1, bound_)); }

Rational RationalSampler::draw_nonzero() {
  for (;;) {
    Rational q = draw();
    if (!q.is_zero()) return q;
  }
}

CoefficientVector<Polynomial> random_coefficients(const ConnectionContext& ctx, RationalSampler& rng) {
  CoefficientVector<Polynomial> a{ctx.n, ctx.delta, {}};
  const auto basis = ctx.section_basis();
  for (const auto& I : enumerate_multiindices(ctx.n, ctx.delta)) {
    Polynomial p(ctx.base);
    for (const auto& b : basis) p += b * rng.draw();
    a.entries.emplace(I, p);
  }
  return a;
}

nlohmann::json SamplingReport::to_json() const {
  return {{"trials", trials}, {"failures", failures}, {"strata", strata}, {"failures_by_stratum", failures_by_stratum}};
}

SamplingReport sample_indeterminacy(const ConnectionContext& ctx, std::size_t trials, std::uint64_t seed,
                                    const std::optional<CoefficientVector<Polynomial>>& fixed_a) {
  if (ctx.delta < 2 * ctx.n) {
    throw InvalidArgument("sampling needs delta >= 2n, got delta=" + std::to_string(ctx.delta));
  }
  const ConnectionEvaluator ev(ctx);
  const auto& basis = ev.basis();
  const auto& indices = ev.indices();

  // fixed coefficients in the monomial basis
  std::vector<std::vector<Rational>> fixed;
  if (fixed_a) {
    check_shape(*fixed_a, ctx.n, ctx.delta);
    for (const auto& I : indices) {
      const Polynomial p = fixed_a->entries.at(I).embed(ctx.base);
      std::vector<Rational> row;
      std::size_t matched = 0;
      for (const auto& b : basis) {
        const auto it = p.terms().find(b.terms().begin()->first);
        row.push_back(it == p.terms().end() ? Rational() : it->second);
        matched += it != p.terms().end();
      }
      if (matched != p.num_terms()) throw DegreeMismatch("a_" + I.to_string() + " has degree > epsilon");
      fixed.push_back(std::move(row));
    }
  }

  std::vector<std::set<unsigned>> strata;
  for (unsigned mask = 0; mask < (1u << ctx.n); ++mask) {
    std::set<unsigned> J;
    for (unsigned j = 0; j < ctx.n; ++j) {
      if (mask & (1u << j)) J.insert(j + 1);
    }
    strata.push_back(J);
  }

  struct Draw {
    std::size_t stratum;
    bool failed;
  };
  const auto draws = parallel_map<Draw>(trials, [&](std::size_t trial) {
    RationalSampler rng(seed, trial);
    const std::size_t s = trial % strata.size();
    std::vector<std::vector<Rational>> coeff = fixed;
    if (!fixed_a) {
      for (std::size_t i = 0; i < indices.size(); ++i) {
        std::vector<Rational> row;
        for (std::size_t b = 0; b < basis.size(); ++b) row.push_back(rng.draw());
        coeff.push_back(std::move(row));
      }
    }
    LogTangentVector xi;
    for (unsigned j = 1; j <= ctx.n; ++j) xi.basepoint.push_back(strata[s].count(j) ? Rational() : rng.draw_nonzero());
    do {
      xi.xi0 = rng.draw();
      xi.xi.clear();
      for (unsigned j = 0; j < ctx.n; ++j) xi.xi.push_back(rng.draw());
    } while (xi.is_zero());
    bool all_zero = true;
    for (std::size_t i = 0; i < indices.size() && all_zero; ++i) {
      if (!ev.evaluate(i, coeff[i], xi).is_zero()) all_zero = false;
    }
    return Draw{s, all_zero};
  });

  SamplingReport rep;
  rep.trials = trials;
  for (const auto& J : strata) {
    rep.strata[stratum_string(J)] = 0;
    rep.failures_by_stratum[stratum_string(J)] = 0;
  }
  for (const auto& d : draws) {
    const std::string key = stratum_string(strata[d.stratum]);
    ++rep.strata[key];
    if (d.failed) {
      ++rep.failures;
      ++rep.failures_by_stratum[key];
    }
  }
  return rep;
}

}  // namespace logres
