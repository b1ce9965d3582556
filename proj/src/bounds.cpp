#include "logres/bounds.hpp"

#include <algorithm>

#include "logres/errors.hpp"

namespace logres {

namespace {

nlohmann::json strings(const std::vector<BigInt>& v) {
  nlohmann::json out = nlohmann::json::array();
  for (const auto& x : v) out.push_back(x.get_str());
  return out;
}

}  // namespace

nlohmann::json EffectiveBounds::to_json() const {
  return {{"b", strings(b)}, {"r_min", r_min.get_str()}, {"m", strings(m)}, {"applicable", applicable}};
}

EffectiveBounds effective_bounds(const BoundInput& in) {
  if (in.n < 1) throw InvalidArgument("need n >= 1");
  if (in.delta.size() != in.n || in.epsilon.size() != in.n) {
    throw InvalidArgument("delta and eps need " + std::to_string(in.n) + " entries");
  }
  for (std::size_t i = 0; i < in.n; ++i) {
    if (in.delta[i] <= 0 || in.epsilon[i] <= 0) throw InvalidArgument("delta and eps must be positive");
  }
  BigInt prod = 1;
  for (const auto& d : in.delta) prod *= d;
  EffectiveBounds out;
  BigInt sum = 0;
  for (std::size_t i = 0; i < in.n; ++i) {
    if (prod % in.delta[i] != 0) throw NonIntegerB("b_" + std::to_string(i + 1) + " is not an integer");
    const BigInt bi = prod / in.delta[i];
    out.b.push_back(bi);
    sum += bi * (in.epsilon[i] + in.delta[i]);
  }
  out.r_min = sum + 1;
  for (std::size_t i = 0; i < in.n; ++i) out.m.push_back(in.epsilon[i] + (out.r_min + 1) * in.delta[i]);
  const BigInt threshold = 4 * static_cast<long>(in.n) - 1;
  out.applicable = std::all_of(in.delta.begin(), in.delta.end(), [&](const BigInt& d) { return d >= threshold; });
  return out;
}

nlohmann::json CorollaryDegree::to_json() const {
  nlohmann::json j{{"m_threshold", m_threshold.get_str()},
                   {"chain_lhs", chain_lhs.get_str()},
                   {"chain_holds", chain_holds}};
  j["alpha_min"] = alpha_min ? nlohmann::json(alpha_min->to_string()) : nlohmann::json(nullptr);
  return j;
}

CorollaryDegree corollary_degree(unsigned n, unsigned c, const std::vector<BigInt>& delta) {
  if (n < 1) throw InvalidArgument("need n >= 1");
  if (c < n) throw InvalidArgument("need c >= n");
  CorollaryDegree out;
  const BigInt four_n = 4 * static_cast<long>(n);
  out.m_threshold = pow(four_n, n + 2);
  out.chain_lhs = (four_n - 1) * (3 + 2 * static_cast<long>(n) * pow(four_n - 1, n));
  out.chain_holds = out.chain_lhs <= out.m_threshold;
  if (!delta.empty()) {
    const BigInt mx = *std::max_element(delta.begin(), delta.end());
    out.alpha_min = Rational(3 + 2 * static_cast<long>(n) * pow(mx, n));
  }
  return out;
}

AlphaSplit split_alpha(const Rational& alpha, const std::vector<BigInt>& delta) {
  AlphaSplit out;
  out.r = alpha.ceil() - 2;
  const Rational frac = alpha - Rational(alpha.ceil()) + Rational(1);
  out.identity_holds = true;
  out.epsilon_in_range = true;
  for (const auto& d : delta) {
    const Rational m = alpha * Rational(d);
    if (!m.is_integer()) throw InvalidArgument("alpha * delta is not an integer");
    out.m.push_back(m.numerator());
    const Rational e = frac * Rational(d);
    out.epsilon.push_back(e);
    if (!(e + Rational(out.r + 1) * Rational(d) == m)) out.identity_holds = false;
    if (!e.is_integer() || e < Rational(1) || e > Rational(d)) out.epsilon_in_range = false;
  }
  return out;
}

}  // namespace logres
