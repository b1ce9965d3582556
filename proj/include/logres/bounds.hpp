#pragma once

#include <optional>
#include <vector>

#include "json.hpp"

#include "logres/rational.hpp"

namespace logres {

struct BoundInput {
  unsigned n = 0;
  std::vector<BigInt> delta;
  std::vector<BigInt> epsilon;
};

struct EffectiveBounds {
  std::vector<BigInt> b;
  BigInt r_min;
  std::vector<BigInt> m;
  bool applicable = false;

  nlohmann::json to_json() const;
};

/// b_i = prod(delta) / delta_i, r_min = 1 + sum b_i (eps_i + delta_i),
/// m_i = eps_i + (r_min + 1) delta_i; applicable when every delta_i >= 4n - 1.
EffectiveBounds effective_bounds(const BoundInput& in);

struct CorollaryDegree {
  BigInt m_threshold;
  BigInt chain_lhs;
  bool chain_holds = false;
  std::optional<Rational> alpha_min;

  nlohmann::json to_json() const;
};

/// (4n)^{n+2}, the comparison (4n-1)(3+2n(4n-1)^n) <= (4n)^{n+2}, and
/// alpha_min = 3 + 2n max(delta)^n when delta is given. Requires c >= n.
CorollaryDegree corollary_degree(unsigned n, unsigned c, const std::vector<BigInt>& delta = {});

struct AlphaSplit {
  BigInt r;
  std::vector<Rational> epsilon;
  std::vector<BigInt> m;
  bool identity_holds = false;
  bool epsilon_in_range = false;
};

/// m = alpha * delta rewritten as eps + (r+1) delta with r = ceil(alpha) - 2.
/// Requires alpha * delta_i integral.
AlphaSplit split_alpha(const Rational& alpha, const std::vector<BigInt>& delta);

}  // namespace logres
