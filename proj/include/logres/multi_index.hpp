#pragma once

#include <map>
#include <optional>
#include <set>
#include <string>
#include <vector>

#include "logres/rational.hpp"

namespace logres {

/// (i0, ..., in), 0-based like the homogeneous coordinates x0..xn.
class MultiIndex {
 public:
  MultiIndex() = default;
  explicit MultiIndex(std::vector<unsigned> entries) : entries_(std::move(entries)) {}

  std::size_t size() const { return entries_.size(); }
  unsigned operator[](std::size_t i) const { return entries_[i]; }
  const std::vector<unsigned>& entries() const { return entries_; }
  unsigned weight() const;
  std::set<unsigned> support() const;
  bool meets(const std::set<unsigned>& J) const;

  std::string to_string() const;

  friend auto operator<=>(const MultiIndex&, const MultiIndex&) = default;

 private:
  std::vector<unsigned> entries_;
};

/// Every I in N^{n+1} with |I| = delta, avoiding J when given. Listed in
/// descending lexicographic order, i.e. x0^delta first.
std::vector<MultiIndex> enumerate_multiindices(unsigned n, unsigned delta,
                                               const std::optional<std::set<unsigned>>& J = std::nullopt);

/// Exact binomial coefficient.
BigInt binomial(unsigned long n, unsigned long k);

/// Entries keyed by I(delta).
template <class T>
struct CoefficientVector {
  unsigned n = 0;
  unsigned degree = 0;
  std::map<MultiIndex, T> entries;

  /// Zero-filled vector on I(delta).
  static CoefficientVector zeros(unsigned n, unsigned delta, const T& zero) {
    CoefficientVector v{n, delta, {}};
    for (const auto& I : enumerate_multiindices(n, delta)) v.entries.emplace(I, zero);
    return v;
  }
};

/// Drops every entry whose index meets J.
template <class T>
CoefficientVector<T> restrict_coefficients(const CoefficientVector<T>& v, const std::set<unsigned>& J) {
  CoefficientVector<T> out{v.n, v.degree, {}};
  for (const auto& [I, c] : v.entries) {
    if (!I.meets(J)) out.entries.emplace(I, c);
  }
  return out;
}

}  // namespace logres
