#include "logres/multi_index.hpp"

#include <numeric>
#include <sstream>

namespace logres {

unsigned MultiIndex::weight() const { return std::accumulate(entries_.begin(), entries_.end(), 0u); }

std::set<unsigned> MultiIndex::support() const {
  std::set<unsigned> s;
  for (unsigned i = 0; i < entries_.size(); ++i) {
    if (entries_[i] > 0) s.insert(i);
  }
  return s;
}

bool MultiIndex::meets(const std::set<unsigned>& J) const {
  for (unsigned j : J) {
    if (j < entries_.size() && entries_[j] > 0) return true;
  }
  return false;
}

std::string MultiIndex::to_string() const {
  std::ostringstream os;
  os << "(";
  for (std::size_t i = 0; i < entries_.size(); ++i) os << (i ? "," : "") << entries_[i];
  os << ")";
  return os.str();
}

namespace {

void fill(std::vector<unsigned>& cur, std::size_t pos, unsigned left, const std::set<unsigned>& banned,
          std::vector<MultiIndex>& out) {
  if (pos + 1 == cur.size()) {
    if (left > 0 && banned.count(static_cast<unsigned>(pos))) return;
    cur[pos] = left;
    out.emplace_back(cur);
    return;
  }
  const unsigned top = banned.count(static_cast<unsigned>(pos)) ? 0 : left;
  for (unsigned v = top + 1; v-- > 0;) {
    cur[pos] = v;
    fill(cur, pos + 1, left - v, banned, out);
  }
}

}  // namespace

std::vector<MultiIndex> enumerate_multiindices(unsigned n, unsigned delta,
                                               const std::optional<std::set<unsigned>>& J) {
  std::vector<MultiIndex> out;
  std::vector<unsigned> cur(n + 1, 0);
  fill(cur, 0, delta, J.value_or(std::set<unsigned>{}), out);
  return out;
}

BigInt binomial(unsigned long n, unsigned long k) {
  BigInt r;
  mpz_bin_uiui(r.get_mpz_t(), n, k);
  return r;
}

}  // namespace logres
