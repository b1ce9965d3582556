#include "logres/matrix.hpp"

#include <sstream>

namespace logres {

std::size_t RationalMatrix::rank() const {
  RationalMatrix m = *this;
  std::size_t rank = 0;
  for (std::size_t col = 0; col < cols_ && rank < rows_; ++col) {
    std::size_t pivot = rank;
    while (pivot < rows_ && m(pivot, col).is_zero()) ++pivot;
    if (pivot == rows_) continue;
    if (pivot != rank) {
      for (std::size_t c = col; c < cols_; ++c) std::swap(m(pivot, c), m(rank, c));
    }
    const Rational inv = m(rank, col).inverse();
    for (std::size_t r = rank + 1; r < rows_; ++r) {
      if (m(r, col).is_zero()) continue;
      const Rational f = m(r, col) * inv;
      for (std::size_t c = col; c < cols_; ++c) m(r, c) -= f * m(rank, c);
    }
    ++rank;
  }
  return rank;
}

std::string RationalMatrix::to_text() const {
  std::ostringstream os;
  os << rows_ << " " << cols_ << "\n";
  for (std::size_t r = 0; r < rows_; ++r) {
    for (std::size_t c = 0; c < cols_; ++c) {
      if (c) os << " ";
      os << (*this)(r, c).to_string();
    }
    os << "\n";
  }
  return os.str();
}

}  // namespace logres
