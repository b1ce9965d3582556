#pragma once

#include <string>
#include <vector>

#include "logres/rational.hpp"

namespace logres {

/// Dense matrix over Q.
class RationalMatrix {
 public:
  RationalMatrix() = default;
  RationalMatrix(std::size_t rows, std::size_t cols) : rows_(rows), cols_(cols), data_(rows * cols) {}

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }

  Rational& operator()(std::size_t r, std::size_t c) { return data_[r * cols_ + c]; }
  const Rational& operator()(std::size_t r, std::size_t c) const { return data_[r * cols_ + c]; }

  /// Rank by fraction-exact Gaussian elimination.
  std::size_t rank() const;

  /// One row per line, entries separated by a single space, "rows cols" header.
  std::string to_text() const;

 private:
  std::size_t rows_ = 0, cols_ = 0;
  std::vector<Rational> data_;
};

}  // namespace logres
