#pragma once

#include <cstddef>
#include <initializer_list>
#include <optional>
#include <vector>

#include "mvprob/rational.hpp"

namespace mvprob {

using RatVec = std::vector<Rat>;

/// Dense row-major rational matrix.
class RatMat {
public:
  RatMat() = default;
  RatMat(std::size_t rows, std::size_t cols) : rows_(rows), cols_(cols), data_(rows * cols) {}
  RatMat(std::initializer_list<std::initializer_list<Rat>> rows);
  static RatMat from_rows(const std::vector<RatVec>& rows, std::size_t cols);
  static RatMat identity(std::size_t n);

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }

  Rat& operator()(std::size_t i, std::size_t j) { return data_[i * cols_ + j]; }
  const Rat& operator()(std::size_t i, std::size_t j) const { return data_[i * cols_ + j]; }

  RatVec row(std::size_t i) const;
  RatVec operator*(const RatVec& x) const;
  RatMat transposed() const;

  friend bool operator==(const RatMat&, const RatMat&) = default;

private:
  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  std::vector<Rat> data_;
};

RatVec operator+(const RatVec& a, const RatVec& b);
RatVec operator-(const RatVec& a, const RatVec& b);
RatVec operator*(const Rat& s, const RatVec& a);
Rat dot(const RatVec& a, const RatVec& b);

/// Reduced row echelon form; returns the pivot columns.
std::vector<std::size_t> row_reduce(RatMat& m);

std::size_t rank(RatMat m);
std::size_t rank(const std::vector<RatVec>& rows, std::size_t cols);

/// Basis of {x : m x = 0}.
std::vector<RatVec> null_space(RatMat m);

/// Exact solution of A x = b. Empty when the system is inconsistent or the
/// solution is not unique. Throws DimensionError on shape mismatch.
std::optional<RatVec> solve_linear(const RatMat& a, const RatVec& b);

}  // namespace mvprob
