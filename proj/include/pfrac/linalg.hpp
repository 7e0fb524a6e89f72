#pragma once

#include <cstddef>
#include <span>
#include <vector>

#include "pfrac/rational.hpp"

namespace pfrac {

using RatVector = std::vector<Rational>;

/// Dense row-major matrix of exact rationals.
class RatMatrix {
 public:
  RatMatrix(std::size_t rows, std::size_t cols);

  /// Builds a matrix whose rows are the given vectors, all of length `cols`.
  static RatMatrix from_rows(std::span<const RatVector> rows, std::size_t cols);

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }

  const Rational& at(std::size_t r, std::size_t c) const { return entries_[r * cols_ + c]; }
  Rational& at(std::size_t r, std::size_t c) { return entries_[r * cols_ + c]; }

 private:
  std::size_t rows_;
  std::size_t cols_;
  std::vector<Rational> entries_;
};

/// Exact rank over the rationals.
std::size_t rank(const RatMatrix& m);

/// Rank of a list of length-n vectors.
std::size_t rank_of(std::span<const RatVector> vectors, std::size_t n);

/// Greedy lowest-index selection of n independent vectors. The returned
/// positions index into `vectors` and are strictly increasing.
/// Throws Error(NotSpanning) if the vectors have rank < n.
std::vector<std::size_t> extract_spanning_basis(std::span<const RatVector> vectors,
                                                std::size_t n);

/// Solves coeffs * x = rhs for square, nonsingular coeffs.
/// Throws Error(SingularSystem) when coeffs is singular.
RatVector solve(const RatMatrix& coeffs, const RatVector& rhs);

/// Coordinates d of z in the given basis: z = sum_i d_i * basis_i.
/// Throws Error(SingularSystem) if the basis is dependent.
RatVector express(const RatVector& z, std::span<const RatVector> basis);

Rational dot(const RatVector& a, const RatVector& b);

bool is_zero_vector(const RatVector& v);

}  // namespace pfrac
