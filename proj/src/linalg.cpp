#include "pfrac/linalg.hpp"

#include <string>
#include <utility>

#include "pfrac/error.hpp"

namespace pfrac {

RatMatrix::RatMatrix(std::size_t rows, std::size_t cols)
    : rows_(rows), cols_(cols), entries_(rows * cols) {}

RatMatrix RatMatrix::from_rows(std::span<const RatVector> rows, std::size_t cols) {
  RatMatrix m(rows.size(), cols);
  for (std::size_t r = 0; r < rows.size(); ++r) {
    if (rows[r].size() != cols) {
      throw Error(ErrorCode::DimensionMismatch,
                  "row " + std::to_string(r) + " has length " + std::to_string(rows[r].size()) +
                      ", expected " + std::to_string(cols));
    }
    for (std::size_t c = 0; c < cols; ++c) m.at(r, c) = rows[r][c];
  }
  return m;
}

namespace {

// Forward elimination to row echelon form, pivoting on the first nonzero
// entry (in row order) of each column. Returns the pivot columns.
std::vector<std::size_t> echelonize(RatMatrix& m) {
  std::vector<std::size_t> pivots;
  std::size_t row = 0;
  for (std::size_t col = 0; col < m.cols() && row < m.rows(); ++col) {
    std::size_t p = row;
    while (p < m.rows() && m.at(p, col).is_zero()) ++p;
    if (p == m.rows()) continue;
    if (p != row) {
      for (std::size_t c = col; c < m.cols(); ++c) std::swap(m.at(p, c), m.at(row, c));
    }
    const Rational inv = m.at(row, col).reciprocal();
    for (std::size_t r = row + 1; r < m.rows(); ++r) {
      if (m.at(r, col).is_zero()) continue;
      const Rational factor = m.at(r, col) * inv;
      for (std::size_t c = col; c < m.cols(); ++c) m.at(r, c) -= factor * m.at(row, c);
    }
    pivots.push_back(col);
    ++row;
  }
  return pivots;
}

}  // namespace

std::size_t rank(const RatMatrix& m) {
  RatMatrix work = m;
  return echelonize(work).size();
}

std::size_t rank_of(std::span<const RatVector> vectors, std::size_t n) {
  return rank(RatMatrix::from_rows(vectors, n));
}

std::vector<std::size_t> extract_spanning_basis(std::span<const RatVector> vectors,
                                                std::size_t n) {
  // Incremental reduction: keep a reduced echelon set of accepted rows and
  // accept a vector iff it does not reduce to zero against them.
  std::vector<RatVector> reduced;
  std::vector<std::size_t> lead;
  std::vector<std::size_t> chosen;
  for (std::size_t i = 0; i < vectors.size() && chosen.size() < n; ++i) {
    if (vectors[i].size() != n) {
      throw Error(ErrorCode::DimensionMismatch,
                  "vector " + std::to_string(i) + " has length " +
                      std::to_string(vectors[i].size()) + ", expected " + std::to_string(n));
    }
    RatVector v = vectors[i];
    for (std::size_t k = 0; k < reduced.size(); ++k) {
      const Rational& f = v[lead[k]];
      if (f.is_zero()) continue;
      const Rational factor = f;
      for (std::size_t c = 0; c < n; ++c) v[c] -= factor * reduced[k][c];
    }
    std::size_t c = 0;
    while (c < n && v[c].is_zero()) ++c;
    if (c == n) continue;
    const Rational inv = v[c].reciprocal();
    for (auto& x : v) x *= inv;
    // Keep earlier rows reduced with respect to the new leading column.
    for (auto& r : reduced) {
      if (r[c].is_zero()) continue;
      const Rational factor = r[c];
      for (std::size_t j = 0; j < n; ++j) r[j] -= factor * v[j];
    }
    reduced.push_back(std::move(v));
    lead.push_back(c);
    chosen.push_back(i);
  }
  if (chosen.size() < n) {
    throw Error(ErrorCode::NotSpanning, "forms do not span: rank " +
                                            std::to_string(chosen.size()) + " < dimension " +
                                            std::to_string(n));
  }
  return chosen;
}

RatVector solve(const RatMatrix& coeffs, const RatVector& rhs) {
  const std::size_t n = coeffs.rows();
  if (coeffs.cols() != n || rhs.size() != n) {
    throw Error(ErrorCode::DimensionMismatch, "solve expects a square system");
  }
  RatMatrix aug(n, n + 1);
  for (std::size_t r = 0; r < n; ++r) {
    for (std::size_t c = 0; c < n; ++c) aug.at(r, c) = coeffs.at(r, c);
    aug.at(r, n) = rhs[r];
  }
  const auto pivots = echelonize(aug);
  if (pivots.size() < n || pivots.back() >= n) {
    throw Error(ErrorCode::SingularSystem, "singular linear system");
  }
  RatVector x(n);
  for (std::size_t i = n; i-- > 0;) {
    Rational acc = aug.at(i, n);
    for (std::size_t c = i + 1; c < n; ++c) acc -= aug.at(i, c) * x[c];
    x[i] = acc / aug.at(i, i);
  }
  return x;
}

RatVector express(const RatVector& z, std::span<const RatVector> basis) {
  const std::size_t n = z.size();
  if (basis.size() != n) {
    throw Error(ErrorCode::SingularSystem,
                "basis has " + std::to_string(basis.size()) + " vectors in dimension " +
                    std::to_string(n));
  }
  // Columns are the basis vectors: sum_i d_i basis_i = z.
  RatMatrix m(n, n);
  for (std::size_t i = 0; i < n; ++i) {
    if (basis[i].size() != n) throw Error(ErrorCode::DimensionMismatch, "basis vector length");
    for (std::size_t r = 0; r < n; ++r) m.at(r, i) = basis[i][r];
  }
  return solve(m, z);
}

Rational dot(const RatVector& a, const RatVector& b) {
  if (a.size() != b.size()) throw Error(ErrorCode::DimensionMismatch, "dot of unequal lengths");
  Rational acc;
  for (std::size_t i = 0; i < a.size(); ++i) acc += a[i] * b[i];
  return acc;
}

bool is_zero_vector(const RatVector& v) {
  for (const auto& x : v) {
    if (!x.is_zero()) return false;
  }
  return true;
}

}  // namespace pfrac

#include "pfrac/affine_form.hpp"

namespace pfrac {

Rational evaluate(const AffineForm& form, const RatVector& point) {
  return dot(form.a, point) + form.mu;
}

RatVector solve_point(std::span<const AffineForm> basis_forms) {
  const std::size_t n = basis_forms.size();
  RatMatrix m(n, n);
  RatVector rhs(n);
  for (std::size_t r = 0; r < n; ++r) {
    if (basis_forms[r].a.size() != n) {
      throw Error(ErrorCode::SingularSystem,
                  "expected " + std::to_string(n) + " forms in dimension " + std::to_string(n));
    }
    for (std::size_t c = 0; c < n; ++c) m.at(r, c) = basis_forms[r].a[c];
    rhs[r] = -basis_forms[r].mu;
  }
  return solve(m, rhs);
}

}  // namespace pfrac
