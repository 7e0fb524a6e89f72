#pragma once

#include <cstddef>
#include <cstdint>
#include <map>
#include <span>
#include <string>
#include <vector>

#include "pfrac/affine_form.hpp"
#include "pfrac/rational.hpp"

namespace pfrac {

using Exponent = std::vector<std::uint32_t>;

/// Graded lexicographic order, largest first: higher total degree wins, ties
/// broken lexicographically with x0 > x1 > ...
struct GradedLexGreater {
  bool operator()(const Exponent& a, const Exponent& b) const;
};

/// Sparse polynomial in x0..x{n-1} with exact rational coefficients.
/// No stored coefficient is ever zero; the zero polynomial has no terms.
class MultiPoly {
 public:
  using TermMap = std::map<Exponent, Rational, GradedLexGreater>;

  explicit MultiPoly(std::size_t n_vars) : n_vars_(n_vars) {}

  static MultiPoly constant(std::size_t n_vars, const Rational& c);
  static MultiPoly variable(std::size_t n_vars, std::size_t index);
  /// Sums the given terms; zero coefficients are discarded.
  static MultiPoly from_terms(std::size_t n_vars,
                              const std::vector<std::pair<Exponent, Rational>>& terms);

  std::size_t n_vars() const { return n_vars_; }
  const TermMap& terms() const { return terms_; }
  std::size_t term_count() const { return terms_.size(); }

  bool is_zero() const { return terms_.empty(); }
  bool is_one() const;
  /// -1 for the zero polynomial.
  int total_degree() const;
  Rational coefficient(const Exponent& e) const;

  Rational evaluate(const RatVector& point) const;

  /// "x0^2*x1 - 1/2*x1 + 3"; "0" for the zero polynomial.
  std::string to_string() const;

  MultiPoly operator-() const;
  MultiPoly& operator+=(const MultiPoly& rhs);
  MultiPoly& operator-=(const MultiPoly& rhs);

  friend MultiPoly operator+(MultiPoly lhs, const MultiPoly& rhs) { return lhs += rhs; }
  friend MultiPoly operator-(MultiPoly lhs, const MultiPoly& rhs) { return lhs -= rhs; }
  friend MultiPoly operator*(const MultiPoly& lhs, const MultiPoly& rhs);
  friend MultiPoly operator*(const Rational& c, const MultiPoly& p);

  friend bool operator==(const MultiPoly& a, const MultiPoly& b) {
    return a.n_vars_ == b.n_vars_ && a.terms_ == b.terms_;
  }

 private:
  void add_term(const Exponent& e, const Rational& c);
  void check_same_ring(const MultiPoly& other, const char* op) const;

  std::size_t n_vars_;
  TermMap terms_;
};

inline MultiPoly poly_add(const MultiPoly& p, const MultiPoly& q) { return p + q; }
inline MultiPoly poly_mul(const MultiPoly& p, const MultiPoly& q) { return p * q; }
inline MultiPoly poly_scale(const Rational& c, const MultiPoly& p) { return c * p; }
inline Rational poly_eval(const MultiPoly& p, const RatVector& point) { return p.evaluate(point); }

/// sum_j a_j x_j + mu.
MultiPoly poly_from_form(const AffineForm& form);

/// Expanded product of the forms; the empty product is the constant 1.
/// Throws Error(DimensionMismatch) if a form's length differs from n_vars.
MultiPoly product_of_forms(std::size_t n_vars, std::span<const AffineForm> forms);

}  // namespace pfrac
