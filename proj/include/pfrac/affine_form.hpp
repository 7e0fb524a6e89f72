#pragma once

#include <span>

#include "pfrac/linalg.hpp"

namespace pfrac {

/// The affine function p -> <a|p> + mu on the dual space.
struct AffineForm {
  RatVector a;
  Rational mu;

  std::size_t dimension() const { return a.size(); }

  friend bool operator==(const AffineForm&, const AffineForm&) = default;
};

/// <a|p> + mu.
Rational evaluate(const AffineForm& form, const RatVector& point);

/// The unique common zero of n forms with independent vector parts.
/// Throws Error(SingularSystem) if the vectors are dependent.
RatVector solve_point(std::span<const AffineForm> basis_forms);

}  // namespace pfrac
