#pragma once

#include <cstddef>
#include <cstdint>
#include <span>
#include <vector>

#include "pfrac/decomposer.hpp"
#include "pfrac/multipoly.hpp"

namespace pfrac {

// The checks here only use the multipoly and linear-algebra layers plus the
// plain data of a Decomposition. They never call into the decomposition
// algorithm, so they certify its output independently.

struct IdentityCheck {
  bool passed = false;
  /// sum_ell c_ell prod_{a not in ell}(a + mu_a) - 1; zero iff passed.
  MultiPoly residual{0};
};

/// Clears denominators in the decomposition identity and checks
/// sum_ell c_ell prod_{a in X \ ell}(a + mu_a) == 1 exactly.
IdentityCheck verify_identity(const Decomposition& d);

struct ResidueCheck {
  bool passed = false;
  /// Indices of points whose X_p term is missing or has the wrong coefficient.
  std::vector<std::size_t> offending_points;
  /// Expected prod_{a not in X_p} 1/(<a|p> + mu_a), per point.
  std::vector<Rational> expected;
};

ResidueCheck verify_residues(const Decomposition& d);

/// Checks sum_p C_p prod_{a not in X_p}(a + mu_a) == 1.
bool verify_point_form(std::span<const PointPolynomial> cps, const ArrangementInput& input,
                       std::span<const ArrangementPoint> points);

struct SpotCheck {
  bool passed = false;
  std::size_t trials = 0;
  std::size_t failures = 0;
};

inline constexpr std::int64_t kSampleBound = 1'000'000;

/// Compares both sides of the identity at `trials` seeded random rational
/// points off every hyperplane. Throws Error(SamplingExhausted) if no such
/// point can be found.
SpotCheck spot_check(const Decomposition& d, std::size_t trials, std::uint64_t seed);

/// The sample sequence spot_check uses for a given input and seed.
std::vector<RatVector> sample_points(const ArrangementInput& input, std::size_t trials,
                                     std::uint64_t seed);

struct VerificationReport {
  IdentityCheck identity;
  ResidueCheck residues;
  bool point_form = false;
  SpotCheck spot;

  bool all_passed() const {
    return identity.passed && residues.passed && point_form && spot.passed;
  }
};

/// Runs every check. `cps` defaults to point_polynomials(d) when empty.
VerificationReport verify_all(const Decomposition& d, std::span<const PointPolynomial> cps,
                              std::size_t trials, std::uint64_t seed);

}  // namespace pfrac
