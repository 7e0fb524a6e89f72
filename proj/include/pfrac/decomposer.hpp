#pragma once

#include <cstddef>
#include <string>
#include <string_view>
#include <vector>

#include "pfrac/arrangement.hpp"
#include "pfrac/multipoly.hpp"

namespace pfrac {

/// The factor list of one separation step: the pivot b0 + nu0 and the others
/// b_i + nu_i, with b0 = sum_i alphas_i b_i and nu = nu0 - sum_i alphas_i nu_i.
struct SeparationInstance {
  AffineForm pivot;
  std::vector<AffineForm> others;
  std::vector<Rational> alphas;
  Rational nu;

  /// Fills in nu from the pivot, the others and the alphas.
  static SeparationInstance make(AffineForm pivot, std::vector<AffineForm> others,
                                 std::vector<Rational> alphas);
};

/// One summand of a separation: `coefficient` over the product of all factors
/// except the one at `dropped`.
struct SeparationEntry {
  static constexpr std::size_t kPivot = static_cast<std::size_t>(-1);

  Rational coefficient;
  /// kPivot, or a position into SeparationInstance::others.
  std::size_t dropped;

  friend bool operator==(const SeparationEntry&, const SeparationEntry&) = default;
};

/// Expands 1 / prod(factors) into terms each missing one factor:
/// (1/nu, drop pivot) followed by (-alpha_i/nu, drop others_i) for alpha_i != 0.
/// Throws Error(NuZero) when nu = 0 and Error(InvalidArgument) when the
/// instance is inconsistent.
std::vector<SeparationEntry> separate(const SeparationInstance& instance);

enum class PivotStrategy {
  LastRemovable,   ///< highest position z with S \ {z} still spanning
  FirstRemovable,  ///< lowest such position
};

std::string_view strategy_name(PivotStrategy s);
/// Throws Error(InvalidArgument) for unknown names.
PivotStrategy parse_strategy(std::string_view name);

struct Term {
  std::size_t point_index;
  IndexSet ell;
  Rational coeff;

  friend bool operator==(const Term&, const Term&) = default;
};

/// Counters gathered while decomposing. The nu checks are assertions: a
/// violation throws, so a successful run always has zero violations.
struct DecomposeStats {
  std::size_t separations = 0;
  std::size_t nu_checks = 0;
  std::size_t sublists_decomposed = 0;
};

struct Decomposition {
  ArrangementInput input;
  std::vector<ArrangementPoint> points;
  /// Unique ell keys, nonzero coefficients, sorted by ell.
  std::vector<Term> terms;
  PivotStrategy strategy = PivotStrategy::LastRemovable;
  DecomposeStats stats;
};

/// Partial-fraction decomposition of prod_{a in X} 1/(a + mu_a) into terms
/// c_ell prod_{a in ell} 1/(a + mu_a), one group per arrangement point.
/// `input` must already be validated. Deterministic for a fixed strategy.
Decomposition decompose(const ArrangementInput& input,
                        PivotStrategy strategy = PivotStrategy::LastRemovable);

/// prod_{a not in X_p} 1/(<a|p> + mu_a).
Rational residue_coefficient(const ArrangementInput& input, const ArrangementPoint& point);

struct PointPolynomial {
  std::size_t point_index;
  MultiPoly cp;

  friend bool operator==(const PointPolynomial&, const PointPolynomial&) = default;
};

/// C_p = sum_{ell at p} c_ell prod_{a in X_p \ ell}(a + mu_a), one per point.
std::vector<PointPolynomial> point_polynomials(const Decomposition& d);

}  // namespace pfrac
