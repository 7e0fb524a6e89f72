#pragma once

#include <cstddef>
#include <optional>
#include <span>
#include <vector>

#include "pfrac/affine_form.hpp"

namespace pfrac {

/// Strictly increasing positions into an arrangement's form list. Positions,
/// not values: equal forms at different positions stay distinguishable.
using IndexSet = std::vector<std::size_t>;

inline constexpr std::size_t kDefaultMaxXp = 20;

/// Ambient dimension plus an indexed list of affine forms. A list, so the same
/// form may appear several times.
class ArrangementInput {
 public:
  ArrangementInput(std::size_t dimension, std::vector<AffineForm> forms);

  /// Checks 1 <= n <= m, no zero vector part, and that the vector parts span.
  /// Throws Error(BadDimension | DimensionMismatch | ZeroVectorForm | NotSpanning).
  static ArrangementInput validate(ArrangementInput input);

  std::size_t dimension() const { return dimension_; }
  std::size_t size() const { return forms_.size(); }
  const std::vector<AffineForm>& forms() const { return forms_; }
  const AffineForm& form(std::size_t i) const { return forms_.at(i); }

  std::vector<RatVector> vectors(const IndexSet& subset) const;
  std::vector<AffineForm> select(const IndexSet& subset) const;
  /// Positions in [0, m) not in `subset`.
  IndexSet complement(const IndexSet& subset) const;
  /// Rank of the vector parts indexed by `subset`.
  std::size_t rank_of(const IndexSet& subset) const;
  bool spans(const IndexSet& subset) const { return rank_of(subset) == dimension_; }

  friend bool operator==(const ArrangementInput&, const ArrangementInput&) = default;

 private:
  std::size_t dimension_;
  std::vector<AffineForm> forms_;
};

/// A point p of the arrangement together with X_p, the positions of the
/// forms vanishing at p. X_p spans the space.
struct ArrangementPoint {
  RatVector coords;
  IndexSet xp;

  friend bool operator==(const ArrangementPoint&, const ArrangementPoint&) = default;
};

/// Positions of the forms vanishing at `point`.
IndexSet vanishing_set(const ArrangementInput& input, const RatVector& point);

/// All points whose vanishing set spans, sorted lexicographically by
/// coordinates. Brute force over the C(m, n) size-n subsets.
std::vector<ArrangementPoint> enumerate_points(const ArrangementInput& input);

/// Every subset of the point's X_p whose vectors span, ordered by size and
/// then lexicographically. Throws Error(SubsetExplosion) when |X_p| > max_xp.
std::vector<IndexSet> spanning_subsets(const ArrangementInput& input,
                                       const ArrangementPoint& point,
                                       std::size_t max_xp = kDefaultMaxXp);

struct GenericityReport {
  enum class Witness { None, OversizedXp, SharedPoint };

  bool generic = true;
  Witness witness = Witness::None;
  /// OversizedXp: the offending point. SharedPoint: the common point.
  std::optional<ArrangementPoint> point;
  /// SharedPoint: two distinct bases with the same solution.
  std::optional<IndexSet> basis_a;
  std::optional<IndexSet> basis_b;
};

/// True iff every X_p is a basis and bases correspond one-to-one with points.
GenericityReport is_generic(const ArrangementInput& input);

/// Calls fn(subset) for every size-k subset of [0, m) in lexicographic order.
template <typename Fn>
void for_each_combination(std::size_t m, std::size_t k, Fn&& fn) {
  if (k > m) return;
  IndexSet idx(k);
  for (std::size_t i = 0; i < k; ++i) idx[i] = i;
  while (true) {
    fn(static_cast<const IndexSet&>(idx));
    std::size_t i = k;
    while (i > 0 && idx[i - 1] == m - k + (i - 1)) --i;
    if (i == 0) return;
    ++idx[i - 1];
    for (std::size_t j = i; j < k; ++j) idx[j] = idx[j - 1] + 1;
  }
}

}  // namespace pfrac
