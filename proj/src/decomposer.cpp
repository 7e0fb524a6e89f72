#include "pfrac/decomposer.hpp"

#include <algorithm>
#include <iterator>
#include <map>
#include <optional>
#include <string>

#include "pfrac/error.hpp"

namespace pfrac {

SeparationInstance SeparationInstance::make(AffineForm pivot, std::vector<AffineForm> others,
                                            std::vector<Rational> alphas) {
  Rational nu = pivot.mu;
  for (std::size_t i = 0; i < others.size() && i < alphas.size(); ++i) {
    nu -= alphas[i] * others[i].mu;
  }
  return {std::move(pivot), std::move(others), std::move(alphas), std::move(nu)};
}

std::vector<SeparationEntry> separate(const SeparationInstance& instance) {
  const auto& pivot = instance.pivot;
  const auto& others = instance.others;
  const auto& alphas = instance.alphas;
  if (others.size() != alphas.size()) {
    throw Error(ErrorCode::InvalidArgument, "separation needs one alpha per factor");
  }
  RatVector combined(pivot.a.size());
  Rational nu = pivot.mu;
  for (std::size_t i = 0; i < others.size(); ++i) {
    if (others[i].a.size() != pivot.a.size()) {
      throw Error(ErrorCode::DimensionMismatch, "separation factors of unequal dimension");
    }
    for (std::size_t j = 0; j < combined.size(); ++j) combined[j] += alphas[i] * others[i].a[j];
    nu -= alphas[i] * others[i].mu;
  }
  if (combined != pivot.a) {
    throw Error(ErrorCode::InvalidArgument, "pivot vector is not sum alpha_i b_i");
  }
  if (nu != instance.nu) {
    throw Error(ErrorCode::InvalidArgument, "nu does not match nu0 - sum alpha_i nu_i");
  }
  if (nu.is_zero()) throw Error(ErrorCode::NuZero, "separation with nu = 0");

  const Rational inv = nu.reciprocal();
  std::vector<SeparationEntry> out;
  out.push_back({inv, SeparationEntry::kPivot});
  for (std::size_t i = 0; i < alphas.size(); ++i) {
    if (alphas[i].is_zero()) continue;
    out.push_back({-alphas[i] * inv, i});
  }
  return out;
}

std::string_view strategy_name(PivotStrategy s) {
  switch (s) {
    case PivotStrategy::LastRemovable: return "last-removable";
    case PivotStrategy::FirstRemovable: return "first-removable";
  }
  return "unknown";
}

PivotStrategy parse_strategy(std::string_view name) {
  if (name == "last-removable") return PivotStrategy::LastRemovable;
  if (name == "first-removable") return PivotStrategy::FirstRemovable;
  throw Error(ErrorCode::InvalidArgument, "unknown strategy \"" + std::string(name) + "\"");
}

namespace {

IndexSet without(const IndexSet& s, std::size_t i) {
  IndexSet out;
  out.reserve(s.size());
  for (auto x : s) {
    if (x != i) out.push_back(x);
  }
  return out;
}

IndexSet with(const IndexSet& s, std::size_t i) {
  IndexSet out = s;
  out.insert(std::upper_bound(out.begin(), out.end(), i), i);
  return out;
}

// Recursion over spanning sublists S of X. A partial sum maps ell to c_ell,
// every ell having a common zero.
class Decomposer {
 public:
  using Sum = std::map<IndexSet, Rational>;

  Decomposer(const ArrangementInput& input, PivotStrategy strategy)
      : input_(input), strategy_(strategy) {}

  const Sum& run(const IndexSet& s) {
    if (auto it = memo_.find(s); it != memo_.end()) return it->second;
    ++stats_.sublists_decomposed;

    Sum result;
    if (common_zero(s)) {
      result.emplace(s, Rational(1));
      return memo_.emplace(s, std::move(result)).first->second;
    }

    const std::size_t z = pick_pivot(s);
    const AffineForm& zf = input_.form(z);
    const Sum inner = run(without(s, z));
    for (const auto& [ell, c] : inner) {
      const auto& q = common_zero(ell);
      if (!q) throw Error(ErrorCode::InternalInvariant, "term without a common zero");
      const Rational zq = evaluate(zf, *q);
      if (zq.is_zero()) {
        add(result, with(ell, z), c);
        continue;
      }

      const auto ell_vectors = input_.vectors(ell);
      const auto basis_pos = extract_spanning_basis(ell_vectors, input_.dimension());
      IndexSet basis;
      std::vector<RatVector> basis_vectors;
      for (auto k : basis_pos) {
        basis.push_back(ell[k]);
        basis_vectors.push_back(ell_vectors[k]);
      }
      auto inst = SeparationInstance::make(zf, input_.select(basis),
                                           express(zf.a, basis_vectors));
      ++stats_.nu_checks;
      if (inst.nu.is_zero()) throw Error(ErrorCode::NuZero, "nu = 0 in a fold step");
      if (inst.nu != zq) {
        throw Error(ErrorCode::InternalInvariant, "nu differs from <z|q> + mu_z");
      }
      const auto entries = separate(inst);
      ++stats_.separations;
      for (const auto& e : entries) {
        if (e.dropped == SeparationEntry::kPivot) {
          add(result, ell, c * e.coefficient);
          continue;
        }
        const IndexSet sub = with(without(ell, basis[e.dropped]), z);
        const Rational scale = c * e.coefficient;
        const Sum inner_sub = run(sub);
        for (const auto& [ell2, c2] : inner_sub) add(result, ell2, scale * c2);
      }
    }
    return memo_.emplace(s, std::move(result)).first->second;
  }

  // The common zero of the forms in s, if they have one; s must span.
  const std::optional<RatVector>& common_zero(const IndexSet& s) {
    if (auto it = zeros_.find(s); it != zeros_.end()) return it->second;
    const auto pos = extract_spanning_basis(input_.vectors(s), input_.dimension());
    IndexSet basis;
    for (auto k : pos) basis.push_back(s[k]);
    RatVector p = solve_point(input_.select(basis));
    std::optional<RatVector> out;
    if (std::all_of(s.begin(), s.end(),
                    [&](std::size_t i) { return evaluate(input_.form(i), p).is_zero(); })) {
      out = std::move(p);
    }
    return zeros_.emplace(s, std::move(out)).first->second;
  }

  const DecomposeStats& stats() const { return stats_; }

 private:
  static void add(Sum& sum, const IndexSet& ell, const Rational& c) {
    if (c.is_zero()) return;
    auto [it, inserted] = sum.try_emplace(ell, c);
    if (inserted) return;
    it->second += c;
    if (it->second.is_zero()) sum.erase(it);
  }

  std::size_t pick_pivot(const IndexSet& s) const {
    auto removable = [&](std::size_t z) { return input_.spans(without(s, z)); };
    if (strategy_ == PivotStrategy::LastRemovable) {
      for (auto it = s.rbegin(); it != s.rend(); ++it) {
        if (removable(*it)) return *it;
      }
    } else {
      for (auto z : s) {
        if (removable(z)) return z;
      }
    }
    throw Error(ErrorCode::InternalInvariant, "no removable pivot in a non-concentrated list");
  }

  const ArrangementInput& input_;
  PivotStrategy strategy_;
  DecomposeStats stats_;
  std::map<IndexSet, Sum> memo_;
  std::map<IndexSet, std::optional<RatVector>> zeros_;
};

IndexSet difference(const IndexSet& a, const IndexSet& b) {
  IndexSet out;
  std::set_difference(a.begin(), a.end(), b.begin(), b.end(), std::back_inserter(out));
  return out;
}

}  // namespace

Decomposition decompose(const ArrangementInput& input, PivotStrategy strategy) {
  Decomposition d{input, enumerate_points(input), {}, strategy, {}};
  std::map<RatVector, std::size_t> point_index;
  for (std::size_t i = 0; i < d.points.size(); ++i) point_index.emplace(d.points[i].coords, i);

  IndexSet all(input.size());
  for (std::size_t i = 0; i < all.size(); ++i) all[i] = i;

  Decomposer engine(input, strategy);
  const auto sum = engine.run(all);
  for (const auto& [ell, c] : sum) {
    const auto& q = engine.common_zero(ell);
    const auto it = q ? point_index.find(*q) : point_index.end();
    if (it == point_index.end()) {
      throw Error(ErrorCode::InternalInvariant, "term at a point outside the arrangement");
    }
    const auto& xp = d.points[it->second].xp;
    if (!std::includes(xp.begin(), xp.end(), ell.begin(), ell.end())) {
      throw Error(ErrorCode::InternalInvariant, "term ell is not contained in X_p");
    }
    d.terms.push_back({it->second, ell, c});
  }
  d.stats = engine.stats();
  return d;
}

Rational residue_coefficient(const ArrangementInput& input, const ArrangementPoint& point) {
  Rational c(1);
  for (auto i : input.complement(point.xp)) c /= evaluate(input.form(i), point.coords);
  return c;
}

std::vector<PointPolynomial> point_polynomials(const Decomposition& d) {
  const std::size_t n = d.input.dimension();
  std::vector<PointPolynomial> out;
  out.reserve(d.points.size());
  for (std::size_t i = 0; i < d.points.size(); ++i) out.push_back({i, MultiPoly(n)});
  for (const auto& t : d.terms) {
    const auto rest = difference(d.points.at(t.point_index).xp, t.ell);
    out[t.point_index].cp += t.coeff * product_of_forms(n, d.input.select(rest));
  }
  return out;
}

}  // namespace pfrac
