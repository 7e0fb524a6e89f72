#include "pfrac/arrangement.hpp"

#include <algorithm>
#include <map>
#include <string>

#include "pfrac/error.hpp"

namespace pfrac {

ArrangementInput::ArrangementInput(std::size_t dimension, std::vector<AffineForm> forms)
    : dimension_(dimension), forms_(std::move(forms)) {}

ArrangementInput ArrangementInput::validate(ArrangementInput input) {
  const std::size_t n = input.dimension_;
  const std::size_t m = input.forms_.size();
  if (n < 1) throw Error(ErrorCode::BadDimension, "dimension must be at least 1");
  if (m < n) {
    throw Error(ErrorCode::BadDimension, std::to_string(m) + " forms cannot span dimension " +
                                             std::to_string(n));
  }
  for (std::size_t i = 0; i < m; ++i) {
    if (input.forms_[i].a.size() != n) {
      throw Error(ErrorCode::DimensionMismatch,
                  "form " + std::to_string(i) + " has " + std::to_string(input.forms_[i].a.size()) +
                      " coordinates, expected " + std::to_string(n));
    }
    if (is_zero_vector(input.forms_[i].a)) {
      throw Error(ErrorCode::ZeroVectorForm,
                  "form " + std::to_string(i) + " has a zero vector part");
    }
  }
  std::vector<RatVector> all;
  all.reserve(m);
  for (const auto& f : input.forms_) all.push_back(f.a);
  const std::size_t r = pfrac::rank_of(all, n);
  if (r < n) {
    throw Error(ErrorCode::NotSpanning, "forms do not span: rank " + std::to_string(r) +
                                            " < dimension " + std::to_string(n));
  }
  return input;
}

std::vector<RatVector> ArrangementInput::vectors(const IndexSet& subset) const {
  std::vector<RatVector> out;
  out.reserve(subset.size());
  for (auto i : subset) out.push_back(forms_.at(i).a);
  return out;
}

std::vector<AffineForm> ArrangementInput::select(const IndexSet& subset) const {
  std::vector<AffineForm> out;
  out.reserve(subset.size());
  for (auto i : subset) out.push_back(forms_.at(i));
  return out;
}

IndexSet ArrangementInput::complement(const IndexSet& subset) const {
  IndexSet out;
  std::size_t k = 0;
  for (std::size_t i = 0; i < forms_.size(); ++i) {
    if (k < subset.size() && subset[k] == i) {
      ++k;
    } else {
      out.push_back(i);
    }
  }
  return out;
}

std::size_t ArrangementInput::rank_of(const IndexSet& subset) const {
  if (subset.empty()) return 0;
  return pfrac::rank_of(vectors(subset), dimension_);
}

IndexSet vanishing_set(const ArrangementInput& input, const RatVector& point) {
  IndexSet xp;
  for (std::size_t i = 0; i < input.size(); ++i) {
    if (evaluate(input.form(i), point).is_zero()) xp.push_back(i);
  }
  return xp;
}

std::vector<ArrangementPoint> enumerate_points(const ArrangementInput& input) {
  const std::size_t n = input.dimension();
  std::map<RatVector, IndexSet> found;
  for_each_combination(input.size(), n, [&](const IndexSet& subset) {
    if (!input.spans(subset)) return;
    RatVector p = solve_point(input.select(subset));
    if (found.contains(p)) return;
    IndexSet xp = vanishing_set(input, p);
    found.emplace(std::move(p), std::move(xp));
  });
  std::vector<ArrangementPoint> out;
  out.reserve(found.size());
  for (auto& [coords, xp] : found) out.push_back({coords, xp});
  return out;
}

std::vector<IndexSet> spanning_subsets(const ArrangementInput& input,
                                       const ArrangementPoint& point, std::size_t max_xp) {
  const std::size_t k = point.xp.size();
  if (k > max_xp) {
    throw Error(ErrorCode::SubsetExplosion, "|X_p| = " + std::to_string(k) +
                                                " exceeds the spanning-subset cap of " +
                                                std::to_string(max_xp));
  }
  std::vector<IndexSet> out;
  for (std::size_t size = input.dimension(); size <= k; ++size) {
    for_each_combination(k, size, [&](const IndexSet& pick) {
      IndexSet subset;
      subset.reserve(size);
      for (auto j : pick) subset.push_back(point.xp[j]);
      if (input.spans(subset)) out.push_back(std::move(subset));
    });
  }
  return out;
}

GenericityReport is_generic(const ArrangementInput& input) {
  GenericityReport report;
  const auto points = enumerate_points(input);
  for (const auto& p : points) {
    if (p.xp.size() != input.dimension()) {
      report.generic = false;
      report.witness = GenericityReport::Witness::OversizedXp;
      report.point = p;
      return report;
    }
  }
  std::map<RatVector, IndexSet> seen;
  bool shared = false;
  for_each_combination(input.size(), input.dimension(), [&](const IndexSet& basis) {
    if (shared || !input.spans(basis)) return;
    RatVector p = solve_point(input.select(basis));
    auto [it, inserted] = seen.try_emplace(p, basis);
    if (inserted) return;
    shared = true;
    report.generic = false;
    report.witness = GenericityReport::Witness::SharedPoint;
    report.point = ArrangementPoint{p, vanishing_set(input, p)};
    report.basis_a = it->second;
    report.basis_b = basis;
  });
  return report;
}

}  // namespace pfrac
