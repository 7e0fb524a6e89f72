#include "pfrac/verifier.hpp"

#include <algorithm>
#include <iterator>
#include <random>

#include "pfrac/error.hpp"

namespace pfrac {

namespace {

IndexSet complement_of(const IndexSet& s, std::size_t m) {
  IndexSet out;
  for (std::size_t i = 0; i < m; ++i) {
    if (!std::binary_search(s.begin(), s.end(), i)) out.push_back(i);
  }
  return out;
}

std::vector<AffineForm> pick(const ArrangementInput& input, const IndexSet& s) {
  std::vector<AffineForm> out;
  for (auto i : s) out.push_back(input.forms().at(i));
  return out;
}

// Form values at p recomputed from the polynomial embedding.
std::vector<Rational> form_values(const ArrangementInput& input, const RatVector& p) {
  std::vector<Rational> v;
  v.reserve(input.size());
  for (const auto& f : input.forms()) v.push_back(poly_from_form(f).evaluate(p));
  return v;
}

}  // namespace

IdentityCheck verify_identity(const Decomposition& d) {
  const std::size_t n = d.input.dimension();
  MultiPoly sum(n);
  for (const auto& t : d.terms) {
    sum += t.coeff * product_of_forms(n, pick(d.input, complement_of(t.ell, d.input.size())));
  }
  IdentityCheck out;
  out.residual = sum - MultiPoly::constant(n, Rational(1));
  out.passed = out.residual.is_zero();
  return out;
}

ResidueCheck verify_residues(const Decomposition& d) {
  ResidueCheck out;
  out.passed = true;
  for (std::size_t k = 0; k < d.points.size(); ++k) {
    const auto& p = d.points[k];
    const auto values = form_values(d.input, p.coords);
    IndexSet xp;
    Rational expected(1);
    for (std::size_t i = 0; i < values.size(); ++i) {
      if (values[i].is_zero()) {
        xp.push_back(i);
      } else {
        expected /= values[i];
      }
    }
    out.expected.push_back(expected);
    bool ok = xp == p.xp;
    if (ok) {
      const auto it = std::find_if(d.terms.begin(), d.terms.end(), [&](const Term& t) {
        return t.point_index == k && t.ell == xp;
      });
      ok = it != d.terms.end() && it->coeff == expected;
    }
    if (!ok) {
      out.passed = false;
      out.offending_points.push_back(k);
    }
  }
  return out;
}

bool verify_point_form(std::span<const PointPolynomial> cps, const ArrangementInput& input,
                       std::span<const ArrangementPoint> points) {
  const std::size_t n = input.dimension();
  MultiPoly sum(n);
  for (const auto& cp : cps) {
    if (cp.point_index >= points.size() || cp.cp.n_vars() != n) return false;
    const auto rest = complement_of(points[cp.point_index].xp, input.size());
    sum += cp.cp * product_of_forms(n, pick(input, rest));
  }
  return sum.is_one();
}

std::vector<RatVector> sample_points(const ArrangementInput& input, std::size_t trials,
                                     std::uint64_t seed) {
  constexpr std::size_t kMaxAttempts = 1000;
  std::mt19937_64 rng(seed);
  std::uniform_int_distribution<std::int64_t> num(-kSampleBound, kSampleBound);
  std::uniform_int_distribution<std::int64_t> den(1, kSampleBound);
  std::vector<RatVector> out;
  out.reserve(trials);
  for (std::size_t t = 0; t < trials; ++t) {
    bool found = false;
    for (std::size_t attempt = 0; attempt < kMaxAttempts && !found; ++attempt) {
      RatVector p;
      for (std::size_t j = 0; j < input.dimension(); ++j) {
        const auto a = num(rng);
        const auto b = den(rng);
        p.emplace_back(a, b);
      }
      const auto values = form_values(input, p);
      if (std::none_of(values.begin(), values.end(),
                       [](const Rational& v) { return v.is_zero(); })) {
        out.push_back(std::move(p));
        found = true;
      }
    }
    if (!found) {
      throw Error(ErrorCode::SamplingExhausted, "no sample point off the hyperplanes after " +
                                                    std::to_string(kMaxAttempts) + " attempts");
    }
  }
  return out;
}

SpotCheck spot_check(const Decomposition& d, std::size_t trials, std::uint64_t seed) {
  SpotCheck out;
  out.trials = trials;
  for (const auto& p : sample_points(d.input, trials, seed)) {
    const auto values = form_values(d.input, p);
    Rational lhs(1);
    for (const auto& v : values) lhs /= v;
    Rational rhs;
    for (const auto& t : d.terms) {
      Rational term = t.coeff;
      for (auto i : t.ell) {
        if (i >= values.size()) throw Error(ErrorCode::InvalidArgument, "term index out of range");
        term /= values[i];
      }
      rhs += term;
    }
    if (lhs != rhs) ++out.failures;
  }
  out.passed = out.failures == 0;
  return out;
}

VerificationReport verify_all(const Decomposition& d, std::span<const PointPolynomial> cps,
                              std::size_t trials, std::uint64_t seed) {
  VerificationReport r;
  r.identity = verify_identity(d);
  r.residues = verify_residues(d);
  if (cps.empty()) {
    const auto computed = point_polynomials(d);
    r.point_form = verify_point_form(computed, d.input, d.points);
  } else {
    r.point_form = verify_point_form(cps, d.input, d.points);
  }
  r.spot = spot_check(d, trials, seed);
  return r;
}

}  // namespace pfrac
