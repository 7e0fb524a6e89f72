#include <gtest/gtest.h>

#include "pfrac/decomposer.hpp"
#include "pfrac/error.hpp"
#include "pfrac/verifier.hpp"
#include "support/corpus.hpp"

namespace pfrac {
namespace {

using testing::form;

constexpr auto kPivot = SeparationEntry::kPivot;

TEST(Separate, OneDimensionalPartialFractions) {
  // 1/(x(x+1)) = 1/x - 1/(x+1)
  const auto inst = SeparationInstance::make(form({1}, Rational(1)), {form({1}, Rational(0))},
                                             {Rational(1)});
  EXPECT_EQ(inst.nu, Rational(1));
  const auto entries = separate(inst);
  EXPECT_EQ(entries, (std::vector<SeparationEntry>{{Rational(1), kPivot}, {Rational(-1), 0}}));
}

TEST(Separate, SkipsZeroAlphas) {
  // 1/(x y (x-1)) = -1/(x y) + 1/(y (x-1))
  const auto inst = SeparationInstance::make(
      form({1, 0}, Rational(-1)), {form({1, 0}, Rational(0)), form({0, 1}, Rational(0))},
      {Rational(1), Rational(0)});
  EXPECT_EQ(inst.nu, Rational(-1));
  const auto entries = separate(inst);
  EXPECT_EQ(entries, (std::vector<SeparationEntry>{{Rational(-1), kPivot}, {Rational(1), 0}}));
}

TEST(Separate, ExpansionReproducesTheProduct) {
  // Clearing denominators: sum_entries coeff * (dropped factor) == 1.
  const auto inst = SeparationInstance::make(
      form({2, -1}, Rational(5)),
      {form({1, 0}, Rational(1, 2)), form({0, 1}, Rational(-2))}, {Rational(2), Rational(-1)});
  const auto entries = separate(inst);
  MultiPoly sum(2);
  for (const auto& e : entries) {
    const auto& f = e.dropped == kPivot ? inst.pivot : inst.others[e.dropped];
    sum += e.coefficient * poly_from_form(f);
  }
  EXPECT_TRUE(sum.is_one());
}

TEST(Separate, RejectsZeroNuAndInconsistentInstances) {
  const auto zero = SeparationInstance::make(form({1}, Rational(0)), {form({1}, Rational(0))},
                                             {Rational(1)});
  try {
    separate(zero);
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), ErrorCode::NuZero);
  }
  auto bad_alpha = SeparationInstance::make(form({1}, Rational(1)), {form({1}, Rational(0))},
                                            {Rational(2)});
  EXPECT_THROW(separate(bad_alpha), Error);
  auto bad_nu = SeparationInstance::make(form({1}, Rational(1)), {form({1}, Rational(0))},
                                         {Rational(1)});
  bad_nu.nu = Rational(5);
  EXPECT_THROW(separate(bad_nu), Error);
}

TEST(Strategy, Names) {
  EXPECT_EQ(parse_strategy("first-removable"), PivotStrategy::FirstRemovable);
  EXPECT_EQ(strategy_name(parse_strategy("last-removable")), "last-removable");
  EXPECT_THROW(parse_strategy("middle"), Error);
}

TEST(Decompose, LinePair) {
  const auto d = decompose(testing::line_pair());
  // points sorted: p0 = -1 (X_p {1}), p1 = 0 (X_p {0})
  EXPECT_EQ(d.terms, (std::vector<Term>{{1, {0}, Rational(1)}, {0, {1}, Rational(-1)}}));
}

TEST(Decompose, CentralIsASingleTerm) {
  const auto d = decompose(testing::central());
  EXPECT_EQ(d.terms, (std::vector<Term>{{0, {0, 1, 2}, Rational(1)}}));
  EXPECT_EQ(d.stats.separations, 0u);
}

TEST(Decompose, Triangle) {
  for (auto s : {PivotStrategy::LastRemovable, PivotStrategy::FirstRemovable}) {
    const auto d = decompose(testing::triangle(), s);
    EXPECT_EQ(d.terms, (std::vector<Term>{{0, {0, 1}, Rational(-1)},
                                          {1, {0, 2}, Rational(1)},
                                          {2, {1, 2}, Rational(1)}}));
  }
}

TEST(Decompose, RepeatedFactor) {
  const auto d = decompose(testing::doubled());
  EXPECT_EQ(d.terms, (std::vector<Term>{{0, {0, 1}, Rational(1)}}));
}

TEST(Decompose, RepeatedFactorWithAnotherPole) {
  // 1/(x^2 (x-1)) = -1/x^2 - 1/x + 1/(x-1)
  const auto in = ArrangementInput::validate(ArrangementInput(
      1, {form({1}, Rational(0)), form({1}, Rational(0)), form({1}, Rational(-1))}));
  const auto d = decompose(in);
  EXPECT_TRUE(verify_identity(d).passed);
  EXPECT_TRUE(verify_residues(d).passed);
  for (const auto& t : d.terms) {
    const auto& xp = d.points[t.point_index].xp;
    EXPECT_TRUE(std::includes(xp.begin(), xp.end(), t.ell.begin(), t.ell.end()));
  }
}

TEST(Decompose, FourFormsBothStrategiesSatisfyTheIdentity) {
  for (auto s : {PivotStrategy::LastRemovable, PivotStrategy::FirstRemovable}) {
    const auto d = decompose(testing::four_forms(), s);
    EXPECT_TRUE(verify_identity(d).passed) << strategy_name(s);
    EXPECT_TRUE(verify_residues(d).passed) << strategy_name(s);
    EXPECT_EQ(d.stats.nu_checks, d.stats.separations);
    EXPECT_GT(d.stats.separations, 0u);
  }
}

TEST(Decompose, DeterministicUnderAFixedStrategy) {
  testing::InputGenerator gen(31);
  for (int trial = 0; trial < 30; ++trial) {
    const auto in = gen.next();
    EXPECT_EQ(decompose(in).terms, decompose(in).terms);
  }
}

TEST(Decompose, TermsAreWellFormedOnRandomInputs) {
  testing::InputGenerator gen(77);
  for (int trial = 0; trial < 100; ++trial) {
    const auto in = gen.next();
    for (auto s : {PivotStrategy::LastRemovable, PivotStrategy::FirstRemovable}) {
      const auto d = decompose(in, s);
      for (std::size_t k = 1; k < d.terms.size(); ++k) {
        EXPECT_LT(d.terms[k - 1].ell, d.terms[k].ell);
      }
      for (const auto& t : d.terms) {
        EXPECT_FALSE(t.coeff.is_zero());
        EXPECT_TRUE(in.spans(t.ell));
        const auto& xp = d.points.at(t.point_index).xp;
        EXPECT_TRUE(std::includes(xp.begin(), xp.end(), t.ell.begin(), t.ell.end()));
      }
      // the X_p term carries the closed-form residue
      for (std::size_t k = 0; k < d.points.size(); ++k) {
        const auto it = std::find_if(d.terms.begin(), d.terms.end(), [&](const Term& t) {
          return t.point_index == k && t.ell == d.points[k].xp;
        });
        ASSERT_NE(it, d.terms.end());
        EXPECT_EQ(it->coeff, residue_coefficient(in, d.points[k]));
      }
    }
  }
}

TEST(ResidueCoefficient, Examples) {
  const auto cen = testing::central();
  EXPECT_EQ(residue_coefficient(cen, enumerate_points(cen)[0]), Rational(1));

  const auto line = testing::line_pair();
  const auto lp = enumerate_points(line);
  EXPECT_EQ(residue_coefficient(line, lp[1]), Rational(1));   // p = 0
  EXPECT_EQ(residue_coefficient(line, lp[0]), Rational(-1));  // p = -1

  const auto tri = testing::triangle();
  const auto tp = enumerate_points(tri);
  EXPECT_EQ(residue_coefficient(tri, tp[0]), Rational(-1));
  EXPECT_EQ(residue_coefficient(tri, tp[1]), Rational(1));
  EXPECT_EQ(residue_coefficient(tri, tp[2]), Rational(1));
}

TEST(PointPolynomials, GenericAndCentralAreConstants) {
  const auto tri = point_polynomials(decompose(testing::triangle()));
  ASSERT_EQ(tri.size(), 3u);
  EXPECT_EQ(tri[0].cp, MultiPoly::constant(2, Rational(-1)));
  EXPECT_EQ(tri[1].cp, MultiPoly::constant(2, Rational(1)));
  EXPECT_EQ(tri[2].cp, MultiPoly::constant(2, Rational(1)));

  const auto cen = point_polynomials(decompose(testing::central()));
  ASSERT_EQ(cen.size(), 1u);
  EXPECT_TRUE(cen[0].cp.is_one());
}

TEST(PointPolynomials, FourFormsHaveLowDegreeAndSatisfyThePointForm) {
  for (auto s : {PivotStrategy::LastRemovable, PivotStrategy::FirstRemovable}) {
    const auto d = decompose(testing::four_forms(), s);
    const auto cps = point_polynomials(d);
    const auto origin = std::find_if(d.points.begin(), d.points.end(), [](const auto& p) {
      return p.coords == RatVector{Rational(0), Rational(0)};
    });
    ASSERT_NE(origin, d.points.end());
    EXPECT_LE(cps[origin - d.points.begin()].cp.total_degree(), 1);
    EXPECT_TRUE(verify_point_form(cps, d.input, d.points));
  }
}

}  // namespace
}  // namespace pfrac
