#include "gl/fixedpoint.hpp"

#include <gtest/gtest.h>

#include "gl/trace.hpp"
#include "support/test_support.hpp"

namespace gl {
namespace {

void expect_certificate(const FormulaPtr& tmpl, const FixedPointResult& r) {
  EXPECT_TRUE(r.certificate_checked);
  EXPECT_TRUE(equivalent(r.fixed_point, substitute(tmpl, "p", r.fixed_point)))
      << render(tmpl);
}

TEST(FixedPoint, KnownFixedPoints) {
  {
    const FormulaPtr tmpl = parse("~[]p");
    const FixedPointResult r = fixed_point(tmpl, "p");
    expect_certificate(tmpl, r);
    EXPECT_TRUE(equivalent(r.fixed_point, parse("~[]bot")));
  }
  {
    const FormulaPtr tmpl = parse("[]p");
    const FixedPointResult r = fixed_point(tmpl, "p");
    expect_certificate(tmpl, r);
    EXPECT_TRUE(equivalent(r.fixed_point, parse("~bot")));
    EXPECT_EQ(r.iterations, 0);
  }
  {
    const FormulaPtr tmpl = parse("[]p -> []bot");
    const FixedPointResult r = fixed_point(tmpl, "p");
    expect_certificate(tmpl, r);
    EXPECT_TRUE(equivalent(r.fixed_point, parse("[][]bot -> []bot")));
    EXPECT_EQ(r.iterations, 2);
  }
}

TEST(FixedPoint, RejectsUnmodalizedTemplates) {
  EXPECT_THROW(fixed_point(parse("p"), "p"), NotModalized);
  EXPECT_THROW(fixed_point(parse("p -> []p"), "p"), NotModalized);
}

TEST(FixedPoint, CertificateUniversality) {
  test::FormulaGen gen(0xcef);
  for (int i = 0; i < 50; ++i) {
    const FormulaPtr tmpl = gen.modalized_template("p", 3, 8, {"q"});
    ASSERT_TRUE(is_modalized_in(tmpl, "p"));
    const FixedPointResult r = fixed_point(tmpl, "p");
    EXPECT_TRUE(r.certificate_checked) << render(tmpl);
    // Iterative halt within the bound, or the structural fallback (bound+1).
    EXPECT_LE(r.iterations, modal_depth(tmpl) + 3);
    EXPECT_TRUE(equivalent(r.fixed_point, substitute(tmpl, "p", r.fixed_point)))
        << render(tmpl);
  }
}

TEST(FixedPoint, UniquenessAcrossRuns) {
  test::FormulaGen gen(0xd0b1e);
  for (int i = 0; i < 10; ++i) {
    const FormulaPtr tmpl = gen.modalized_template("p", 3, 7, {});
    const FixedPointResult a = fixed_point(tmpl, "p");
    const FixedPointResult b = fixed_point(tmpl, "p");
    EXPECT_TRUE(equal(a.fixed_point, b.fixed_point));
    EXPECT_TRUE(equivalent(a.fixed_point, b.fixed_point));
  }
}

TEST(FixedPoint, LetterlessTemplatesGiveLetterlessPoints) {
  test::FormulaGen gen(0x1e7);
  for (int i = 0; i < 30; ++i) {
    const FormulaPtr tmpl = gen.modalized_template("p", 3, 8, {});
    const FixedPointResult r = fixed_point(tmpl, "p");
    EXPECT_TRUE(is_letterless(r.fixed_point)) << render(tmpl);
  }
}

TEST(FixedPoint, StructuralFallbackWhenIterationBudgetExhausted) {
  FixedPointOptions opts;
  opts.max_iterations = 0;
  const FormulaPtr tmpl = parse("[]p -> []bot");
  const FixedPointResult r = fixed_point(tmpl, "p", opts);
  expect_certificate(tmpl, r);
  EXPECT_TRUE(equivalent(r.fixed_point, parse("[][]bot -> []bot")));
  EXPECT_EQ(r.iterations, 1);  // one application spent before the fallback
}

TEST(FixedPoint, DivergentIterationTemplates) {
  // The iterates of this template climb an unbounded consistency tower, so
  // only the structural construction can finish; its fixed point is bot.
  {
    const FormulaPtr tmpl = parse("~[][]~p");
    const FixedPointResult r = fixed_point(tmpl, "p");
    expect_certificate(tmpl, r);
    EXPECT_TRUE(equivalent(r.fixed_point, parse("bot")));
  }
  // Classical solved forms: the plain diagonal sentence and the
  // parameterized one.
  {
    const FixedPointResult r = fixed_point(parse("~[](q & ~p)"), "p");
    EXPECT_TRUE(r.certificate_checked);
    EXPECT_TRUE(equivalent(r.fixed_point, parse("~[]q")));
  }
  {
    const FixedPointResult r = fixed_point(parse("[]p -> q"), "p");
    EXPECT_TRUE(r.certificate_checked);
    EXPECT_TRUE(equivalent(r.fixed_point, parse("[]q -> q")));
  }
}

TEST(Liar, LawAndFrozenShape) {
  for (int n = 1; n <= 4; ++n) {
    const auto [f, c] = liar(n);
    const Trace t = c.trace;
    for (std::size_t i = 0; i <= static_cast<std::size_t>(n) + 1; ++i) {
      EXPECT_EQ(t.at(i), static_cast<int>(i) != n) << "n=" << n << " i=" << i;
    }
    EXPECT_TRUE(c.classically_true);
    EXPECT_EQ(c.smallest_n, n + 1);
    EXPECT_EQ(smallest_n(Formula::neg(f)), 1);
  }
  const auto [l1, c1] = liar(1);
  EXPECT_TRUE(equal(l1, parse("([]bot & ~bot) | ~[][]bot")));
  EXPECT_EQ(c1.category, (Category{CategoryKind::BetaPlus, 2}));
}

TEST(GodelLiar, Examples) {
  {
    const auto [f, c] = godel_liar(1);
    EXPECT_TRUE(equal(f, parse("~[]bot")));
    EXPECT_TRUE(c.classically_true);
    EXPECT_EQ(c.smallest_n, 1);
    EXPECT_EQ(c.category, (Category{CategoryKind::BetaPlus, 1}));
  }
  {
    const auto [f, c] = godel_liar(3);
    EXPECT_TRUE(c.classically_true);
    EXPECT_EQ(c.smallest_n, 1);
    EXPECT_TRUE(equal(f, Formula::neg(box_tower(3))));
  }
  {
    const auto [f, c] = godel_liar(2);
    (void)c;
    const Classification neg_c = classify(Formula::neg(f));
    EXPECT_EQ(neg_c.smallest_n, 3);
  }
  EXPECT_THROW(godel_liar(0), std::invalid_argument);
  EXPECT_THROW(liar(0), std::invalid_argument);
}

}  // namespace
}  // namespace gl
