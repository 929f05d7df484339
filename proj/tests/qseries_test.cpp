#include <gtest/gtest.h>

#include <random>

#include "oracles.hpp"
#include "schmidt/enumerate.hpp"
#include "schmidt/error.hpp"
#include "schmidt/qseries.hpp"

namespace schmidt::qseries {
namespace {

ErrorCode code_of(auto&& fn) {
  try {
    fn();
  } catch (const Error& e) {
    return e.code();
  }
  ADD_FAILURE() << "no Error thrown";
  return ErrorCode::kUnknownTheorem;
}

const Monomial q = Monomial::variable("q");
const Monomial z = Monomial::variable("z");
const Monomial s = Monomial::variable("s");

TruncatedSeries M(const Box& box, const Monomial& m, long long c = 1) {
  return TruncatedSeries::from_monomial(box, m, c);
}

TruncatedSeries random_series(const Box& box, std::mt19937& rng,
                              bool unit_constant) {
  std::uniform_int_distribution<int> coeff(-3, 3);
  TruncatedSeries f(box);
  for (const Exponents& e : graded_lex_order(box)) f.add_term(e, coeff(rng));
  if (unit_constant) {
    const Exponents zero(box.dimension(), 0);
    f.add_term(zero, 1 - f.coefficient(zero));
  }
  return f;
}

TEST(Box, Basics) {
  const Box box{{"q", 3}, {"z", 2}};
  EXPECT_EQ(box.dimension(), 2u);
  EXPECT_EQ(box.volume(), 12);
  EXPECT_EQ(box.bound("z"), 2);
  EXPECT_EQ(box.index_of("z"), 1u);
  EXPECT_FALSE(box.index_of("s").has_value());
  EXPECT_TRUE(box.contains(std::vector<int>{3, 2}));
  EXPECT_FALSE(box.contains(std::vector<int>{4, 0}));
  EXPECT_EQ(code_of([&] { box.bound("s"); }), ErrorCode::kBoxMismatch);
}

TEST(Monomial, Arithmetic) {
  const Monomial m = q.pow(2) * z;
  EXPECT_EQ(m.exponent("q"), 2);
  EXPECT_EQ(m.exponent("s"), 0);
  EXPECT_TRUE(Monomial{}.is_constant());
  EXPECT_TRUE(q.pow(0).is_constant());
  EXPECT_EQ(to_string(m), "q^2*z");
  EXPECT_EQ(to_string(Monomial{}), "1");
  const Box box{{"q", 2}, {"z", 2}};
  EXPECT_EQ(m.in_box(box), (Exponents{2, 1}));
  EXPECT_FALSE(q.pow(3).in_box(box).has_value());
  EXPECT_EQ(code_of([&] { s.in_box(box); }), ErrorCode::kBoxMismatch);
}

TEST(Series, CoefficientAndOutOfBox) {
  const Box box{{"q", 2}, {"z", 2}};
  TruncatedSeries f = TruncatedSeries::one(box);
  f.add_term(q * z, 4);
  f.add_term(q.pow(5), 9);  // silently outside
  EXPECT_EQ(f.coefficient(q * z), 4);
  EXPECT_EQ(f.coefficient(std::vector<int>{0, 0}), 1);
  EXPECT_EQ(f.term_count(), 2u);
  EXPECT_EQ(code_of([&] { f.coefficient(std::vector<int>{3, 0}); }),
            ErrorCode::kOutOfBox);
}

TEST(Series, MulExamples) {
  const Box box{{"q", 2}, {"z", 2}};
  const TruncatedSeries f = TruncatedSeries::one(box) + M(box, q * z);
  const TruncatedSeries sq = mul(f, f);
  EXPECT_EQ(to_string(sq), "1 + 2*q*z + q^2*z^2");
  EXPECT_EQ(mul(f, TruncatedSeries::one(box)), f);
}

TEST(Series, TelescopingInBox) {
  const int B = 6;
  const Box box{{"q", B}};
  TruncatedSeries geometric(box);
  for (int k = 0; k <= B; ++k) geometric.add_term(q.pow(k), 1);
  const TruncatedSeries one_minus_q = TruncatedSeries::one(box) - M(box, q);
  EXPECT_EQ(one_minus_q * geometric, TruncatedSeries::one(box));
}

TEST(Series, BoxMismatch) {
  const TruncatedSeries a = TruncatedSeries::one(Box{{"q", 2}});
  const TruncatedSeries b = TruncatedSeries::one(Box{{"q", 3}});
  const TruncatedSeries c = TruncatedSeries::one(Box{{"z", 2}});
  EXPECT_EQ(code_of([&] { add(a, b); }), ErrorCode::kBoxMismatch);
  EXPECT_EQ(code_of([&] { mul(a, c); }), ErrorCode::kBoxMismatch);
  EXPECT_EQ(code_of([&] { first_mismatch(a, b); }), ErrorCode::kBoxMismatch);
}

TEST(Series, RingLawsOnRandomSeries) {
  std::mt19937 rng(7);
  const Box box{{"q", 4}, {"z", 3}, {"s", 2}};
  for (int trial = 0; trial < 20; ++trial) {
    const auto f = random_series(box, rng, false);
    const auto g = random_series(box, rng, false);
    const auto h = random_series(box, rng, false);
    ASSERT_EQ(f * g, g * f);
    ASSERT_EQ((f * g) * h, f * (g * h));
    ASSERT_EQ(f * (g + h), f * g + f * h);
    ASSERT_EQ(f + g, g + f);
    ASSERT_EQ(f - f, TruncatedSeries(box));
    ASSERT_EQ(3 * f, f + f + f);
  }
}

TEST(Series, ProductMatchesNaiveConvolution) {
  std::mt19937 rng(11);
  const Box box{{"q", 3}, {"z", 4}};
  const auto f = random_series(box, rng, false);
  const auto g = random_series(box, rng, false);
  const auto fg = f * g;
  for (int a = 0; a <= 3; ++a) {
    for (int b = 0; b <= 4; ++b) {
      long long expected = 0;
      for (int i = 0; i <= a; ++i) {
        for (int j = 0; j <= b; ++j) {
          expected += f.coefficient(std::vector<int>{i, j}) *
                      g.coefficient(std::vector<int>{a - i, b - j});
        }
      }
      ASSERT_EQ(fg.coefficient(std::vector<int>{a, b}), expected);
    }
  }
}

TEST(Invert, Geometric) {
  const Box box{{"q", 5}, {"z", 5}};
  const TruncatedSeries g = invert(TruncatedSeries::one(box) - M(box, q * z));
  for (int a = 0; a <= 5; ++a) {
    for (int b = 0; b <= 5; ++b) {
      EXPECT_EQ(g.coefficient(std::vector<int>{a, b}), a == b ? 1 : 0);
    }
  }
}

TEST(Invert, SquaredFactor) {
  const Box box{{"q", 8}, {"z", 8}};
  const TruncatedSeries f = pochhammer(q * z, q, 1, box);
  const TruncatedSeries g = invert(f * f);
  for (int a = 0; a <= 8; ++a) {
    EXPECT_EQ(g.coefficient(std::vector<int>{a, a}), a + 1);
  }
}

TEST(Invert, RandomUnitsAndNegativeConstant) {
  std::mt19937 rng(3);
  const Box box{{"q", 3}, {"z", 3}};
  for (int trial = 0; trial < 20; ++trial) {
    const auto f = random_series(box, rng, true);
    ASSERT_EQ(f * invert(f), TruncatedSeries::one(box));
    ASSERT_EQ(invert(invert(f)), f);
    ASSERT_EQ((-f) * invert(-f), TruncatedSeries::one(box));
  }
}

TEST(Invert, RejectsNonUnit) {
  const Box box{{"q", 3}};
  EXPECT_EQ(code_of([&] { invert(M(box, q)); }),
            ErrorCode::kNonUnitConstantTerm);
  EXPECT_EQ(code_of([&] { invert(M(box, Monomial{}, 2)); }),
            ErrorCode::kNonUnitConstantTerm);
}

TEST(Power, PositiveAndNegative) {
  const Box box{{"q", 6}};
  const auto f = TruncatedSeries::one(box) + M(box, q);
  EXPECT_EQ(power(f, 0), TruncatedSeries::one(box));
  EXPECT_EQ(power(f, 3), f * f * f);
  EXPECT_EQ(power(f, -2), invert(f * f));
}

TEST(Pochhammer, Examples) {
  const Box box{{"q", 6}, {"z", 3}};
  EXPECT_EQ(pochhammer(z, q, 0, box), TruncatedSeries::one(box));
  EXPECT_EQ(to_string(pochhammer(q, q, 2, box)), "1 - q - q^2 + q^3");
  EXPECT_EQ(code_of([&] { pochhammer_infinite(q, Monomial{}, box); }),
            ErrorCode::kDivergentInfiniteProduct);
}

TEST(Pochhammer, LowOrderDistinctOddWeightSeries) {
  const Box box{{"q", 3}, {"z", 6}};
  const auto f = invert(pochhammer_infinite(q * z, q * z.pow(2), box));
  EXPECT_EQ(to_string(f),
            "1 + q*z + q^2*z^2 + q^2*z^3 + q^3*z^3 + q^3*z^4 + q^3*z^5");
  EXPECT_EQ(f.coefficient(q.pow(3) * z.pow(4)), 1);
}

TEST(Pochhammer, SplitsAtAnyIndex) {
  const Box box{{"q", 10}, {"z", 5}};
  for (int a = 0; a <= 4; ++a) {
    for (int b = 0; b <= 4; ++b) {
      ASSERT_EQ(pochhammer(q * z, q, a + b, box),
                pochhammer(q * z, q, a, box) *
                    pochhammer(q * z * q.pow(a), q, b, box));
    }
  }
}

TEST(Pochhammer, InfiniteMatchesLongFinite) {
  const Box box{{"q", 9}, {"z", 4}};
  EXPECT_EQ(pochhammer_infinite(z * q, q, box), pochhammer(z * q, q, 50, box));
}

TEST(QBinomial, Examples) {
  const Box box{{"q", 8}};
  EXPECT_EQ(q_binomial(5, 0, "q", box), TruncatedSeries::one(box));
  EXPECT_EQ(to_string(q_binomial(4, 2, "q", box)),
            "1 + q + 2*q^2 + q^3 + q^4");
  EXPECT_EQ(code_of([&] { q_binomial(6, 3, "q", Box{{"q", 8}}); }),
            ErrorCode::kBoxTooSmall);
}

TEST(QBinomial, Symmetric) {
  const Box box{{"q", 16}};
  for (int n = 0; n <= 8; ++n) {
    for (int k = 0; k <= n; ++k) {
      ASSERT_EQ(q_binomial(n, k, "q", box), q_binomial(n, n - k, "q", box));
    }
  }
}

TEST(QBinomial, CountsPartitionsInARectangle) {
  const Box box{{"q", 36}};
  for (int a = 0; a <= 6; ++a) {
    for (int b = 0; b <= 6; ++b) {
      const auto g = q_binomial(a + b, b, "q", box);
      for (int n = 0; n <= a * b; ++n) {
        ASSERT_EQ(g.coefficient(std::vector<int>{n}),
                  oracle::rectangle_count(n, a, b))
            << a << "x" << b << " n=" << n;
      }
    }
  }
}

TEST(QBinomial, EmbedsInOtherVariables) {
  const Box box{{"q", 2}, {"s", 4}};
  const auto g = q_binomial(4, 2, "s", box);
  EXPECT_EQ(to_string(g), "1 + s + 2*s^2 + s^3 + s^4");
}

TEST(Substitute, Examples) {
  const Box box{{"q", 4}, {"z", 4}, {"s", 12}};
  const auto f = TruncatedSeries::one(box) + M(box, q * z);
  EXPECT_EQ(substitute(f, "z", Monomial{}, box),
            TruncatedSeries::one(box) + M(box, q));

  const auto geometric = invert(TruncatedSeries::one(box) - M(box, q * z));
  const auto sub = substitute(geometric, "z", s.pow(3) * q * z, box);
  const auto expected =
      invert(TruncatedSeries::one(box) - M(box, s.pow(3) * q.pow(2) * z));
  EXPECT_EQ(sub, expected);
  EXPECT_TRUE(sub.box_exact());
}

TEST(Substitute, FlagsLostExactness) {
  // z -> z^2 reads f only up to z^2; z -> 1 folds in every power of z.
  const Box box{{"q", 2}, {"z", 4}};
  const auto f = invert(TruncatedSeries::one(box) - M(box, z));
  const auto sub = substitute(f, "z", z.pow(2), box);
  EXPECT_TRUE(sub.box_exact());
  const auto shrink = substitute(f, "z", Monomial{}, box);
  EXPECT_FALSE(shrink.box_exact());
}

TEST(Mismatch, GradedLexOrder) {
  const Box box{{"q", 1}, {"z", 1}};
  const auto order = graded_lex_order(box);
  EXPECT_EQ(order, (std::vector<Exponents>{{0, 0}, {1, 0}, {0, 1}, {1, 1}}));
}

TEST(Mismatch, ReportsFirstDifference) {
  const Box box{{"q", 12}, {"z", 12}};
  const auto f = invert(power(pochhammer_infinite(q * z, q, box), 2));
  EXPECT_TRUE(equal_in_box(f, f));
  auto g = f;
  g.add_term(q.pow(5), 1);
  const auto m = first_mismatch(f, g);
  ASSERT_TRUE(m.has_value());
  EXPECT_EQ(m->exponents, (Exponents{5, 0}));
  EXPECT_EQ(m->lhs, 0);
  EXPECT_EQ(m->rhs, 1);
}

TEST(Series, ToString) {
  const Box box{{"q", 2}, {"z", 2}};
  EXPECT_EQ(to_string(TruncatedSeries(box)), "0");
  auto f = TruncatedSeries::one(box) + M(box, q * z) + M(box, q.pow(2) * z.pow(2), 2);
  EXPECT_EQ(to_string(f), "1 + q*z + 2*q^2*z^2");
  EXPECT_EQ(to_string(TruncatedSeries::one(box) - M(box, q.pow(2), 2)),
            "1 - 2*q^2");
}

TEST(Series, OverflowIsDetected) {
  const Box box{{"q", 1}};
  const auto big = M(box, Monomial{}, std::numeric_limits<long long>::max());
  EXPECT_EQ(code_of([&] { big + big; }), ErrorCode::kOverflow);
  EXPECT_EQ(code_of([&] { big * big; }), ErrorCode::kOverflow);
}

}  // namespace
}  // namespace schmidt::qseries
