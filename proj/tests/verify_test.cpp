#include <gtest/gtest.h>

#include <set>

#include "oracles.hpp"
#include "schmidt/bijections.hpp"
#include "schmidt/enumerate.hpp"
#include "schmidt/error.hpp"
#include "schmidt/verify.hpp"

namespace schmidt::verify {
namespace {

using qseries::Box;
using qseries::Monomial;
using qseries::TruncatedSeries;

ErrorCode code_of(auto&& fn) {
  try {
    fn();
  } catch (const Error& e) {
    return e.code();
  }
  ADD_FAILURE() << "no Error thrown";
  return ErrorCode::kUnknownTheorem;
}

Partition P(std::initializer_list<long long> v) { return make_partition(v); }

long long coeff(const TruncatedSeries& f, std::vector<int> e) {
  return f.coefficient(e);
}

const CheckOptions kFault{.inject_fault = true};

TEST(TheoremIds, NamesRoundtrip) {
  const auto ids = all_theorem_ids();
  EXPECT_EQ(ids.size(), 22u);
  std::set<std::string_view> names;
  for (TheoremId id : ids) {
    names.insert(to_string(id));
    EXPECT_EQ(parse_theorem_id(to_string(id)), id);
  }
  EXPECT_EQ(names.size(), ids.size());
  EXPECT_EQ(parse_theorem_id("schmidt"), TheoremId::kSchmidt);
  EXPECT_EQ(parse_theorem_id("thm3.1"), TheoremId::kDistinctOddWeight);
  EXPECT_EQ(code_of([] { parse_theorem_id("thm99"); }),
            ErrorCode::kUnknownTheorem);
}

TEST(LhsSeries, DistinctOddWeightLowOrder) {
  const Box box{{"q", 3}, {"z", 6}};
  const auto f = lhs_series(TheoremId::kDistinctOddWeight, {}, box);
  for (int c = 0; c <= 6; ++c) {
    EXPECT_EQ(coeff(f, {3, c}), (c >= 3 && c <= 5) ? 1 : 0) << c;
  }
}

TEST(LhsSeries, FirstPartOddWeightExample) {
  const Box box{{"q", 4}, {"z", 4}};
  // (1) and (1,1) both have first part 1 and odd-index weight 1.
  EXPECT_EQ(coeff(lhs_series(TheoremId::kFirstPartOddWeight, {}, box), {1, 1}),
            2);
}

TEST(LhsSeries, ZeroBoxIsTheEmptyPartition) {
  for (TheoremId id : all_theorem_ids()) {
    if (!is_series_identity(id)) continue;
    const Params params{.t = 2, .r = 2, .n = 2};
    const Box box = identity_box(id, params, {.q = 0, .z = 0, .s = 0});
    const auto f = lhs_series(id, params, box);
    // The empty partition has length 0, which sits in the class of 4.1.
    const long long expected = id == TheoremId::kHookClassOdd ? 0 : 1;
    EXPECT_EQ(f.coefficient(std::vector<int>(box.dimension(), 0)), expected)
        << to_string(id);
  }
}

TEST(RhsSeries, SizeTrackedLowOrder) {
  const Box box{{"q", 3}, {"z", 3}, {"s", 4}};
  const auto f = rhs_series(TheoremId::kSizeTracked, {.t = 2, .r = 2}, box);
  EXPECT_EQ(coeff(f, {1, 1, 2}), 1);
}

TEST(RhsSeries, ProgressionWeightSpecializesToFirstPart) {
  const Box box{{"q", 10}, {"z", 10}};
  for (const bool lhs : {false, true}) {
    const auto series = [&](TheoremId id, const Params& p) {
      return lhs ? lhs_series(id, p, box) : rhs_series(id, p, box);
    };
    EXPECT_EQ(series(TheoremId::kProgressionWeight, {.t = 2, .r = 1}),
              series(TheoremId::kFirstPartOddWeight, {}));
    EXPECT_EQ(series(TheoremId::kProgressionWeight, {.t = 2, .r = 2}),
              series(TheoremId::kFirstPartEvenWeight, {}));
  }
}

TEST(RhsSeries, ComplementWeightMatchesFirstPartOddWeight) {
  const Box box{{"q", 8}, {"z", 8}};
  const Params p{.t = 2, .r = 2};
  const auto reference = rhs_series(TheoremId::kFirstPartOddWeight, {}, box);
  EXPECT_EQ(rhs_series(TheoremId::kComplementWeight, p, box), reference);
  EXPECT_EQ(lhs_series(TheoremId::kComplementWeight, p, box), reference);
}

TEST(RhsSeries, SizeTrackedMarginalizesToProgressionWeight) {
  // s counts |lambda| <= (r-1) * z + t * q, so S = 9 covers q, z <= 3.
  const int Q = 3;
  const int Z = 3;
  for (int t = 1; t <= 2; ++t) {
    for (int r = 1; r <= 2; ++r) {
      const int S = (r - 1) * Z + t * Q;
      const Box full{{"q", Q}, {"z", Z}, {"s", S}};
      const Box flat{{"q", Q}, {"z", Z}};
      const auto f = rhs_series(TheoremId::kSizeTracked, {.t = t, .r = r}, full);
      const auto g =
          rhs_series(TheoremId::kProgressionWeight, {.t = t, .r = r}, flat);
      for (int a = 0; a <= Q; ++a) {
        for (int c = 0; c <= Z; ++c) {
          long long total = 0;
          for (int b = 0; b <= S; ++b) total += coeff(f, {a, c, b});
          ASSERT_EQ(total, coeff(g, {a, c})) << t << r << " q" << a << " z" << c;
        }
      }
    }
  }
}

TEST(RhsSeries, ColorWeightsAtOneColorIsPartitionCount) {
  const Box box{{"q", 10}, {"z1", 10}};
  const auto f = rhs_series(TheoremId::kColorWeights, {.t = 1}, box);
  for (int n = 0; n <= 10; ++n) {
    long long total = 0;
    for (int c = 0; c <= 10; ++c) total += coeff(f, {n, c});
    EXPECT_EQ(total, oracle::partition_count(n));
  }
}

TEST(RhsSeries, ComplementWeightRejectsOneColor) {
  const Box box{{"q", 4}, {"z", 4}};
  EXPECT_EQ(code_of([&] {
              rhs_series(TheoremId::kComplementWeight, {.t = 1, .r = 1}, box);
            }),
            ErrorCode::kDegenerateParams);
  EXPECT_EQ(code_of([&] {
              lhs_series(TheoremId::kComplementWeight, {.t = 1, .r = 1}, box);
            }),
            ErrorCode::kUnboundedBox);
}

TEST(VerifyIdentity, AcceptanceBoxesPass) {
  for (TheoremId id : {TheoremId::kDistinctOddWeight,
                       TheoremId::kDistinctEvenWeight, TheoremId::kLengthAnalog,
                       TheoremId::kHookClassEven, TheoremId::kHookClassOdd,
                       TheoremId::kFirstPartOddWeight,
                       TheoremId::kFirstPartEvenWeight}) {
    const auto r = verify_identity(id, {}, identity_box(id, {}));
    EXPECT_TRUE(r.passed()) << to_string(id);
    EXPECT_GE(r.coefficients_checked, r.box.volume());
  }
}

TEST(VerifyIdentity, ReportShape) {
  const auto box = identity_box(TheoremId::kDistinctOddWeight, {});
  EXPECT_EQ(box, (Box{{"q", 12}, {"z", 24}}));
  const auto r = verify_identity(TheoremId::kDistinctOddWeight, {}, box);
  EXPECT_EQ(r.id, TheoremId::kDistinctOddWeight);
  EXPECT_EQ(r.coefficients_checked, 13 * 25);
  EXPECT_FALSE(r.first_mismatch.has_value());
}

TEST(VerifyIdentity, InjectedFaultReportsFirstMonomial) {
  const Box box{{"q", 12}, {"z", 12}};
  const auto r =
      verify_identity(TheoremId::kFirstPartOddWeight, {}, box, kFault);
  ASSERT_FALSE(r.passed());
  const Mismatch& m = *r.first_mismatch;
  EXPECT_EQ(m.at, (std::vector<std::pair<std::string, long long>>{{"q", 5},
                                                                  {"z", 0}}));
  EXPECT_EQ(m.lhs, 0);
  EXPECT_EQ(m.rhs, 1);
}

TEST(VerifyIdentity, RejectsWrongLayout) {
  EXPECT_EQ(code_of([] {
              verify_identity(TheoremId::kSizeTracked, {.t = 2, .r = 2},
                              Box{{"q", 3}, {"z", 3}});
            }),
            ErrorCode::kBoxMismatch);
  EXPECT_EQ(code_of([] { verify_identity(TheoremId::kLiYee, {}, Box{}); }),
            ErrorCode::kUnknownTheorem);
}

TEST(VerifyIdentity, SmallParameterSweep) {
  for (int t = 1; t <= 3; ++t) {
    for (int r = 1; r <= 3; ++r) {
      const Params p{.t = t, .r = r};
      const auto a = verify_identity(
          TheoremId::kSizeTracked, p,
          identity_box(TheoremId::kSizeTracked, p, {.q = 6, .z = 6, .s = 8}));
      EXPECT_TRUE(a.passed()) << t << r;
      const auto b = verify_identity(
          TheoremId::kProgressionWeight, p,
          identity_box(TheoremId::kProgressionWeight, p, {.q = 6, .z = 6}));
      EXPECT_TRUE(b.passed()) << t << r;
    }
  }
}

TEST(SchmidtRefinement, SmallCases) {
  EXPECT_TRUE(verify_schmidt_refinement(0).passed());
  EXPECT_TRUE(verify_schmidt_refinement(15).passed());
  EXPECT_FALSE(verify_schmidt_refinement(6, kFault).passed());
  // n = 5: seven partitions and seven distinct partitions of weight 5.
  long long distinct = 0;
  for (int size = 0; size <= 10; ++size) {
    for (const auto& l : enumerate_partitions(size, {.distinct = true})) {
      distinct += schmidt_weight(l, 2, 1) == 5;
    }
  }
  EXPECT_EQ(distinct, 7);
  // n = 7 with one part: the only distinct partition of weight 7, size 13.
  std::vector<Partition> hits;
  for (const auto& l : enumerate_partitions(13, {.distinct = true})) {
    if (schmidt_weight(l, 2, 1) == 7) hits.push_back(l);
  }
  EXPECT_EQ(hits, std::vector<Partition>{P({7, 6})});
}

TEST(Schmidt, PassesAndDetectsFault) {
  const auto r = verify_schmidt(15);
  EXPECT_TRUE(r.passed());
  EXPECT_GT(r.coefficients_checked, 0);
  EXPECT_FALSE(verify_schmidt(8, kFault).passed());
}

TEST(EulerRefinement, PassesAndDetectsFault) {
  EXPECT_TRUE(verify_euler_refinement(18).passed());
  EXPECT_FALSE(verify_euler_refinement(5, kFault).passed());
}

TEST(BessenrodtTable, Rows) {
  const std::vector<BessenrodtRow> expected{
      {7, P({7}), P({1, 1, 1, 1, 1, 1, 1})},
      {6, P({6, 1}), P({3, 1, 1, 1, 1})},
      {5, P({5, 2}), P({5, 1, 1})},
      {5, P({4, 2, 1}), P({3, 3, 1})},
      {4, P({4, 3}), P({7})},
  };
  EXPECT_EQ(table_bessenrodt(7), expected);
  EXPECT_TRUE(verify_bessenrodt_table().passed());
  EXPECT_FALSE(verify_bessenrodt_table(kFault).passed());
}

TEST(LengthClasses, PartitionTheDistinctPartitions) {
  EXPECT_TRUE(verify_length_classes(24).passed());
  EXPECT_FALSE(verify_length_classes(12, kFault).passed());
}

TEST(LiYee, PassesForSmallPalettes) {
  for (int t = 1; t <= 3; ++t) {
    EXPECT_TRUE(verify_li_yee(t, 8).passed()) << t;
  }
  EXPECT_FALSE(verify_li_yee(2, 5, kFault).passed());
}

TEST(LiYee, SixPartInstanceClassCount) {
  // (4,4,3,3,3,3) at t = 3: weight 4 + 3 = 7, length 6 = (2 - 1) * 3 + 3.
  const Partition lambda = P({4, 4, 3, 3, 3, 3});
  EXPECT_EQ(schmidt_weight(lambda, 3, 1), 7);
  long long partitions = 0;
  for (int size = 0; size <= 21; ++size) {
    for (const auto& p : enumerate_partitions(size)) {
      partitions += p.length() == 6 && schmidt_weight(p, 3, 1) == 7;
    }
  }
  // Colored side: largest color multiplicity 2, attained last by color 3.
  long long colored = 0;
  for (const auto& mu : enumerate_colored(7, 3)) {
    const int c1 = mu.color_count(1);
    const int c2 = mu.color_count(2);
    const int c3 = mu.color_count(3);
    colored += c3 == 2 && c1 <= 2 && c2 <= 2;
  }
  EXPECT_GT(partitions, 0);
  EXPECT_EQ(partitions, colored);
}

TEST(LiYee, ReferenceImageClass) {
  // The other bijection's printed image of (4,4,3,3,3,3) at t = 3.
  const ColoredPartition image({{3, 3}, {3, 3}, {1, 2}}, 3);
  EXPECT_EQ(image.size(), 7);
  EXPECT_EQ(image.color_count(3), 2);
  EXPECT_EQ(image.color_count(2), 1);
  EXPECT_EQ(image.color_count(1), 0);
}

TEST(ColorConjugateCounts, PassAndFault) {
  EXPECT_TRUE(verify_color_conjugate(3, 4, 12, 6).passed());
  EXPECT_TRUE(verify_color_conjugate(2, 2, 12, 6).passed());
  EXPECT_FALSE(verify_color_conjugate(2, 2, 8, 4, kFault).passed());
}

TEST(OppositeSchmidt, PassesAndRejectsOneColor) {
  for (int t = 2; t <= 3; ++t) {
    for (int r = 2; r <= 3; ++r) {
      EXPECT_TRUE(verify_opposite_schmidt(t, r, 6, 10).passed()) << t << r;
    }
  }
  EXPECT_FALSE(verify_opposite_schmidt(2, 2, 4, 6, kFault).passed());
  EXPECT_EQ(code_of([] { verify_opposite_schmidt(1, 2, 3, 3); }),
            ErrorCode::kDegenerateParams);
}

TEST(Recurrence, LowOrderAndAgreement) {
  const Box box{{"q", 8}, {"s", 12}};
  EXPECT_EQ(f_recurrence(0, 2, box), TruncatedSeries::one(box));
  const auto f1 = f_recurrence(1, 2, box);
  EXPECT_EQ(f1, f_enumerated(1, 2, box));
  // Columns of 1s: (1^k) has weight ceil(k / 2) and size k.
  for (int k = 1; k <= 12; ++k) {
    EXPECT_EQ(coeff(f1, {(k + 1) / 2, k}), 1) << k;
  }
  EXPECT_TRUE(verify_recurrence(2, 6, box).passed());
  EXPECT_TRUE(verify_recurrence(3, 4, Box{{"q", 6}, {"s", 12}}).passed());
  EXPECT_FALSE(verify_recurrence(2, 3, box, kFault).passed());
}

TEST(Recurrence, NeedsRoomForBinomials) {
  EXPECT_EQ(code_of([] { f_recurrence(4, 3, Box{{"q", 4}, {"s", 2}}); }),
            ErrorCode::kBoxTooSmall);
}

TEST(FunctionalEquation, PassAndFault) {
  const Box box{{"q", 6}, {"z", 4}, {"s", 10}};
  const auto r = verify_functional_equation(2, box);
  EXPECT_TRUE(r.passed());
  EXPECT_EQ(r.coefficients_checked, 7 * 5 * 11);
  const auto bad = verify_functional_equation(2, box, kFault);
  ASSERT_FALSE(bad.passed());
  EXPECT_FALSE(bad.first_mismatch->at.empty());
  EXPECT_TRUE(verify_functional_equation(3, Box{{"q", 4}, {"z", 3}, {"s", 9}})
                  .passed());
}

TEST(HookMapCheck, PassAndFault) {
  EXPECT_TRUE(verify_hook_map(14).passed());
  EXPECT_FALSE(verify_hook_map(6, kFault).passed());
}

TEST(Suite, QuickPassesAndIsThreadIndependent) {
  const SuiteReport one = run_suite(SuiteLevel::kQuick);
  ASSERT_TRUE(one.passed());
  const SuiteReport three = run_suite(SuiteLevel::kQuick, {.threads = 3});
  ASSERT_EQ(one.reports.size(), three.reports.size());
  for (std::size_t i = 0; i < one.reports.size(); ++i) {
    EXPECT_EQ(one.reports[i].id, three.reports[i].id);
    EXPECT_EQ(one.reports[i].params, three.reports[i].params);
    EXPECT_EQ(one.reports[i].coefficients_checked,
              three.reports[i].coefficients_checked);
  }
  std::set<TheoremId> covered;
  for (const auto& r : one.reports) covered.insert(r.id);
  EXPECT_EQ(covered.size(), all_theorem_ids().size());
}

TEST(Suite, EveryFaultIsCaughtAndNamed) {
  for (TheoremId id : all_theorem_ids()) {
    const SuiteReport report = run_suite(SuiteLevel::kQuick, {.faulted = {id}});
    EXPECT_FALSE(report.passed()) << to_string(id);
    for (const auto& r : report.reports) {
      EXPECT_EQ(r.passed(), r.id != id)
          << "faulted " << to_string(id) << ", report " << to_string(r.id);
    }
  }
}

}  // namespace
}  // namespace schmidt::verify
