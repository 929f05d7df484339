#include <algorithm>
#include <array>
#include <map>
#include <numeric>
#include <string>

#include "internal.hpp"
#include "schmidt/bijections.hpp"

namespace schmidt::verify {

using detail::CountTable;
using qseries::Box;
using qseries::Monomial;
using qseries::TruncatedSeries;

namespace {

constexpr int kNoLimit = 1 << 30;

// Records the first structural failure; lhs holds the expected value and
// rhs the observed one.
using Where = std::vector<std::pair<std::string, long long>>;

void fail_once(VerificationReport& report, std::string detail,
               long long expected = 1, long long observed = 0, Where at = {}) {
  if (report.first_mismatch) return;
  report.first_mismatch = Mismatch{.at = std::move(at),
                                   .lhs = expected,
                                   .rhs = observed,
                                   .detail = std::move(detail)};
}

void expect(VerificationReport& report, bool ok, const std::string& detail,
            const Where& at) {
  ++report.coefficients_checked;
  if (!ok) fail_once(report, detail, 1, 0, at);
}

void expect_equal(VerificationReport& report, long long expected,
                  long long observed, const std::string& detail,
                  const Where& at) {
  ++report.coefficients_checked;
  if (expected != observed) fail_once(report, detail, expected, observed, at);
}

void perturb(CountTable& table, bool inject) {
  if (!inject) return;
  if (table.empty()) {
    table[{0}] = 1;
  } else {
    ++table.begin()->second;
  }
}

long long odd_index_sum(const Partition& p) {
  long long total = 0;
  for (int i = 1; i <= p.length(); i += 2) total += p.part(i);
  return total;
}

long long even_index_sum(const Partition& p) {
  long long total = 0;
  for (int i = 2; i <= p.length(); i += 2) total += p.part(i);
  return total;
}

template <class Fn>
void for_each_partition_up_to(int size_max, Fn fn,
                              PartitionFilter filter = {}) {
  for (int n = 0; n <= size_max; ++n) {
    for (const Partition& p : enumerate_partitions(n, filter)) fn(p);
  }
}

std::string show(const Partition& p) { return to_string(p); }

}  // namespace

VerificationReport verify_schmidt(int n_max, const CheckOptions& options) {
  detail::require_params(n_max >= 0, "n_max must be nonnegative");
  detail::Stopwatch clock;
  VerificationReport report{.id = TheoremId::kSchmidt,
                            .params = {.n = n_max},
                            .box = Box{{"n", n_max}}};
  report.note = "mork invariants; partition counts vs distinct odd-index weight";

  for_each_partition_up_to(n_max, [&](const Partition& mu) {
    const Partition delta = mork(mu);
    const std::string at = " for " + show(mu);
    const Where where{{"n", mu.size()}};
    expect(report, delta.has_distinct_parts(), "mork image not distinct" + at, where);
    expect_equal(report, mu.size(), odd_index_sum(delta),
                 "odd-index sum of mork image" + at, where);
    expect_equal(report, mu.size() - mu.length(), even_index_sum(delta),
                 "even-index sum of mork image" + at, where);
    expect_equal(report, 2LL * mu.size() - mu.length(), delta.size(),
                 "size of mork image" + at, where);
    expect(report, mork_inverse(delta) == mu, "mork roundtrip" + at, where);
  });

  CountTable partitions;
  CountTable distinct;
  for (int n = 0; n <= n_max; ++n) {
    long long count = 0;
    for (const Partition& p : enumerate_partitions(n)) {
      (void)p;
      ++count;
    }
    partitions[{n}] = count;
  }
  detail::walk(
      detail::limits(2 * n_max, kNoLimit, kNoLimit, true),
      [&](auto parts) { return schmidt_weight(parts, 2, 1) <= n_max; },
      [&](auto parts) { ++distinct[{schmidt_weight(parts, 2, 1)}]; });
  perturb(distinct, options.inject_fault);
  detail::compare_counts(partitions, distinct, {"n"}, report);
  report.elapsed = clock.elapsed();
  return report;
}

VerificationReport verify_schmidt_refinement(int n_max,
                                             const CheckOptions& options) {
  detail::require_params(n_max >= 0, "n_max must be nonnegative");
  detail::Stopwatch clock;
  VerificationReport report{.id = TheoremId::kSchmidtRefinement,
                            .params = {.n = n_max},
                            .box = Box{{"n", n_max}, {"l", n_max}}};
  report.note = "partitions of n with l parts vs distinct partitions of "
                "odd-index weight n and size 2n - l";

  CountTable by_length;
  for_each_partition_up_to(n_max, [&](const Partition& p) {
    ++by_length[{p.size(), p.length()}];
  });
  CountTable by_size;
  detail::walk(
      detail::limits(2 * n_max, kNoLimit, kNoLimit, true),
      [&](auto parts) { return schmidt_weight(parts, 2, 1) <= n_max; },
      [&](auto parts) {
        const long long n = schmidt_weight(parts, 2, 1);
        const long long size = std::accumulate(parts.begin(), parts.end(), 0LL);
        ++by_size[{n, 2 * n - size}];
      });
  perturb(by_size, options.inject_fault);
  detail::compare_counts(by_length, by_size, {"n", "l"}, report);
  report.elapsed = clock.elapsed();
  return report;
}

VerificationReport verify_euler_refinement(int n_max,
                                           const CheckOptions& options) {
  detail::require_params(n_max >= 0, "n_max must be nonnegative");
  detail::Stopwatch clock;
  VerificationReport report{.id = TheoremId::kEulerRefinement,
                            .params = {.n = n_max},
                            .box = Box{{"n", n_max}}};
  report.note = "preimage length and first part; bessenrodt = mork after fill";

  // The statistics are stated for partitions of n >= 1; the empty partition
  // would need a first part of 1.
  for (int n = 1; n <= n_max; ++n) {
    for (const Partition& lambda : enumerate_partitions(n, {.distinct = true})) {
      const long long k = lambda.part(1);
      const long long m = schmidt_weight(lambda, 2, 1);
      const Partition mu = bessenrodt_inverse(lambda);
      const std::string at = " for " + show(lambda);
      const Where where{{"n", lambda.size()}};
      expect(report, mu.has_odd_parts(), "preimage has an even part" + at, where);
      expect_equal(report, n, mu.size(), "preimage size" + at, where);
      expect_equal(report, 2 * m - n, mu.length(), "preimage length" + at, where);
      expect_equal(report, 1 + 2 * k + 2LL * n - 4 * m,
                   options.inject_fault ? mu.part(1) + 1 : mu.part(1),
                   "preimage first part" + at, where);
      expect(report, bessenrodt(mu) == lambda, "bessenrodt roundtrip" + at, where);
    }
  }
  for_each_partition_up_to(
      n_max,
      [&](const Partition& omega) {
        const Partition image = bessenrodt(omega);
        const std::string at = " for " + show(omega);
        const Where where{{"n", omega.size()}};
        expect(report, image == mork(modular_fill_inverse(omega)),
               "bessenrodt differs from mork after fill" + at, where);
        expect_equal(report, omega.size(), image.size(),
                     "bessenrodt size" + at, where);
      },
      {.odd_parts = true});
  report.elapsed = clock.elapsed();
  return report;
}

std::vector<BessenrodtRow> table_bessenrodt(int n) {
  std::vector<BessenrodtRow> rows;
  for (const Partition& lambda : enumerate_partitions(n, {.distinct = true})) {
    rows.push_back({schmidt_weight(lambda, 2, 1), lambda,
                    bessenrodt_inverse(lambda)});
  }
  std::stable_sort(rows.begin(), rows.end(),
                   [](const BessenrodtRow& a, const BessenrodtRow& b) {
                     if (a.weight != b.weight) return a.weight > b.weight;
                     return a.distinct > b.distinct;
                   });
  return rows;
}

VerificationReport verify_bessenrodt_table(const CheckOptions& options) {
  detail::Stopwatch clock;
  VerificationReport report{.id = TheoremId::kBessenrodtTable,
                            .params = {.n = 7},
                            .box = Box{{"n", 7}}};
  report.note = "distinct and odd partitions of 7, row for row";
  const std::vector<BessenrodtRow> printed{
      {7, make_partition({7}), make_partition({1, 1, 1, 1, 1, 1, 1})},
      {6, make_partition({6, 1}), make_partition({3, 1, 1, 1, 1})},
      {5, make_partition({5, 2}), make_partition({5, 1, 1})},
      {5, make_partition({4, 2, 1}), make_partition({3, 3, 1})},
      {4, make_partition({4, 3}), make_partition({7})},
  };
  std::vector<BessenrodtRow> computed = table_bessenrodt(7);
  if (options.inject_fault && !computed.empty()) computed.back().weight += 1;
  expect_equal(report, static_cast<long long>(printed.size()),
               static_cast<long long>(computed.size()), "row count", {});
  for (std::size_t i = 0; i < std::min(printed.size(), computed.size()); ++i) {
    const auto& p = printed[i];
    const auto& c = computed[i];
    const std::string row = "row " + std::to_string(i + 1);
    expect_equal(report, p.weight, c.weight, row + " weight", {{"row", i + 1}});
    expect(report, p.distinct == c.distinct, row + " distinct partition", {{"row", i + 1}});
    expect(report, p.odd == c.odd, row + " odd partition", {{"row", i + 1}});
  }
  report.elapsed = clock.elapsed();
  return report;
}

VerificationReport verify_length_classes(int size_max,
                                         const CheckOptions& options) {
  detail::require_params(size_max >= 0, "size_max must be nonnegative");
  detail::Stopwatch clock;
  VerificationReport report{.id = TheoremId::kHookClassEven,
                            .params = {.n = size_max},
                            .box = Box{{"n", size_max}}};
  report.note = "length classes 0,3 and 1,2 mod 4 partition the distinct "
                "partitions";

  for_each_partition_up_to(
      size_max,
      [&](const Partition& lambda) {
        const int residue = lambda.length() % 4;
        const bool even_class = residue == 0 || residue == 3;
        const bool odd_class = residue == 1 || residue == 2;
        expect(report, even_class != odd_class,
               "length class of " + show(lambda), {{"n", lambda.size()}});
      },
      {.distinct = true});

  // Union: at z = 1 the two class series add up to the plain count of
  // distinct partitions by weight at indices 1, 5, 9, ... Such a partition
  // has |l| <= 4 * weight, so weights up to size_max / 4 are complete.
  const int top = size_max / 4;
  const Box box{{"q", top}, {"z", top}};
  const TruncatedSeries even = lhs_series(TheoremId::kHookClassEven, {}, box);
  const TruncatedSeries odd = lhs_series(TheoremId::kHookClassOdd, {}, box);
  CountTable from_classes;
  CountTable direct;
  for (int a = 0; a <= top; ++a) {
    long long total = 0;
    for (int c = 0; c <= top; ++c) {
      total += even.coefficient(std::vector<int>{a, c}) +
               odd.coefficient(std::vector<int>{a, c});
    }
    from_classes[{a}] = total;
  }
  for_each_partition_up_to(
      4 * top,
      [&](const Partition& lambda) {
        const long long w = schmidt_weight(lambda, 4, 1);
        if (w <= top) ++direct[{w}];
      },
      {.distinct = true});
  perturb(direct, options.inject_fault);
  detail::compare_counts(from_classes, direct, {"q"}, report);
  report.elapsed = clock.elapsed();
  return report;
}

VerificationReport verify_li_yee(int t, int n_max,
                                 const CheckOptions& options) {
  detail::require_params(t >= 1 && n_max >= 0, "need t >= 1 and n_max >= 0");
  detail::Stopwatch clock;
  VerificationReport report{.id = TheoremId::kLiYee,
                            .params = {.t = t, .n = n_max},
                            .box = Box{{"n", n_max}}};
  report.note = "length (s-1)t+j vs largest color multiplicity s, color j";

  // Class (s, j) of a length; the empty partition forms its own class.
  const auto length_class = [t](long long len) -> std::pair<long long, long long> {
    if (len == 0) return {0, 0};
    return {(len - 1) / t + 1, (len - 1) % t + 1};
  };

  CountTable partitions;
  detail::walk(
      detail::limits(t * n_max, n_max),
      [&](auto parts) { return schmidt_weight(parts, t, 1) <= n_max; },
      [&](auto parts) {
        const auto [s, j] = length_class(static_cast<long long>(parts.size()));
        ++partitions[{schmidt_weight(parts, t, 1), s, j}];
      });

  CountTable colored;
  for (int n = 0; n <= n_max; ++n) {
    for (const ColoredPartition& mu : enumerate_colored(n, t)) {
      long long s = 0;
      long long j = 0;
      for (int c = 1; c <= t; ++c) {
        const long long count = mu.color_count(c);
        if (count > 0 && count >= s) {
          s = count;
          j = c;
        }
      }
      ++colored[{n, s, j}];
    }
  }
  perturb(colored, options.inject_fault);
  detail::compare_counts(partitions, colored, {"n", "s", "j"}, report);
  report.elapsed = clock.elapsed();
  return report;
}

VerificationReport verify_color_conjugate(int t, int r, int size_max,
                                          int class_bound,
                                          const CheckOptions& options) {
  detail::require_params(t >= 1 && r >= 1 && size_max >= 0 && class_bound >= 0,
                         "need t, r >= 1 and nonnegative bounds");
  detail::Stopwatch clock;
  VerificationReport report{.id = TheoremId::kColorConjugate,
                            .params = {.t = t, .r = r, .n = size_max},
                            .box = Box{{"size", size_max}, {"k", class_bound}}};
  report.note = "roundtrip and statistics; class counts (k1, kr, n, colors)";

  for_each_partition_up_to(size_max, [&](const Partition& lambda) {
    const ColorConjugate image = color_conjugate(lambda, t, r);
    const std::string at = " for " + show(lambda);
    const Where where{{"n", lambda.size()}};
    expect(report,
           color_conjugate_inverse(image.nu, image.mu, t, r) == lambda,
           "roundtrip" + at, where);
    expect(report,
           ColoredPartition(std::vector<ColoredPart>(image.mu.entries().begin(),
                                                     image.mu.entries().end()),
                            t) == image.mu,
           "colored image not canonical" + at, where);
    expect_equal(report, lambda.part(r), image.mu.length(), "parts of mu" + at, where);
    expect_equal(report, schmidt_weight(lambda, t, r), image.mu.size(),
                 "size of mu" + at, where);
    expect(report, image.nu.length() <= r - 1, "nu too long" + at, where);
    expect_equal(report, lambda.part(1) - lambda.part(r), image.nu.part(1),
                 "first part of nu" + at, where);
    const std::vector<int> profile = color_profile(lambda, t, r);
    for (int c = 1; c <= t; ++c) {
      expect_equal(report, profile[c - 1], image.mu.color_count(c),
                   "count of color " + std::to_string(c) + at, where);
    }
  });

  // Class counts, each side enumerated on its own.
  const int K = class_bound;
  const int N = class_bound;
  const auto profile_key = [](long long k1, long long kr, long long n,
                              const std::vector<int>& colors) {
    detail::CountKey key{k1, kr, n};
    key.insert(key.end(), colors.begin(), colors.end());
    return key;
  };
  CountTable partitions;
  detail::walk(
      detail::limits((r - 1) * K + t * N, K),
      [&](auto parts) { return schmidt_weight(parts, t, r) <= N; },
      [&](auto parts) {
        const int k1 = parts.empty() ? 0 : parts[0];
        const int kr = static_cast<int>(parts.size()) >= r ? parts[r - 1] : 0;
        ++partitions[profile_key(k1, kr, schmidt_weight(parts, t, r),
                                 color_profile(parts, t, r))];
      });

  // Partitions with at most r - 1 parts and first part exactly a.
  const auto count_nu = [r](int a) {
    if (a == 0) return 1LL;
    long long count = 0;
    detail::walk(
        detail::limits(a * (r - 1), a, r - 1),
        [&](auto parts) { return parts.empty() || parts[0] == a; },
        [&](auto parts) {
          if (!parts.empty() && parts[0] == a) ++count;
        });
    return count;
  };
  CountTable pairs;
  for (int n = 0; n <= N; ++n) {
    for (const ColoredPartition& mu : enumerate_colored(n, t)) {
      std::vector<int> colors;
      for (int c = 1; c <= t; ++c) colors.push_back(mu.color_count(c));
      const int kr = mu.length();
      for (int k1 = kr; k1 <= K; ++k1) {
        const long long nus = count_nu(k1 - kr);
        if (nus > 0) pairs[profile_key(k1, kr, n, colors)] += nus;
      }
    }
  }
  perturb(pairs, options.inject_fault);
  std::vector<std::string> names{"k1", "kr", "n"};
  for (int c = 1; c <= t; ++c) names.push_back("c" + std::to_string(c));
  detail::compare_counts(partitions, pairs, names, report);
  report.elapsed = clock.elapsed();
  return report;
}

VerificationReport verify_opposite_schmidt(int t, int r, int k_max, int n_max,
                                           const CheckOptions& options) {
  if (t < 2) {
    throw Error(ErrorCode::kDegenerateParams,
                "complement weight needs t >= 2");
  }
  detail::require_params(r >= 2, "the two-color count needs r > 1");
  detail::require_params(k_max >= 0 && n_max >= 0, "bounds must be >= 0");
  detail::Stopwatch clock;
  VerificationReport report{.id = TheoremId::kOppositeSchmidt,
                            .params = {.t = t, .r = r},
                            .box = Box{{"k", k_max}, {"n", n_max}}};
  report.note = "first part k, uncounted sum n vs restricted 2-colored "
                "partitions with k parts";

  CountTable partitions;
  const auto uncounted = [&](auto parts) {
    return std::accumulate(parts.begin(), parts.end(), 0LL) -
           schmidt_weight(parts, t, r);
  };
  detail::walk(
      detail::limits(kNoLimit, k_max, n_max + n_max / (t - 1) + r),
      [&](auto parts) { return uncounted(parts) <= n_max; },
      [&](auto parts) {
        ++partitions[{parts.empty() ? 0 : parts[0], uncounted(parts)}];
      });

  CountTable colored;
  for (int n = 0; n <= n_max; ++n) {
    for (const ColoredPartition& mu : enumerate_colored(n, 2)) {
      if (mu.length() > k_max) continue;
      const bool allowed = std::all_of(
          mu.entries().begin(), mu.entries().end(), [&](const ColoredPart& e) {
            return e.color == 1 ||
                   (e.part >= r - 1 && (e.part - (r - 1)) % (t - 1) == 0);
          });
      if (allowed) ++colored[{mu.length(), n}];
    }
  }
  perturb(colored, options.inject_fault);
  detail::compare_counts(partitions, colored, {"k", "n"}, report);
  report.elapsed = clock.elapsed();
  return report;
}

VerificationReport verify_recurrence(int t, int n_max, const Box& box,
                                     const CheckOptions& options) {
  detail::require_params(t >= 1 && n_max >= 0, "need t >= 1 and n_max >= 0");
  if (box.dimension() != 2 || box.variables()[0].name != "q" ||
      box.variables()[1].name != "s") {
    throw Error(ErrorCode::kBoxMismatch, "recurrence check expects (q,s)");
  }
  detail::Stopwatch clock;
  VerificationReport report{.id = TheoremId::kRecurrence,
                            .params = {.t = t, .n = n_max},
                            .box = box};
  report.note = "first-part recurrence with q-binomials vs enumeration";
  for (int n = 0; n <= n_max; ++n) {
    const TruncatedSeries enumerated = f_enumerated(n, t, box);
    TruncatedSeries recurrence = f_recurrence(n, t, box);
    if (options.inject_fault && n == n_max) {
      recurrence.add_term(Monomial::variable("s", box.bound("s")), 1);
    }
    report.coefficients_checked += box.volume();
    if (const auto m = qseries::first_mismatch(enumerated, recurrence);
        m && !report.first_mismatch) {
      report.first_mismatch =
          Mismatch{.at = {{"n", n}, {"q", m->exponents[0]}, {"s", m->exponents[1]}},
                   .lhs = m->lhs,
                   .rhs = m->rhs,
                   .detail = "coefficient of f_n"};
    }
  }
  report.elapsed = clock.elapsed();
  return report;
}

VerificationReport verify_functional_equation(int t, const Box& box,
                                              const CheckOptions& options) {
  detail::require_params(t >= 1, "t must be positive");
  detail::Stopwatch clock;
  VerificationReport report{.id = TheoremId::kFunctionalEquation,
                            .params = {.t = t},
                            .box = box};
  report.note = "F(z) = F(s^t q z) / (sqz; s)_t with F enumerated";

  const TruncatedSeries f =
      lhs_series(TheoremId::kSizeTracked, {.t = t, .r = 1}, box);
  const Monomial s = Monomial::variable("s");
  const Monomial q = Monomial::variable("q");
  const Monomial z = Monomial::variable("z");
  TruncatedSeries shifted = qseries::substitute(f, "z", s.pow(t) * q * z, box);
  if (!shifted.box_exact()) {
    throw Error(ErrorCode::kBoxTooSmall,
                "enumerated series does not cover the substitution preimage");
  }
  if (options.inject_fault) shifted.add_term(q.pow(box.bound("q")), 1);
  const TruncatedSeries rhs =
      qseries::invert(qseries::pochhammer(s * q * z, s, t, box)) * shifted;
  report.coefficients_checked = box.volume();
  if (const auto m = qseries::first_mismatch(f, rhs)) {
    Mismatch mismatch{.lhs = m->lhs, .rhs = m->rhs, .detail = "coefficient"};
    for (std::size_t i = 0; i < box.dimension(); ++i) {
      mismatch.at.emplace_back(box.variables()[i].name, m->exponents[i]);
    }
    report.first_mismatch = std::move(mismatch);
  }
  report.elapsed = clock.elapsed();
  return report;
}

VerificationReport verify_hook_map(int n_max, const CheckOptions& options) {
  detail::require_params(n_max >= 0, "n_max must be nonnegative");
  detail::Stopwatch clock;
  VerificationReport report{.id = TheoremId::kHookMapCollisions,
                            .params = {.n = n_max},
                            .box = Box{{"n", n_max}}};
  report.note = "printed 3-modular collision; m = 2 injective on odd parts; part sums";

  const Partition target = make_partition({5, 4, 3, 1});
  const ModularDiagram left(3, {{3, 2}, {2, 1}, {1, 1}});
  const ModularDiagram right(3, {{3, 1}, {2, 1}, {1, 2}});
  expect(report, left.decode() == make_partition({8, 4, 1}),
         "left diagram decodes to (8,4,1)", {{"m", 3}, {"n", 13}});
  expect(report, right.decode() == make_partition({7, 4, 2}),
         "right diagram decodes to (7,4,2)", {{"m", 3}, {"n", 13}});
  for (const ModularDiagram* d : {&left, &right}) {
    const HookMapImage image = generalized_hook_map(*d);
    expect(report, image.is_partition && image.parts == std::vector<int>(
                                             target.parts().begin(),
                                             target.parts().end()),
           "printed diagram of " + show(d->decode()) + " maps to (5,4,3,1)",
           {{"m", 3}, {"n", 13}});
  }

  const auto groups = collision_search(3, 13);
  const bool found = std::any_of(
      groups.begin(), groups.end(), [&](const CollisionGroup& g) {
        const auto has = [&](const Partition& p) {
          return std::find(g.preimages.begin(), g.preimages.end(), p) !=
                 g.preimages.end();
        };
        return g.image == target && has(left.decode()) && has(right.decode());
      });
  expect(report, found != options.inject_fault,
         "collision group of (5,4,3,1) at m = 3, n = 13",
         {{"m", 3}, {"n", 13}});

  // With m = 2 the map is injective on odd-parts partitions, where it is
  // Bessenrodt's map. Over all partitions it is not: (3) and (2,1) collide.
  for (int n = 0; n <= n_max; ++n) {
    std::map<std::vector<int>, int> seen;
    for (const Partition& omega : enumerate_partitions(n, {.odd_parts = true})) {
      ++seen[generalized_hook_map(to_modular(omega, 2)).parts];
    }
    long long collisions = 0;
    for (const auto& [image, count] : seen) collisions += count > 1;
    expect_equal(report, 0, collisions,
                 "odd-parts collisions for m = 2, n = " + std::to_string(n),
                 {{"m", 2}, {"n", n}});
  }
  for (int m = 2; m <= 4; ++m) {
    for_each_partition_up_to(n_max, [&](const Partition& p) {
      const HookMapImage image = generalized_hook_map(to_modular(p, m));
      expect_equal(report, p.size(),
                   std::accumulate(image.parts.begin(), image.parts.end(), 0LL),
                   "part sum at m = " + std::to_string(m) + " for " + show(p),
                   {{"m", m}, {"n", p.size()}});
    });
  }
  for_each_partition_up_to(
      n_max,
      [&](const Partition& omega) {
        const HookMapImage image = generalized_hook_map(to_modular(omega, 2));
        const Partition expected = bessenrodt(omega);
        expect(report,
               image.is_partition &&
                   image.parts == std::vector<int>(expected.parts().begin(),
                                                   expected.parts().end()),
               "m = 2 hook map differs from bessenrodt for " + show(omega),
               {{"m", 2}, {"n", omega.size()}});
      },
      {.odd_parts = true});
  report.elapsed = clock.elapsed();
  return report;
}

}  // namespace schmidt::verify
