// Left-hand sides: each series is a literal sum over enumerated partitions of
// the monomial built from that partition's statistics. Nothing in this file
// knows any closed form.
//
// Enumeration bounds (a partition outside them contributes nothing in-box):
//   thm3.1  distinct parts: |l| <= 2 * (l1 + l3 + ...) since l_{2k} < l_{2k-1}.
//   thm3.2  z tracks |l| directly.
//   eq3     q tracks |l| directly.
//   thm4.*  distinct parts, l1 <= z bound and l1 <= weight <= q bound.
//   thm5.1  l1 <= weight; |l| <= 2 * weight since l_{2k} <= l_{2k-1}.
//   thm5.2  |l| <= l1 + 2 * (l2 + l4 + ...) since l_{2k+1} <= l_{2k}.
//   thm8.1  rows 1..r-1 are <= l1; each block of t rows starting at a
//           counted index is <= t times that part: |l| <= (r-1) l1 + t * w.
//   thm8.2  as thm8.1 with r = 1; also l1 = c_1 + ... + c_t.
//   thm9    s tracks |l| directly.
//   cor10   every uncounted index holds a part >= 1, and a nonzero counted
//           index beyond r needs the t - 1 uncounted indices before it, so
//           l(l) <= n + n / (t - 1) + r for uncounted sum n.
//   eq14    l(l) <= 2n by definition.
// All statistics pruned on are monotone in the number of parts.

#include <algorithm>
#include <string>

#include "internal.hpp"
#include "schmidt/partition.hpp"

namespace schmidt::verify {

using qseries::Box;
using qseries::Exponents;
using qseries::TruncatedSeries;

namespace {

constexpr int kNoLimit = 1 << 30;

int length_of(std::span<const int> parts) {
  return static_cast<int>(parts.size());
}

int size_of(std::span<const int> parts) {
  int total = 0;
  for (int v : parts) total += v;
  return total;
}

int first_of(std::span<const int> parts) {
  return parts.empty() ? 0 : parts.front();
}

int weight(std::span<const int> parts, int t, int r) {
  return static_cast<int>(schmidt_weight(parts, t, r));
}

// Sums x^{stat(parts)} over the walk into a series on `box`; `stats` fills
// the exponent vector in box order.
template <class Keep, class Stats>
TruncatedSeries sum_over(const Box& box, const PartitionWalker::Limits& limits,
                         Keep keep, Stats stats) {
  TruncatedSeries out(box);
  Exponents e(box.dimension(), 0);
  detail::walk(limits, keep, [&](std::span<const int> parts) {
    stats(parts, e);
    out.add_term(e, 1);
  });
  return out;
}

int t_of(const Params& p) { return p.t.value_or(1); }
int r_of(const Params& p) { return p.r.value_or(1); }

}  // namespace

namespace detail {

PartitionWalker::Limits limits(int max_size, int max_part, int max_length,
                               bool distinct) {
  return {.max_size = std::max(max_size, 0),
          .max_part = std::max(max_part, 0),
          .max_length = max_length,
          .distinct = distinct,
          .odd_parts = false};
}

}  // namespace detail

TruncatedSeries lhs_series(TheoremId id, const Params& params, const Box& box) {
  const auto bound = [&](const std::string& name) { return box.bound(name); };
  const int t = t_of(params);
  const int r = r_of(params);
  detail::require_params(t >= 1 && r >= 1, "t and r must be positive");

  switch (id) {
    case TheoremId::kDistinctOddWeight: {
      const int Q = bound("q");
      const int Z = bound("z");
      return sum_over(
          box, detail::limits(std::min(Z, 2 * Q), kNoLimit, kNoLimit, true),
          [&](auto parts) { return weight(parts, 2, 1) <= Q; },
          [&](auto parts, Exponents& e) {
            e[0] = weight(parts, 2, 1);
            e[1] = size_of(parts);
          });
    }
    case TheoremId::kDistinctEvenWeight: {
      const int Q = bound("q");
      const int Z = bound("z");
      return sum_over(
          box, detail::limits(Z, kNoLimit, kNoLimit, true),
          [&](auto parts) { return weight(parts, 2, 2) <= Q; },
          [&](auto parts, Exponents& e) {
            e[0] = weight(parts, 2, 2);
            e[1] = size_of(parts);
          });
    }
    case TheoremId::kLengthAnalog: {
      const int Q = bound("q");
      return sum_over(
          box, detail::limits(Q, kNoLimit), [](auto) { return true; },
          [&](auto parts, Exponents& e) {
            e[0] = size_of(parts);
            e[1] = 2 * size_of(parts) - length_of(parts);
          });
    }
    case TheoremId::kHookClassEven:
    case TheoremId::kHookClassOdd: {
      const int Q = bound("q");
      const int Z = bound("z");
      const bool even_class = id == TheoremId::kHookClassEven;
      TruncatedSeries out(box);
      Exponents e(2, 0);
      detail::walk(
          detail::limits(kNoLimit, std::min(Z, Q), kNoLimit, true),
          [&](auto parts) { return weight(parts, 4, 1) <= Q; },
          [&](auto parts) {
            const int residue = length_of(parts) % 4;
            const bool in_even = residue == 0 || residue == 3;
            if (in_even != even_class) return;
            e[0] = weight(parts, 4, 1);
            e[1] = first_of(parts);
            out.add_term(e, 1);
          });
      return out;
    }
    case TheoremId::kFirstPartOddWeight: {
      const int Q = bound("q");
      const int Z = bound("z");
      return sum_over(
          box, detail::limits(2 * Q, std::min(Z, Q)),
          [&](auto parts) { return weight(parts, 2, 1) <= Q; },
          [&](auto parts, Exponents& e) {
            e[0] = weight(parts, 2, 1);
            e[1] = first_of(parts);
          });
    }
    case TheoremId::kFirstPartEvenWeight: {
      const int Q = bound("q");
      const int Z = bound("z");
      return sum_over(
          box, detail::limits(Z + 2 * Q, Z),
          [&](auto parts) { return weight(parts, 2, 2) <= Q; },
          [&](auto parts, Exponents& e) {
            e[0] = weight(parts, 2, 2);
            e[1] = first_of(parts);
          });
    }
    case TheoremId::kProgressionWeight: {
      const int Q = bound("q");
      const int Z = bound("z");
      const int max_part = r == 1 ? std::min(Z, Q) : Z;
      return sum_over(
          box, detail::limits((r - 1) * Z + t * Q, max_part),
          [&](auto parts) { return weight(parts, t, r) <= Q; },
          [&](auto parts, Exponents& e) {
            e[0] = weight(parts, t, r);
            e[1] = first_of(parts);
          });
    }
    case TheoremId::kColorWeights: {
      const int Q = bound("q");
      int color_total = 0;
      for (int i = 1; i <= t; ++i) {
        color_total += bound("z" + std::to_string(i));
      }
      return sum_over(
          box, detail::limits(t * Q, std::min(Q, color_total)),
          [&](auto parts) { return weight(parts, t, 1) <= Q; },
          [&](auto parts, Exponents& e) {
            e[0] = weight(parts, t, 1);
            const std::vector<int> profile = color_profile(parts, t, 1);
            for (int i = 0; i < t; ++i) e[1 + i] = profile[i];
          });
    }
    case TheoremId::kSizeTracked: {
      const int S = bound("s");
      return sum_over(
          box, detail::limits(S, kNoLimit), [](auto) { return true; },
          [&](auto parts, Exponents& e) {
            e[0] = weight(parts, t, r);
            e[1] = first_of(parts);
            e[2] = size_of(parts);
          });
    }
    case TheoremId::kComplementWeight: {
      if (t < 2) {
        throw Error(ErrorCode::kUnboundedBox,
                    "with t = 1 every index is counted, so infinitely many "
                    "partitions have complement weight 0");
      }
      const int Q = bound("q");
      const int Z = bound("z");
      const auto uncounted = [&](auto parts) {
        return size_of(parts) - weight(parts, t, r);
      };
      return sum_over(
          box, detail::limits(kNoLimit, Z, Q + Q / (t - 1) + r),
          [&](auto parts) { return uncounted(parts) <= Q; },
          [&](auto parts, Exponents& e) {
            e[0] = uncounted(parts);
            e[1] = first_of(parts);
          });
    }
    case TheoremId::kBoundedLength: {
      const int n = params.n.value_or(1);
      detail::require_params(n >= 0, "n must be nonnegative");
      const int Q = bound("q");
      const int Z = bound("z");
      return sum_over(
          box, detail::limits(2 * Q, std::min(Z, Q), 2 * n),
          [&](auto parts) { return weight(parts, 2, 1) <= Q; },
          [&](auto parts, Exponents& e) {
            e[0] = weight(parts, 2, 1);
            e[1] = first_of(parts);
          });
    }
    default:
      throw Error(ErrorCode::kUnknownTheorem,
                  std::string(to_string(id)) + " is not a series identity");
  }
}

TruncatedSeries f_enumerated(int n, int t, const Box& box) {
  detail::require_params(n >= 0 && t >= 1, "need n >= 0 and t >= 1");
  const int S = box.bound("s");
  TruncatedSeries out(box);
  Exponents e(2, 0);
  detail::walk(
      detail::limits(S, n),
      // Only descend into branches whose first part is exactly n.
      [&](auto parts) { return parts.empty() || parts.front() == n; },
      [&](auto parts) {
        if (first_of(parts) != n) return;
        e[0] = weight(parts, t, 1);
        e[1] = size_of(parts);
        out.add_term(e, 1);
      });
  return out;
}

}  // namespace schmidt::verify
