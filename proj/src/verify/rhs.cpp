// Right-hand sides: closed forms assembled only from qseries primitives.

#include <string>

#include "internal.hpp"
#include "schmidt/qseries.hpp"

namespace schmidt::verify {

using qseries::Box;
using qseries::Monomial;
using qseries::TruncatedSeries;
using qseries::invert;
using qseries::pochhammer;
using qseries::pochhammer_infinite;
using qseries::power;

namespace {

const Monomial kOne{};

Monomial var(const char* name, int e = 1) {
  return Monomial::variable(name, e);
}

// 1 / (1 - m)^k
TruncatedSeries inverse_linear_power(const Monomial& m, int k, const Box& box) {
  return invert(power(pochhammer(m, kOne, 1, box), k));
}

// Sum over n >= 1 of lead(n) * tail(n), stopping at the first n whose leading
// monomial leaves the box; later leads only grow.
template <class Lead, class Tail>
TruncatedSeries leading_sum(const Box& box, Lead lead, Tail tail) {
  TruncatedSeries out(box);
  for (int n = 1;; ++n) {
    const Monomial m = lead(n);
    if (!m.in_box(box)) break;
    out = out + TruncatedSeries::from_monomial(box, m) * tail(n);
  }
  return out;
}

}  // namespace

TruncatedSeries rhs_series(TheoremId id, const Params& params, const Box& box) {
  const int t = params.t.value_or(1);
  const int r = params.r.value_or(1);
  detail::require_params(t >= 1 && r >= 1, "t and r must be positive");
  const Monomial q = var("q");

  switch (id) {
    case TheoremId::kDistinctOddWeight:
    case TheoremId::kLengthAnalog:
      // 1 / (qz; qz^2)_inf
      return invert(pochhammer_infinite(q * var("z"), q * var("z", 2), box));
    case TheoremId::kDistinctEvenWeight:
      // 1 / (z; qz^2)_inf
      return invert(pochhammer_infinite(var("z"), q * var("z", 2), box));
    case TheoremId::kHookClassEven: {
      // 1 + sum_{n>=1} q^{C(2n+1,2)} z^{4n-1} / (qz; q)_n^4
      const Monomial qz = q * var("z");
      return TruncatedSeries::one(box) +
             leading_sum(
                 box,
                 [&](int n) {
                   return q.pow((2 * n + 1) * (2 * n) / 2) * var("z", 4 * n - 1);
                 },
                 [&](int n) {
                   return invert(power(pochhammer(qz, q, n, box), 4));
                 });
    }
    case TheoremId::kHookClassOdd: {
      // sum_{n>=1} q^{C(2n,2)} z^{4n-3} / ((qz; q)_n^2 (qz; q)_{n-1}^2)
      const Monomial qz = q * var("z");
      return leading_sum(
          box,
          [&](int n) {
            return q.pow(2 * n * (2 * n - 1) / 2) * var("z", 4 * n - 3);
          },
          [&](int n) {
            return invert(power(pochhammer(qz, q, n, box), 2) *
                          power(pochhammer(qz, q, n - 1, box), 2));
          });
    }
    case TheoremId::kFirstPartOddWeight:
      // 1 / (qz; q)_inf^2
      return invert(power(pochhammer_infinite(q * var("z"), q, box), 2));
    case TheoremId::kFirstPartEvenWeight:
      // 1 / ((1 - z) (qz; q)_inf^2)
      return invert(pochhammer(var("z"), kOne, 1, box) *
                    power(pochhammer_infinite(q * var("z"), q, box), 2));
    case TheoremId::kProgressionWeight:
      // 1 / ((1 - z)^{r-1} (qz; q)_inf^t)
      return inverse_linear_power(var("z"), r - 1, box) *
             invert(power(pochhammer_infinite(q * var("z"), q, box), t));
    case TheoremId::kColorWeights: {
      // prod_i 1 / (q z_i; q)_inf
      TruncatedSeries out = TruncatedSeries::one(box);
      for (int i = 1; i <= t; ++i) {
        const Monomial zi = Monomial::variable("z" + std::to_string(i));
        out = out * invert(pochhammer_infinite(q * zi, q, box));
      }
      return out;
    }
    case TheoremId::kSizeTracked: {
      // 1 / (sz; s)_{r-1} * prod_{n>=0} 1 / (s^{nt+r} q^{n+1} z; s)_t
      const Monomial s = var("s");
      const Monomial z = var("z");
      TruncatedSeries denominator = pochhammer(s * z, s, r - 1, box);
      for (int n = 0;; ++n) {
        const Monomial base = s.pow(n * t + r) * q.pow(n + 1) * z;
        if (!base.in_box(box)) break;
        denominator = denominator * pochhammer(base, s, t, box);
      }
      return invert(denominator);
    }
    case TheoremId::kComplementWeight: {
      if (t < 2) {
        throw Error(ErrorCode::kDegenerateParams,
                    "complement-weight product needs t >= 2; its second "
                    "factor has ratio q^0");
      }
      // 1 / ((qz; q)_inf (q^{r-1} z; q^{t-1})_inf)
      const Monomial z = var("z");
      return invert(pochhammer_infinite(q * z, q, box) *
                    pochhammer_infinite(q.pow(r - 1) * z, q.pow(t - 1), box));
    }
    case TheoremId::kBoundedLength: {
      // 1 / (qz; q)_n^2
      const int n = params.n.value_or(1);
      detail::require_params(n >= 0, "n must be nonnegative");
      return invert(power(pochhammer(q * var("z"), q, n, box), 2));
    }
    default:
      throw Error(ErrorCode::kUnknownTheorem,
                  std::string(to_string(id)) + " is not a series identity");
  }
}

TruncatedSeries f_recurrence(int n, int t, const Box& box) {
  detail::require_params(n >= 0 && t >= 1, "need n >= 0 and t >= 1");
  const Monomial q = var("q");
  const Monomial s = var("s");
  // f_n = (qs)^n sum_{k=0}^{n} s^{k(t-1)} [n-k+t-1 choose t-1]_s f_k. The
  // k = n term contains f_n itself, so solve
  // f_n (1 - q^n s^{nt}) = (qs)^n sum_{k<n} ... f_k.
  std::vector<TruncatedSeries> f;
  f.push_back(TruncatedSeries::one(box));
  for (int m = 1; m <= n; ++m) {
    TruncatedSeries acc(box);
    for (int k = 0; k < m; ++k) {
      acc = acc + TruncatedSeries::from_monomial(box, s.pow(k * (t - 1))) *
                      qseries::q_binomial(m - k + t - 1, t - 1, "s", box) *
                      f[k];
    }
    const TruncatedSeries lead = TruncatedSeries::from_monomial(box, (q * s).pow(m));
    const TruncatedSeries self = TruncatedSeries::one(box) -
                                 TruncatedSeries::from_monomial(box, q.pow(m) * s.pow(m * t));
    f.push_back(lead * acc * invert(self));
  }
  return f[n];
}

}  // namespace schmidt::verify
