#pragma once

// Independent counting oracles. None of these touch the library: they count
// through classical recurrences and coefficient convolutions.

#include <vector>

namespace oracle {

// Euler's pentagonal number recurrence.
inline long long partition_count(int n) {
  std::vector<long long> p(n + 1, 0);
  p[0] = 1;
  for (int m = 1; m <= n; ++m) {
    long long total = 0;
    for (int k = 1;; ++k) {
      const int g1 = k * (3 * k - 1) / 2;
      const int g2 = k * (3 * k + 1) / 2;
      if (g1 > m) break;
      const long long sign = (k % 2 == 1) ? 1 : -1;
      total += sign * p[m - g1];
      if (g2 <= m) total += sign * p[m - g2];
    }
    p[m] = total;
  }
  return p[n];
}

// Coefficients of prod_k (1 + x^k).
inline long long distinct_count(int n) {
  std::vector<long long> c(n + 1, 0);
  c[0] = 1;
  for (int k = 1; k <= n; ++k) {
    for (int m = n; m >= k; --m) c[m] += c[m - k];
  }
  return c[n];
}

// Coefficients of prod_{k odd} 1 / (1 - x^k).
inline long long odd_count(int n) {
  std::vector<long long> c(n + 1, 0);
  c[0] = 1;
  for (int k = 1; k <= n; k += 2) {
    for (int m = k; m <= n; ++m) c[m] += c[m - k];
  }
  return c[n];
}

// Partitions of n fitting in an a-wide, b-tall rectangle, by splitting on
// whether a part equals a.
inline long long rectangle_count(int n, int a, int b) {
  if (n == 0) return 1;
  if (n < 0 || a == 0 || b == 0) return 0;
  return rectangle_count(n, a - 1, b) + rectangle_count(n - a, a, b - 1);
}

// Coefficients of 1 / (x; x)_inf^t, i.e. t-colored partitions.
inline long long colored_count(int n, int t) {
  std::vector<long long> c(n + 1, 0);
  c[0] = 1;
  for (int copy = 0; copy < t; ++copy) {
    for (int k = 1; k <= n; ++k) {
      for (int m = k; m <= n; ++m) c[m] += c[m - k];
    }
  }
  return c[n];
}

}  // namespace oracle
