#include "schmidt/bijections.hpp"

#include <algorithm>
#include <map>

#include "schmidt/enumerate.hpp"
#include "schmidt/error.hpp"

namespace schmidt {

Partition mork(const Partition& mu) {
  const int d = durfee_size(mu);
  std::vector<int> parts;
  parts.reserve(2 * static_cast<std::size_t>(d));
  for (int i = 1; i <= d; ++i) {
    parts.push_back(hook_length(mu, i, i));
    if (mu.part(i) >= i + 1) parts.push_back(hook_length(mu, i, i + 1));
  }
  return partition_unchecked(std::move(parts));
}

Partition mork_inverse(const Partition& delta) {
  if (!delta.has_distinct_parts()) {
    throw Error(ErrorCode::kNotDistinct, to_string(delta));
  }
  if (delta.empty()) return {};
  const int len = delta.length();
  const int d = (len + 1) / 2;
  FrobeniusCoords f;
  f.arms.assign(static_cast<std::size_t>(d), 0);
  f.legs.assign(static_cast<std::size_t>(d), 0);
  // delta_{2i-1} = a_i + l_i + 1, delta_{2i} = a_i + l_{i+1} + 1 for i < d,
  // and delta_{2d} = a_d when the last hook has a cell to its right.
  int& a_last = f.arms[d - 1];
  int& l_last = f.legs[d - 1];
  a_last = len % 2 == 1 ? 0 : delta.part(2 * d);
  l_last = delta.part(2 * d - 1) - a_last - 1;
  for (int i = d - 1; i >= 1; --i) {
    f.arms[i - 1] = delta.part(2 * i) - f.legs[i] - 1;
    f.legs[i - 1] = delta.part(2 * i - 1) - f.arms[i - 1] - 1;
  }
  try {
    return from_frobenius(f);
  } catch (const Error&) {
    throw Error(ErrorCode::kNotInImage, to_string(delta));
  }
}

Partition modular_fill(const Partition& mu) {
  std::vector<int> parts;
  parts.reserve(static_cast<std::size_t>(mu.length()));
  for (int v : mu.parts()) parts.push_back(2 * v - 1);
  return partition_unchecked(std::move(parts));
}

Partition modular_fill_inverse(const Partition& omega) {
  if (!omega.has_odd_parts()) {
    throw Error(ErrorCode::kNotOddParts, to_string(omega));
  }
  std::vector<int> parts;
  parts.reserve(static_cast<std::size_t>(omega.length()));
  for (int v : omega.parts()) parts.push_back((v + 1) / 2);
  return partition_unchecked(std::move(parts));
}

namespace {

// Values of the cells in the i-th diagonal hook: the diagonal cell, the arm
// to its right and the leg below it.
std::vector<int> diagonal_hook_values(const ModularDiagram& diagram, int i) {
  std::vector<int> values;
  for (int col = i; diagram.cell_value(i, col) != 0; ++col) {
    values.push_back(diagram.cell_value(i, col));
  }
  for (int row = i + 1; diagram.cell_value(row, i) != 0; ++row) {
    values.push_back(diagram.cell_value(row, i));
  }
  return values;
}

}  // namespace

Partition bessenrodt(const Partition& omega) {
  if (!omega.has_odd_parts()) {
    throw Error(ErrorCode::kNotOddParts, to_string(omega));
  }
  const ModularDiagram diagram = to_modular(omega, 2);
  const int d = durfee_size(diagram.shape());
  std::vector<int> parts;
  for (int i = 1; i <= d; ++i) {
    const std::vector<int> hook = diagonal_hook_values(diagram, i);
    const auto twos = std::count(hook.begin(), hook.end(), 2);
    parts.push_back(static_cast<int>(hook.size()));
    if (twos > 0) parts.push_back(static_cast<int>(twos));
  }
  return partition_unchecked(std::move(parts));
}

Partition bessenrodt_inverse(const Partition& delta) {
  return modular_fill(mork_inverse(delta));
}

ColorConjugate color_conjugate(const Partition& lambda, int t, int r) {
  if (t < 1 || r < 1) {
    throw Error(ErrorCode::kDegenerateParams, "t and r must be positive");
  }
  const int pivot = lambda.part(r);
  std::vector<int> nu;
  for (int i = 1; i < r && lambda.part(i) > pivot; ++i) {
    nu.push_back(lambda.part(i) - pivot);
  }

  std::vector<int> counted;
  for (int i = r; lambda.part(i) > 0; i += t) counted.push_back(lambda.part(i));
  const Partition shape = conjugate(partition_unchecked(std::move(counted)));
  const Partition columns = conjugate(lambda);

  std::vector<ColoredPart> entries;
  entries.reserve(static_cast<std::size_t>(shape.length()));
  for (int i = 1; i <= shape.length(); ++i) {
    const int height = columns.part(i) - (r - 1);
    entries.push_back({shape.part(i), (height - 1) % t + 1});
  }
  return {partition_unchecked(std::move(nu)),
          colored_unchecked(std::move(entries), t)};
}

Partition color_conjugate_inverse(const Partition& nu,
                                  const ColoredPartition& mu, int t, int r) {
  if (t < 1 || r < 1) {
    throw Error(ErrorCode::kDegenerateParams, "t and r must be positive");
  }
  if (nu.length() > r - 1) {
    throw Error(ErrorCode::kInvalidPair,
                "nu must have at most r - 1 = " + std::to_string(r - 1) +
                    " parts");
  }
  if (mu.palette() != t) {
    throw Error(ErrorCode::kInvalidPair, "palette of mu differs from t");
  }
  const int width = mu.length();
  std::vector<int> rows;
  for (int i = 1; i < r; ++i) rows.push_back(width + nu.part(i));

  // Column i below row r - 1 has height (mu_i - 1) t + c_i.
  std::vector<int> heights;
  heights.reserve(static_cast<std::size_t>(width));
  for (const ColoredPart& e : mu.entries()) {
    heights.push_back((e.part - 1) * t + e.color);
  }
  for (std::size_t i = 1; i < heights.size(); ++i) {
    if (heights[i] > heights[i - 1]) {
      throw Error(ErrorCode::kInvalidPair, "column heights increase");
    }
  }
  const Partition lower = conjugate(partition_unchecked(std::move(heights)));
  for (int v : lower.parts()) rows.push_back(v);
  while (!rows.empty() && rows.back() == 0) rows.pop_back();
  for (std::size_t i = 1; i < rows.size(); ++i) {
    if (rows[i] > rows[i - 1]) {
      throw Error(ErrorCode::kInvalidPair, "rows are not weakly decreasing");
    }
  }
  return partition_unchecked(std::move(rows));
}

HookMapImage generalized_hook_map(const ModularDiagram& diagram) {
  const int d = durfee_size(diagram.shape());
  HookMapImage image;
  for (int i = 1; i <= d; ++i) {
    const std::vector<int> hook = diagonal_hook_values(diagram, i);
    for (int j = 1; j <= diagram.base(); ++j) {
      const auto at_least = std::count_if(
          hook.begin(), hook.end(), [j](int v) { return v >= j; });
      if (at_least > 0) image.parts.push_back(static_cast<int>(at_least));
    }
  }
  image.is_partition =
      std::is_sorted(image.parts.begin(), image.parts.end(), std::greater<>());
  return image;
}

std::vector<CollisionGroup> collision_search(int m, int n) {
  std::map<std::vector<int>, std::vector<Partition>, std::greater<>> groups;
  for (const Partition& p : enumerate_partitions(n)) {
    HookMapImage image = generalized_hook_map(to_modular(p, m));
    if (image.is_partition) groups[std::move(image.parts)].push_back(p);
  }
  std::vector<CollisionGroup> out;
  for (auto& [image, preimages] : groups) {
    if (preimages.size() >= 2) {
      out.push_back({partition_unchecked(image), std::move(preimages)});
    }
  }
  return out;
}

}  // namespace schmidt
