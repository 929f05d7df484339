#pragma once

#include <vector>

#include "schmidt/partition.hpp"

namespace schmidt {

// Mork's map from all partitions onto partitions with distinct parts: the
// image interleaves the diagonal hook lengths with the hook lengths of the
// cells immediately to their right.
Partition mork(const Partition& mu);

// Inverse of mork() through Frobenius coordinates. Throws kNotDistinct if
// delta repeats a part and kNotInImage if the recovered arms or legs are not
// strictly decreasing.
Partition mork_inverse(const Partition& delta);

// Reads mu's diagram as a 2-modular diagram with a 1 ending every row and 2s
// elsewhere: part i becomes 2 * mu_i - 1.
Partition modular_fill(const Partition& mu);
// Throws kNotOddParts.
Partition modular_fill_inverse(const Partition& omega);

// Bessenrodt's map from odd parts to distinct parts. On the i-th diagonal
// hook of the 2-modular diagram, part 2i-1 counts every cell and part 2i
// counts the cells holding 2. Throws kNotOddParts.
Partition bessenrodt(const Partition& omega);
Partition bessenrodt_inverse(const Partition& delta);

struct ColorConjugate {
  Partition nu;
  ColoredPartition mu;

  friend bool operator==(const ColorConjugate&,
                         const ColorConjugate&) = default;
};

// Splits lambda into the rows above index r (shifted down by lambda_r) and a
// t-colored partition: the conjugate of (lambda_r, lambda_{t+r}, ...) where
// column i is colored by the residue of its height below row r - 1.
ColorConjugate color_conjugate(const Partition& lambda, int t, int r);

// Throws kInvalidPair when nu has r or more parts, the palette of mu is not
// t, or the reconstructed rows are not weakly decreasing.
Partition color_conjugate_inverse(const Partition& nu,
                                  const ColoredPartition& mu, int t, int r);

struct HookMapImage {
  std::vector<int> parts;
  bool is_partition = false;

  friend bool operator==(const HookMapImage&, const HookMapImage&) = default;
};

// For each diagonal hook of the diagram's shape and each threshold
// j = 1..m, emits the number of cells in the hook holding a value >= j.
// Zeros are dropped; whether the rest is weakly decreasing is reported in
// `is_partition` rather than enforced.
HookMapImage generalized_hook_map(const ModularDiagram& diagram);

struct CollisionGroup {
  Partition image;
  std::vector<Partition> preimages;

  friend bool operator==(const CollisionGroup&,
                         const CollisionGroup&) = default;
};

// Groups the partitions of n by the image of their m-modular diagram under
// generalized_hook_map (valid images only) and returns the groups with two
// or more preimages, images in reverse-lexicographic order.
std::vector<CollisionGroup> collision_search(int m, int n);

}  // namespace schmidt
