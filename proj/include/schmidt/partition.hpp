#pragma once

#include <compare>
#include <cstdint>
#include <span>
#include <string>
#include <vector>

namespace schmidt {

// An integer partition: weakly decreasing positive parts. Parts are addressed
// 1-based through part(i), which reads 0 past the last part so that the
// trailing-zero convention of the usual notation is total.
class Partition {
 public:
  Partition() = default;

  // Validating constructor; throws Error{kNotSorted | kNegativePart}. Zeros
  // are accepted only as a trailing run and are stripped.
  explicit Partition(std::vector<int> parts);

  std::span<const int> parts() const noexcept { return parts_; }
  int length() const noexcept { return static_cast<int>(parts_.size()); }
  int size() const noexcept;
  bool empty() const noexcept { return parts_.empty(); }

  // 1-based; returns 0 for i > length().
  int part(int i) const noexcept {
    return i >= 1 && i <= length() ? parts_[i - 1] : 0;
  }

  bool has_distinct_parts() const noexcept;
  bool has_odd_parts() const noexcept;

  friend bool operator==(const Partition&, const Partition&) = default;
  friend auto operator<=>(const Partition&, const Partition&) = default;

 private:
  struct Unchecked {};
  Partition(Unchecked, std::vector<int> parts) : parts_(std::move(parts)) {}
  friend Partition partition_unchecked(std::vector<int> parts);

  std::vector<int> parts_;
};

// The checked entry point for untrusted integer sequences.
Partition make_partition(std::span<const long long> values);
Partition make_partition(std::initializer_list<long long> values);

// Internal fast path for code that constructs parts it already knows are
// weakly decreasing and positive.
Partition partition_unchecked(std::vector<int> parts);

std::string to_string(const Partition& p);

// --- Young diagram statistics -------------------------------------------

Partition conjugate(const Partition& p);
int durfee_size(const Partition& p);

// Hook length at 1-based cell (row, col); throws kCellOutOfDiagram.
int hook_length(const Partition& p, int row, int col);

// lambda_r + lambda_{t+r} + lambda_{2t+r} + ...
long long schmidt_weight(std::span<const int> parts, int t, int r);
inline long long schmidt_weight(const Partition& p, int t, int r) {
  return schmidt_weight(p.parts(), t, r);
}

// c_i = sum_k (lambda_{kt+r+i-1} - lambda_{kt+r+i}) for i = 1..t.
std::vector<int> color_profile(std::span<const int> parts, int t, int r);
inline std::vector<int> color_profile(const Partition& p, int t, int r) {
  return color_profile(p.parts(), t, r);
}

// --- Frobenius coordinates ------------------------------------------------

struct FrobeniusCoords {
  std::vector<int> arms;
  std::vector<int> legs;

  friend bool operator==(const FrobeniusCoords&,
                         const FrobeniusCoords&) = default;
};

FrobeniusCoords to_frobenius(const Partition& p);
// Throws kInvalidFrobenius unless arms and legs are strictly decreasing,
// nonnegative and of equal length.
Partition from_frobenius(const FrobeniusCoords& f);

// --- m-modular diagrams ---------------------------------------------------

struct ModularRow {
  int cells = 0;
  int remainder = 0;

  friend bool operator==(const ModularRow&, const ModularRow&) = default;
};

// Row i encodes the part m * (cells - 1) + remainder with remainder in 1..m;
// every cell but the last in a row holds m, the last holds the remainder.
class ModularDiagram {
 public:
  // Throws kInvalidDiagram on any invariant breach.
  ModularDiagram(int base, std::vector<ModularRow> rows);

  int base() const noexcept { return base_; }
  std::span<const ModularRow> rows() const noexcept { return rows_; }

  // Value written in 1-based cell (row, col); 0 outside the shape.
  int cell_value(int row, int col) const noexcept;
  Partition shape() const;
  Partition decode() const;

  friend bool operator==(const ModularDiagram&,
                         const ModularDiagram&) = default;

 private:
  int base_;
  std::vector<ModularRow> rows_;
};

ModularDiagram to_modular(const Partition& p, int base);
inline Partition from_modular(const ModularDiagram& d) { return d.decode(); }

// --- t-colored partitions -------------------------------------------------

struct ColoredPart {
  int part = 0;
  int color = 0;

  friend bool operator==(const ColoredPart&, const ColoredPart&) = default;
  friend auto operator<=>(const ColoredPart&, const ColoredPart&) = default;
};

// Entries are kept in canonical order: part descending, then color
// descending. That order satisfies the weakly-decreasing-colors rule on
// equal parts and makes equality of colored partitions decidable.
class ColoredPartition {
 public:
  explicit ColoredPartition(int palette) : palette_(palette) {}

  // Canonicalizes the order; throws kInvalidColoredPartition if a part is
  // nonpositive, a color lies outside 1..palette, or palette < 1.
  ColoredPartition(std::vector<ColoredPart> entries, int palette);

  int palette() const noexcept { return palette_; }
  std::span<const ColoredPart> entries() const noexcept { return entries_; }
  int length() const noexcept { return static_cast<int>(entries_.size()); }
  int size() const noexcept;
  bool empty() const noexcept { return entries_.empty(); }

  // Number of entries carrying `color`.
  int color_count(int color) const noexcept;
  Partition shape() const;

  friend bool operator==(const ColoredPartition&,
                         const ColoredPartition&) = default;

 private:
  struct Unchecked {};
  ColoredPartition(Unchecked, std::vector<ColoredPart> entries, int palette)
      : palette_(palette), entries_(std::move(entries)) {}
  friend ColoredPartition colored_unchecked(std::vector<ColoredPart>, int);

  int palette_;
  std::vector<ColoredPart> entries_;
};

ColoredPartition colored_unchecked(std::vector<ColoredPart> entries,
                                   int palette);

std::string to_string(const ColoredPartition& p);

}  // namespace schmidt
