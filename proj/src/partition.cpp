#include "schmidt/partition.hpp"

#include <algorithm>
#include <limits>
#include <numeric>
#include <sstream>

#include "schmidt/error.hpp"

namespace schmidt {

namespace {

std::vector<int> validated(std::span<const long long> values) {
  for (long long v : values) {
    if (v < 0) {
      throw Error(ErrorCode::kNegativePart,
                  "part " + std::to_string(v) + " is negative");
    }
  }
  for (std::size_t i = 1; i < values.size(); ++i) {
    if (values[i] > values[i - 1]) {
      throw Error(ErrorCode::kNotSorted,
                  "ascent at index " + std::to_string(i + 1));
    }
  }
  std::vector<int> parts;
  parts.reserve(values.size());
  for (long long v : values) {
    if (v == 0) break;
    if (v > std::numeric_limits<int>::max()) {
      throw Error(ErrorCode::kOverflow, "part does not fit in int");
    }
    parts.push_back(static_cast<int>(v));
  }
  return parts;
}

}  // namespace

Partition::Partition(std::vector<int> parts) {
  std::vector<long long> wide(parts.begin(), parts.end());
  parts_ = validated(wide);
}

int Partition::size() const noexcept {
  return std::accumulate(parts_.begin(), parts_.end(), 0);
}

bool Partition::has_distinct_parts() const noexcept {
  return std::adjacent_find(parts_.begin(), parts_.end()) == parts_.end();
}

bool Partition::has_odd_parts() const noexcept {
  return std::all_of(parts_.begin(), parts_.end(),
                     [](int v) { return v % 2 == 1; });
}

Partition make_partition(std::span<const long long> values) {
  return partition_unchecked(validated(values));
}

Partition make_partition(std::initializer_list<long long> values) {
  return make_partition(std::span<const long long>(values.begin(), values.size()));
}

Partition partition_unchecked(std::vector<int> parts) {
  return Partition(Partition::Unchecked{}, std::move(parts));
}

std::string to_string(const Partition& p) {
  std::ostringstream out;
  out << '(';
  for (int i = 0; i < p.length(); ++i) {
    if (i) out << ',';
    out << p.parts()[i];
  }
  out << ')';
  return out.str();
}

Partition conjugate(const Partition& p) {
  if (p.empty()) return {};
  std::vector<int> columns(p.part(1), 0);
  for (int v : p.parts()) {
    for (int j = 0; j < v; ++j) ++columns[j];
  }
  return partition_unchecked(std::move(columns));
}

int durfee_size(const Partition& p) {
  int d = 0;
  while (p.part(d + 1) >= d + 1) ++d;
  return d;
}

int hook_length(const Partition& p, int row, int col) {
  if (row < 1 || col < 1 || col > p.part(row)) {
    throw Error(ErrorCode::kCellOutOfDiagram,
                "cell (" + std::to_string(row) + "," + std::to_string(col) +
                    ") is not in " + to_string(p));
  }
  int below = 0;
  for (int i = row + 1; p.part(i) >= col; ++i) ++below;
  return (p.part(row) - col) + below + 1;
}

long long schmidt_weight(std::span<const int> parts, int t, int r) {
  long long total = 0;
  for (std::size_t i = static_cast<std::size_t>(r); i <= parts.size();
       i += static_cast<std::size_t>(t)) {
    total += parts[i - 1];
  }
  return total;
}

std::vector<int> color_profile(std::span<const int> parts, int t, int r) {
  const auto at = [&](std::size_t i) {
    return i >= 1 && i <= parts.size() ? parts[i - 1] : 0;
  };
  std::vector<int> profile(static_cast<std::size_t>(t), 0);
  for (std::size_t base = static_cast<std::size_t>(r); base <= parts.size();
       base += static_cast<std::size_t>(t)) {
    for (std::size_t i = 1; i <= static_cast<std::size_t>(t); ++i) {
      profile[i - 1] += at(base + i - 1) - at(base + i);
    }
  }
  return profile;
}

FrobeniusCoords to_frobenius(const Partition& p) {
  const Partition q = conjugate(p);
  const int d = durfee_size(p);
  FrobeniusCoords f;
  for (int i = 1; i <= d; ++i) {
    f.arms.push_back(p.part(i) - i);
    f.legs.push_back(q.part(i) - i);
  }
  return f;
}

Partition from_frobenius(const FrobeniusCoords& f) {
  const auto strictly_decreasing = [](const std::vector<int>& v) {
    for (std::size_t i = 0; i < v.size(); ++i) {
      if (v[i] < 0 || (i > 0 && v[i] >= v[i - 1])) return false;
    }
    return true;
  };
  if (f.arms.size() != f.legs.size() || !strictly_decreasing(f.arms) ||
      !strictly_decreasing(f.legs)) {
    throw Error(ErrorCode::kInvalidFrobenius,
                "arms and legs must be strictly decreasing, nonnegative and "
                "equally long");
  }
  const int d = static_cast<int>(f.arms.size());
  if (d == 0) return {};
  // Rows 1..d come from the arms; rows below the Durfee square are read off
  // the legs: row j > d has #{i : l_i + i >= j} cells.
  std::vector<int> rows;
  for (int i = 1; i <= d; ++i) rows.push_back(f.arms[i - 1] + i);
  const int height = f.legs[0] + 1;
  for (int j = d + 1; j <= height; ++j) {
    int cells = 0;
    for (int i = 1; i <= d; ++i) {
      if (f.legs[i - 1] + i >= j) ++cells;
    }
    rows.push_back(cells);
  }
  return partition_unchecked(std::move(rows));
}

ModularDiagram::ModularDiagram(int base, std::vector<ModularRow> rows)
    : base_(base), rows_(std::move(rows)) {
  if (base_ < 2) {
    throw Error(ErrorCode::kInvalidDiagram, "base must be at least 2");
  }
  long long previous = std::numeric_limits<long long>::max();
  for (std::size_t i = 0; i < rows_.size(); ++i) {
    const ModularRow& row = rows_[i];
    if (row.cells < 1 || row.remainder < 1 || row.remainder > base_) {
      throw Error(ErrorCode::kInvalidDiagram,
                  "row " + std::to_string(i + 1) +
                      " needs cells >= 1 and remainder in 1..m");
    }
    if (i > 0 && row.cells > rows_[i - 1].cells) {
      throw Error(ErrorCode::kInvalidDiagram, "cell counts must not increase");
    }
    const long long value =
        static_cast<long long>(base_) * (row.cells - 1) + row.remainder;
    if (value > previous) {
      throw Error(ErrorCode::kInvalidDiagram,
                  "decoded parts must be weakly decreasing");
    }
    previous = value;
  }
}

int ModularDiagram::cell_value(int row, int col) const noexcept {
  if (row < 1 || row > static_cast<int>(rows_.size())) return 0;
  const ModularRow& r = rows_[row - 1];
  if (col < 1 || col > r.cells) return 0;
  return col == r.cells ? r.remainder : base_;
}

Partition ModularDiagram::shape() const {
  std::vector<int> cells;
  cells.reserve(rows_.size());
  for (const ModularRow& r : rows_) cells.push_back(r.cells);
  return partition_unchecked(std::move(cells));
}

Partition ModularDiagram::decode() const {
  std::vector<int> parts;
  parts.reserve(rows_.size());
  for (const ModularRow& r : rows_) {
    parts.push_back(base_ * (r.cells - 1) + r.remainder);
  }
  return partition_unchecked(std::move(parts));
}

ModularDiagram to_modular(const Partition& p, int base) {
  if (base < 2) {
    throw Error(ErrorCode::kInvalidDiagram, "base must be at least 2");
  }
  std::vector<ModularRow> rows;
  rows.reserve(static_cast<std::size_t>(p.length()));
  for (int v : p.parts()) {
    const int cells = (v + base - 1) / base;
    rows.push_back({cells, v - base * (cells - 1)});
  }
  return ModularDiagram(base, std::move(rows));
}

ColoredPartition::ColoredPartition(std::vector<ColoredPart> entries,
                                   int palette)
    : palette_(palette), entries_(std::move(entries)) {
  if (palette_ < 1) {
    throw Error(ErrorCode::kInvalidColoredPartition, "palette must be >= 1");
  }
  for (const ColoredPart& e : entries_) {
    if (e.part < 1 || e.color < 1 || e.color > palette_) {
      throw Error(ErrorCode::kInvalidColoredPartition,
                  "entry " + std::to_string(e.part) + "^" +
                      std::to_string(e.color) + " outside palette " +
                      std::to_string(palette_));
    }
  }
  std::sort(entries_.begin(), entries_.end(), std::greater<>());
}

int ColoredPartition::size() const noexcept {
  int total = 0;
  for (const ColoredPart& e : entries_) total += e.part;
  return total;
}

int ColoredPartition::color_count(int color) const noexcept {
  return static_cast<int>(
      std::count_if(entries_.begin(), entries_.end(),
                    [color](const ColoredPart& e) { return e.color == color; }));
}

Partition ColoredPartition::shape() const {
  std::vector<int> parts;
  parts.reserve(entries_.size());
  for (const ColoredPart& e : entries_) parts.push_back(e.part);
  return partition_unchecked(std::move(parts));
}

ColoredPartition colored_unchecked(std::vector<ColoredPart> entries,
                                   int palette) {
  return ColoredPartition(ColoredPartition::Unchecked{}, std::move(entries),
                          palette);
}

std::string to_string(const ColoredPartition& p) {
  std::ostringstream out;
  out << '(';
  for (int i = 0; i < p.length(); ++i) {
    if (i) out << ',';
    out << p.entries()[i].part << '^' << p.entries()[i].color;
  }
  out << ')';
  return out.str();
}

}  // namespace schmidt
