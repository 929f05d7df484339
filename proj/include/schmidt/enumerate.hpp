#pragma once

#include <iterator>
#include <optional>
#include <span>
#include <vector>

#include "schmidt/partition.hpp"

namespace schmidt {

struct PartitionFilter {
  bool distinct = false;
  bool odd_parts = false;
  std::optional<int> max_part;
  std::optional<int> max_length;
};

// Depth-first walk over every partition satisfying the limits, in preorder.
// Each node is a partition; its children append one more part no larger
// than the current last part. Starting at the empty partition, siblings are
// visited largest-part first, so the complete partitions of any fixed size
// appear in reverse-lexicographic order.
//
// Callers prune by calling advance(false), which skips the subtree below the
// current node; that is how statistic-bounded sums stay finite.
class PartitionWalker {
 public:
  struct Limits {
    int max_size = 0;
    int max_part = 0;
    int max_length = 0;
    bool distinct = false;
    bool odd_parts = false;
  };

  explicit PartitionWalker(const Limits& limits);

  std::span<const int> parts() const noexcept { return parts_; }
  int size() const noexcept { return size_; }
  int length() const noexcept { return static_cast<int>(parts_.size()); }

  // Moves to the next node; returns false once the walk is exhausted.
  bool advance(bool descend = true);

 private:
  int largest_child() const;

  Limits limits_;
  std::vector<int> parts_;
  int size_ = 0;
};

// Restartable input range over the partitions of n that pass `filter`.
class PartitionStream {
 public:
  PartitionStream(int n, PartitionFilter filter);

  class iterator {
   public:
    using iterator_category = std::input_iterator_tag;
    using value_type = Partition;
    using difference_type = std::ptrdiff_t;

    iterator() = default;
    const Partition& operator*() const { return current_; }
    const Partition* operator->() const { return &current_; }
    iterator& operator++();
    void operator++(int) { ++*this; }
    friend bool operator==(const iterator& it, std::default_sentinel_t) {
      return it.done_;
    }

   private:
    friend class PartitionStream;
    iterator(int n, const PartitionWalker::Limits& limits);
    void settle();

    int target_ = 0;
    std::optional<PartitionWalker> walker_;
    Partition current_;
    bool done_ = true;
  };

  iterator begin() const { return iterator(n_, limits_); }
  std::default_sentinel_t end() const { return {}; }

  std::vector<Partition> collect() const;

 private:
  int n_;
  PartitionWalker::Limits limits_;
};

PartitionStream enumerate_partitions(int n, PartitionFilter filter = {});

struct ColoredConstraints {
  std::optional<int> num_parts;
  // color_counts[i] is the required number of entries with color i + 1.
  std::optional<std::vector<int>> color_counts;
};

// Every canonical t-colored partition of n meeting the constraints, in
// reverse-lexicographic order of (part, color) entries.
std::vector<ColoredPartition> enumerate_colored(
    int n, int palette, const ColoredConstraints& constraints = {});

}  // namespace schmidt
