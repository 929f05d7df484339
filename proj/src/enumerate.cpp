#include "schmidt/enumerate.hpp"

#include <algorithm>
#include <functional>
#include <limits>

namespace schmidt {

PartitionWalker::PartitionWalker(const Limits& limits) : limits_(limits) {}

int PartitionWalker::largest_child() const {
  if (length() >= limits_.max_length) return 0;
  int v = std::min(limits_.max_part, limits_.max_size - size_);
  if (!parts_.empty()) {
    v = std::min(v, limits_.distinct ? parts_.back() - 1 : parts_.back());
  }
  if (limits_.odd_parts && v % 2 == 0) --v;
  return v;
}

bool PartitionWalker::advance(bool descend) {
  if (descend) {
    if (const int v = largest_child(); v >= 1) {
      parts_.push_back(v);
      size_ += v;
      return true;
    }
  }
  const int step = limits_.odd_parts ? 2 : 1;
  while (!parts_.empty()) {
    const int v = parts_.back() - step;
    if (v >= 1) {
      parts_.back() = v;
      size_ -= step;
      return true;
    }
    size_ -= parts_.back();
    parts_.pop_back();
  }
  return false;
}

namespace {

PartitionWalker::Limits limits_for(int n, const PartitionFilter& filter) {
  constexpr int kUnbounded = std::numeric_limits<int>::max();
  return {
      .max_size = std::max(n, 0),
      .max_part = filter.max_part.value_or(kUnbounded),
      .max_length = filter.max_length.value_or(kUnbounded),
      .distinct = filter.distinct,
      .odd_parts = filter.odd_parts,
  };
}

}  // namespace

PartitionStream::PartitionStream(int n, PartitionFilter filter)
    : n_(n), limits_(limits_for(n, filter)) {}

PartitionStream::iterator::iterator(int n,
                                    const PartitionWalker::Limits& limits)
    : target_(n), walker_(std::in_place, limits), done_(n < 0) {
  if (!done_) settle();
}

void PartitionStream::iterator::settle() {
  // The walker starts on (or has just moved to) a candidate node; step until
  // a node of the target size is found.
  while (walker_->size() != target_) {
    if (!walker_->advance()) {
      done_ = true;
      return;
    }
  }
  current_ = partition_unchecked(
      std::vector<int>(walker_->parts().begin(), walker_->parts().end()));
}

PartitionStream::iterator& PartitionStream::iterator::operator++() {
  // Nodes of the target size have no admissible children.
  if (!walker_->advance(false)) {
    done_ = true;
    return *this;
  }
  settle();
  return *this;
}

std::vector<Partition> PartitionStream::collect() const {
  std::vector<Partition> out;
  for (auto it = begin(); it != end(); ++it) out.push_back(*it);
  return out;
}

PartitionStream enumerate_partitions(int n, PartitionFilter filter) {
  return PartitionStream(n, filter);
}

std::vector<ColoredPartition> enumerate_colored(
    int n, int palette, const ColoredConstraints& constraints) {
  std::vector<ColoredPartition> out;
  if (n < 0 || palette < 1) return out;

  const auto& counts = constraints.color_counts;
  std::vector<ColoredPart> entries;
  std::vector<int> used(static_cast<std::size_t>(palette) + 1, 0);

  // Entries are chosen in decreasing (part, color) order; `bound` is the
  // largest entry still allowed.
  const std::function<void(int, ColoredPart)> extend = [&](int remaining,
                                                           ColoredPart bound) {
    if (remaining == 0) {
      if (constraints.num_parts &&
          static_cast<int>(entries.size()) != *constraints.num_parts) {
        return;
      }
      if (counts) {
        for (int c = 1; c <= palette; ++c) {
          const int want =
              c <= static_cast<int>(counts->size()) ? (*counts)[c - 1] : 0;
          if (used[c] != want) return;
        }
      }
      out.push_back(colored_unchecked(entries, palette));
      return;
    }
    if (constraints.num_parts &&
        static_cast<int>(entries.size()) >= *constraints.num_parts) {
      return;
    }
    for (int part = std::min(bound.part, remaining); part >= 1; --part) {
      const int top_color = part == bound.part ? bound.color : palette;
      for (int color = top_color; color >= 1; --color) {
        if (counts) {
          const int cap = color <= static_cast<int>(counts->size())
                              ? (*counts)[color - 1]
                              : 0;
          if (used[color] >= cap) continue;
        }
        entries.push_back({part, color});
        ++used[color];
        extend(remaining - part, {part, color});
        --used[color];
        entries.pop_back();
      }
    }
  };
  extend(n, {n, palette});
  return out;
}

}  // namespace schmidt
