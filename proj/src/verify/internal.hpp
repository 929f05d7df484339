#pragma once

#include <chrono>
#include <map>
#include <string>
#include <utility>
#include <vector>

#include "schmidt/enumerate.hpp"
#include "schmidt/error.hpp"
#include "schmidt/verify.hpp"

namespace schmidt::verify::detail {

// Preorder walk that skips the subtree of every node rejected by `keep`.
// `keep` sees the node's parts; statistics it tests must be monotone along
// a branch (appending a part never decreases them) for the pruning to be
// sound.
template <class Keep, class Visit>
void walk(const PartitionWalker::Limits& limits, Keep keep, Visit visit) {
  PartitionWalker walker(limits);
  bool descend = true;
  do {
    descend = keep(walker.parts());
    if (descend) visit(walker.parts());
  } while (walker.advance(descend));
}

PartitionWalker::Limits limits(int max_size, int max_part,
                               int max_length = 1 << 30,
                               bool distinct = false);

class Stopwatch {
 public:
  Stopwatch() : start_(std::chrono::steady_clock::now()) {}
  std::chrono::milliseconds elapsed() const {
    return std::chrono::duration_cast<std::chrono::milliseconds>(
        std::chrono::steady_clock::now() - start_);
  }

 private:
  std::chrono::steady_clock::time_point start_;
};

using CountKey = std::vector<long long>;
using CountTable = std::map<CountKey, long long>;

// Compares two count tables over the union of their keys (missing = 0),
// filling coefficients_checked and the first mismatch in key order.
void compare_counts(const CountTable& lhs, const CountTable& rhs,
                    const std::vector<std::string>& key_names,
                    VerificationReport& report);

void require_params(bool ok, const std::string& what);

}  // namespace schmidt::verify::detail
