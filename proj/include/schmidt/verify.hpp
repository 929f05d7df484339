#pragma once

#include <chrono>
#include <optional>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "schmidt/partition.hpp"
#include "schmidt/qseries.hpp"

namespace schmidt::verify {

// One identifier per checked claim. The string forms ("thm3.1", "eq24", ...)
// are the public names used by the command line and in reports.
enum class TheoremId {
  kSchmidt,          // thm1
  kEulerRefinement,  // prop1
  kSchmidtRefinement,  // cor2
  kDistinctOddWeight,  // thm3.1
  kDistinctEvenWeight,  // thm3.2
  kLengthAnalog,     // eq3
  kHookClassEven,    // thm4.1
  kHookClassOdd,     // thm4.2
  kFirstPartOddWeight,  // thm5.1
  kFirstPartEvenWeight,  // thm5.2
  kLiYee,            // thm6
  kColorConjugate,   // thm7
  kProgressionWeight,  // thm8.1
  kColorWeights,     // thm8.2
  kSizeTracked,      // thm9
  kComplementWeight,  // cor10
  kOppositeSchmidt,  // cor11
  kBoundedLength,    // eq14
  kRecurrence,       // eq20
  kFunctionalEquation,  // eq24
  kBessenrodtTable,  // table1
  kHookMapCollisions,  // furtherwork
};

std::string_view to_string(TheoremId id);
// Accepts the canonical names plus "schmidt" for thm1; throws
// kUnknownTheorem otherwise.
TheoremId parse_theorem_id(std::string_view name);
std::vector<TheoremId> all_theorem_ids();

struct Params {
  std::optional<int> t;
  std::optional<int> r;
  std::optional<int> m;
  std::optional<int> n;

  friend bool operator==(const Params&, const Params&) = default;
};

struct Mismatch {
  // Monomial exponents for series checks, cell coordinates for counts.
  std::vector<std::pair<std::string, long long>> at;
  long long lhs = 0;
  long long rhs = 0;
  std::string detail;
};

struct VerificationReport {
  TheoremId id{};
  Params params;
  qseries::Box box;
  long long coefficients_checked = 0;
  std::optional<Mismatch> first_mismatch;
  std::string note;
  std::chrono::milliseconds elapsed{0};

  bool passed() const noexcept { return !first_mismatch.has_value(); }
};

struct CheckOptions {
  // Adds a deliberate error to the closed-form (or counting) side so the
  // mismatch path can be exercised end to end.
  bool inject_fault = false;
};

// --- generating-function identities ----------------------------------------

// Variable layout a given identity expects, sized to the given bounds.
// Missing bounds fall back to the acceptance defaults.
struct BoxBounds {
  std::optional<int> q;
  std::optional<int> z;
  std::optional<int> s;
};
qseries::Box identity_box(TheoremId id, const Params& params,
                          const BoxBounds& bounds = {});

bool is_series_identity(TheoremId id);

// Left side: summed partition by partition from the enumeration streams.
qseries::TruncatedSeries lhs_series(TheoremId id, const Params& params,
                                    const qseries::Box& box);
// Right side: the closed-form product or sum built from qseries primitives.
qseries::TruncatedSeries rhs_series(TheoremId id, const Params& params,
                                    const qseries::Box& box);

VerificationReport verify_identity(TheoremId id, const Params& params,
                                   const qseries::Box& box,
                                   const CheckOptions& options = {});

// --- bijective refinements and counting checks ------------------------------

// Mork invariants for every partition of size <= n_max, and the partition
// count against distinct partitions of odd-index weight n.
VerificationReport verify_schmidt(int n_max, const CheckOptions& options = {});
VerificationReport verify_schmidt_refinement(int n_max,
                                             const CheckOptions& options = {});
// Length and first-part statistics of the odd-parts preimage, plus the
// pointwise agreement of Bessenrodt's map with Mork after the 2-modular fill.
VerificationReport verify_euler_refinement(int n_max,
                                           const CheckOptions& options = {});

struct BessenrodtRow {
  long long weight = 0;
  Partition distinct;
  Partition odd;

  friend bool operator==(const BessenrodtRow&, const BessenrodtRow&) = default;
};
// Distinct-parts partitions of n with their odd-parts preimages, ordered by
// odd-index weight (descending) and then reverse-lexicographically.
std::vector<BessenrodtRow> table_bessenrodt(int n);
VerificationReport verify_bessenrodt_table(const CheckOptions& options = {});

// Each distinct-parts partition of size <= size_max lies in exactly one of
// the two length classes, and together the two class series recover the
// weight at indices 1 mod 4.
VerificationReport verify_length_classes(int size_max,
                                         const CheckOptions& options = {});

VerificationReport verify_li_yee(int t, int n_max,
                                 const CheckOptions& options = {});

// Roundtrip and statistics of color_conjugate over |lambda| <= size_max, and
// class-by-class counts for first part and weight up to class_bound.
VerificationReport verify_color_conjugate(int t, int r, int size_max,
                                          int class_bound,
                                          const CheckOptions& options = {});

VerificationReport verify_opposite_schmidt(int t, int r, int k_max, int n_max,
                                           const CheckOptions& options = {});

// f_n(q, s): partitions with first part n, s^{size} q^{weight at 1, t+1, ...}.
qseries::TruncatedSeries f_recurrence(int n, int t, const qseries::Box& box);
qseries::TruncatedSeries f_enumerated(int n, int t, const qseries::Box& box);
VerificationReport verify_recurrence(int t, int n_max, const qseries::Box& box,
                                     const CheckOptions& options = {});

VerificationReport verify_functional_equation(int t, const qseries::Box& box,
                                              const CheckOptions& options = {});

// The printed 3-modular collision, injectivity for m = 2 and part-sum
// preservation for m <= 4 over all partitions of n <= n_max.
VerificationReport verify_hook_map(int n_max, const CheckOptions& options = {});

// --- suite -------------------------------------------------------------------

enum class SuiteLevel { kQuick, kFull };

struct SuiteOptions {
  int threads = 1;
  std::vector<TheoremId> faulted;
};

struct SuiteReport {
  std::vector<VerificationReport> reports;
  bool passed() const noexcept;
};

SuiteReport run_suite(SuiteLevel level, const SuiteOptions& options = {});

}  // namespace schmidt::verify
