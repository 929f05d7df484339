#include <algorithm>
#include <atomic>
#include <functional>
#include <thread>

#include "internal.hpp"

namespace schmidt::verify {

namespace {

using Task = std::function<VerificationReport()>;

struct Scale {
  double factor;
  int operator()(int bound) const {
    return static_cast<int>(bound * factor + 0.5);
  }
};

void add_identity(std::vector<Task>& tasks, TheoremId id, Params params,
                  BoxBounds bounds, Scale scale, bool fault) {
  if (bounds.q) bounds.q = scale(*bounds.q);
  if (bounds.z) bounds.z = scale(*bounds.z);
  if (bounds.s) bounds.s = scale(*bounds.s);
  tasks.push_back([=] {
    return verify_identity(id, params, identity_box(id, params, bounds),
                           {.inject_fault = fault});
  });
}

std::vector<Task> build_tasks(SuiteLevel level, const SuiteOptions& options) {
  const Scale scale{level == SuiteLevel::kFull ? 1.5 : 1.0};
  const auto faulted = [&](TheoremId id) {
    return CheckOptions{.inject_fault =
                            std::find(options.faulted.begin(),
                                      options.faulted.end(),
                                      id) != options.faulted.end()};
  };
  const auto fault = [&](TheoremId id) { return faulted(id).inject_fault; };
  std::vector<Task> tasks;

  tasks.push_back([=] { return verify_schmidt(scale(25), faulted(TheoremId::kSchmidt)); });
  tasks.push_back([=] {
    return verify_euler_refinement(scale(25), faulted(TheoremId::kEulerRefinement));
  });
  tasks.push_back([=] {
    return verify_schmidt_refinement(scale(15), faulted(TheoremId::kSchmidtRefinement));
  });

  add_identity(tasks, TheoremId::kDistinctOddWeight, {}, {.q = 12, .z = 24},
               scale, fault(TheoremId::kDistinctOddWeight));
  add_identity(tasks, TheoremId::kDistinctEvenWeight, {}, {.q = 12, .z = 12},
               scale, fault(TheoremId::kDistinctEvenWeight));
  add_identity(tasks, TheoremId::kLengthAnalog, {}, {.q = 12, .z = 24}, scale,
               fault(TheoremId::kLengthAnalog));
  add_identity(tasks, TheoremId::kHookClassEven, {}, {.q = 12, .z = 12}, scale,
               fault(TheoremId::kHookClassEven));
  add_identity(tasks, TheoremId::kHookClassOdd, {}, {.q = 12, .z = 12}, scale,
               fault(TheoremId::kHookClassOdd));
  tasks.push_back([=] {
    return verify_length_classes(scale(24), faulted(TheoremId::kHookClassEven));
  });
  add_identity(tasks, TheoremId::kFirstPartOddWeight, {}, {.q = 12, .z = 12},
               scale, fault(TheoremId::kFirstPartOddWeight));
  add_identity(tasks, TheoremId::kFirstPartEvenWeight, {}, {.q = 12, .z = 12},
               scale, fault(TheoremId::kFirstPartEvenWeight));

  for (int t = 1; t <= 3; ++t) {
    tasks.push_back([=] {
      return verify_li_yee(t, scale(8), faulted(TheoremId::kLiYee));
    });
  }
  for (int t = 1; t <= 3; ++t) {
    for (int r = 1; r <= 3; ++r) {
      tasks.push_back([=] {
        return verify_color_conjugate(t, r, scale(18), scale(8),
                                      faulted(TheoremId::kColorConjugate));
      });
    }
  }
  for (int t = 1; t <= 4; ++t) {
    for (int r = 1; r <= 4; ++r) {
      add_identity(tasks, TheoremId::kProgressionWeight, {.t = t, .r = r},
                   {.q = 10, .z = 10}, scale,
                   fault(TheoremId::kProgressionWeight));
    }
  }
  for (int t = 1; t <= 3; ++t) {
    add_identity(tasks, TheoremId::kColorWeights, {.t = t}, {.q = 8, .z = 4},
                 scale, fault(TheoremId::kColorWeights));
  }
  for (int t = 1; t <= 3; ++t) {
    for (int r = 1; r <= 3; ++r) {
      add_identity(tasks, TheoremId::kSizeTracked, {.t = t, .r = r},
                   {.q = 10, .z = 10, .s = 10}, scale,
                   fault(TheoremId::kSizeTracked));
    }
  }
  for (int t = 2; t <= 3; ++t) {
    for (int r = 1; r <= 3; ++r) {
      add_identity(tasks, TheoremId::kComplementWeight, {.t = t, .r = r},
                   {.q = 8, .z = 8}, scale,
                   fault(TheoremId::kComplementWeight));
    }
  }
  for (int t = 2; t <= 3; ++t) {
    for (int r = 2; r <= 3; ++r) {
      tasks.push_back([=] {
        return verify_opposite_schmidt(t, r, scale(6), scale(10),
                                       faulted(TheoremId::kOppositeSchmidt));
      });
    }
  }
  for (int n = 0; n <= 4; ++n) {
    add_identity(tasks, TheoremId::kBoundedLength, {.n = n}, {.q = 10, .z = 10},
                 scale, fault(TheoremId::kBoundedLength));
  }
  tasks.push_back([=] {
    const qseries::Box box{{"q", scale(8)}, {"s", scale(12)}};
    return verify_recurrence(2, scale(6), box, faulted(TheoremId::kRecurrence));
  });
  tasks.push_back([=] {
    const qseries::Box box{{"q", scale(6)}, {"z", scale(4)}, {"s", scale(10)}};
    return verify_functional_equation(2, box,
                                      faulted(TheoremId::kFunctionalEquation));
  });
  tasks.push_back(
      [=] { return verify_bessenrodt_table(faulted(TheoremId::kBessenrodtTable)); });
  tasks.push_back([=] {
    return verify_hook_map(scale(20), faulted(TheoremId::kHookMapCollisions));
  });
  return tasks;
}

}  // namespace

bool SuiteReport::passed() const noexcept {
  return std::all_of(reports.begin(), reports.end(),
                     [](const VerificationReport& r) { return r.passed(); });
}

SuiteReport run_suite(SuiteLevel level, const SuiteOptions& options) {
  const std::vector<Task> tasks = build_tasks(level, options);
  SuiteReport out;
  out.reports.resize(tasks.size());
  const int workers = std::clamp(options.threads, 1,
                                 static_cast<int>(tasks.size()));
  if (workers == 1) {
    for (std::size_t i = 0; i < tasks.size(); ++i) out.reports[i] = tasks[i]();
  } else {
    // Results land in task order regardless of which worker ran them.
    std::atomic<std::size_t> next{0};
    std::vector<std::exception_ptr> errors(tasks.size());
    std::vector<std::jthread> pool;
    for (int w = 0; w < workers; ++w) {
      pool.emplace_back([&] {
        for (std::size_t i = next++; i < tasks.size(); i = next++) {
          try {
            out.reports[i] = tasks[i]();
          } catch (...) {
            errors[i] = std::current_exception();
          }
        }
      });
    }
    pool.clear();
    for (const auto& e : errors) {
      if (e) std::rethrow_exception(e);
    }
  }
  return out;
}

}  // namespace schmidt::verify
