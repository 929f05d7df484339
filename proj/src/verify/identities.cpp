#include <algorithm>
#include <array>
#include <string>

#include "internal.hpp"

namespace schmidt::verify {

using qseries::Box;
using qseries::TruncatedSeries;

namespace {

struct NamedId {
  TheoremId id;
  std::string_view name;
};

constexpr std::array kNames{
    NamedId{TheoremId::kSchmidt, "thm1"},
    NamedId{TheoremId::kEulerRefinement, "prop1"},
    NamedId{TheoremId::kSchmidtRefinement, "cor2"},
    NamedId{TheoremId::kDistinctOddWeight, "thm3.1"},
    NamedId{TheoremId::kDistinctEvenWeight, "thm3.2"},
    NamedId{TheoremId::kLengthAnalog, "eq3"},
    NamedId{TheoremId::kHookClassEven, "thm4.1"},
    NamedId{TheoremId::kHookClassOdd, "thm4.2"},
    NamedId{TheoremId::kFirstPartOddWeight, "thm5.1"},
    NamedId{TheoremId::kFirstPartEvenWeight, "thm5.2"},
    NamedId{TheoremId::kLiYee, "thm6"},
    NamedId{TheoremId::kColorConjugate, "thm7"},
    NamedId{TheoremId::kProgressionWeight, "thm8.1"},
    NamedId{TheoremId::kColorWeights, "thm8.2"},
    NamedId{TheoremId::kSizeTracked, "thm9"},
    NamedId{TheoremId::kComplementWeight, "cor10"},
    NamedId{TheoremId::kOppositeSchmidt, "cor11"},
    NamedId{TheoremId::kBoundedLength, "eq14"},
    NamedId{TheoremId::kRecurrence, "eq20"},
    NamedId{TheoremId::kFunctionalEquation, "eq24"},
    NamedId{TheoremId::kBessenrodtTable, "table1"},
    NamedId{TheoremId::kHookMapCollisions, "furtherwork"},
};

// Coefficients printed for the first four q-powers of the distinct-parts
// odd-weight product: 1 + zq + (z^2+z^3)q^2 + (z^3+z^4+z^5)q^3.
constexpr std::array<std::pair<int, int>, 7> kPrintedLowOrder{{
    {0, 0}, {1, 1}, {2, 2}, {2, 3}, {3, 3}, {3, 4}, {3, 5},
}};

std::vector<std::string> expected_variables(TheoremId id, const Params& p) {
  switch (id) {
    case TheoremId::kColorWeights: {
      std::vector<std::string> names{"q"};
      for (int i = 1; i <= p.t.value_or(1); ++i) {
        names.push_back("z" + std::to_string(i));
      }
      return names;
    }
    case TheoremId::kSizeTracked:
    case TheoremId::kFunctionalEquation:
      return {"q", "z", "s"};
    case TheoremId::kRecurrence:
      return {"q", "s"};
    default:
      return {"q", "z"};
  }
}

void require_layout(TheoremId id, const Params& params, const Box& box) {
  const auto names = expected_variables(id, params);
  bool ok = names.size() == box.dimension();
  for (std::size_t i = 0; ok && i < names.size(); ++i) {
    ok = box.variables()[i].name == names[i];
  }
  if (!ok) {
    std::string want;
    for (const auto& n : names) want += (want.empty() ? "" : ",") + n;
    throw Error(ErrorCode::kBoxMismatch,
                std::string(to_string(id)) + " expects variables (" + want +
                    ")");
  }
}

}  // namespace

std::string_view to_string(TheoremId id) {
  for (const NamedId& n : kNames) {
    if (n.id == id) return n.name;
  }
  return "unknown";
}

TheoremId parse_theorem_id(std::string_view name) {
  if (name == "schmidt") return TheoremId::kSchmidt;
  for (const NamedId& n : kNames) {
    if (n.name == name) return n.id;
  }
  throw Error(ErrorCode::kUnknownTheorem, std::string(name));
}

std::vector<TheoremId> all_theorem_ids() {
  std::vector<TheoremId> ids;
  for (const NamedId& n : kNames) ids.push_back(n.id);
  return ids;
}

bool is_series_identity(TheoremId id) {
  switch (id) {
    case TheoremId::kDistinctOddWeight:
    case TheoremId::kDistinctEvenWeight:
    case TheoremId::kLengthAnalog:
    case TheoremId::kHookClassEven:
    case TheoremId::kHookClassOdd:
    case TheoremId::kFirstPartOddWeight:
    case TheoremId::kFirstPartEvenWeight:
    case TheoremId::kProgressionWeight:
    case TheoremId::kColorWeights:
    case TheoremId::kSizeTracked:
    case TheoremId::kComplementWeight:
    case TheoremId::kBoundedLength:
      return true;
    default:
      return false;
  }
}

Box identity_box(TheoremId id, const Params& params, const BoxBounds& b) {
  int q = 12;
  int z = 12;
  int s = 10;
  switch (id) {
    case TheoremId::kDistinctOddWeight:
    case TheoremId::kLengthAnalog:
      z = 24;
      break;
    case TheoremId::kProgressionWeight:
    case TheoremId::kBoundedLength:
      q = z = 10;
      break;
    case TheoremId::kColorWeights:
      q = 8;
      z = 4;
      break;
    case TheoremId::kSizeTracked:
      q = z = s = 10;
      break;
    case TheoremId::kComplementWeight:
      q = z = 8;
      break;
    case TheoremId::kRecurrence:
      q = 8;
      s = 12;
      break;
    case TheoremId::kFunctionalEquation:
      q = 6;
      z = 4;
      s = 10;
      break;
    default:
      break;
  }
  q = b.q.value_or(q);
  z = b.z.value_or(z);
  s = b.s.value_or(s);
  std::vector<qseries::Variable> vars;
  for (const std::string& name : expected_variables(id, params)) {
    const int bound = name == "q" ? q : name == "s" ? s : z;
    vars.push_back({name, bound});
  }
  return Box(std::move(vars));
}

VerificationReport verify_identity(TheoremId id, const Params& params,
                                   const Box& box, const CheckOptions& options) {
  if (!is_series_identity(id)) {
    throw Error(ErrorCode::kUnknownTheorem,
                std::string(to_string(id)) + " is not a series identity");
  }
  require_layout(id, params, box);
  detail::Stopwatch clock;
  VerificationReport report{.id = id, .params = params, .box = box};

  const TruncatedSeries lhs = lhs_series(id, params, box);
  TruncatedSeries rhs = rhs_series(id, params, box);
  if (options.inject_fault) {
    rhs.add_term(qseries::Monomial::variable("q", std::min(5, box.bound("q"))),
                 1);
  }
  report.coefficients_checked = box.volume();
  report.note = "enumerated sum vs closed form";
  if (const auto m = qseries::first_mismatch(lhs, rhs)) {
    Mismatch mismatch{.lhs = m->lhs, .rhs = m->rhs, .detail = "coefficient"};
    for (std::size_t i = 0; i < box.dimension(); ++i) {
      mismatch.at.emplace_back(box.variables()[i].name, m->exponents[i]);
    }
    report.first_mismatch = std::move(mismatch);
  }

  if (id == TheoremId::kLengthAnalog && report.passed()) {
    // The printed low-order polynomials p_0..p_3, against both sides.
    report.note += "; printed p0..p3";
    const int top = std::min(3, box.bound("q"));
    for (int a = 0; a <= top && report.passed(); ++a) {
      for (int c = 0; c <= box.bound("z"); ++c) {
        const long long printed = std::count(kPrintedLowOrder.begin(),
                                             kPrintedLowOrder.end(),
                                             std::pair<int, int>{a, c});
        const std::vector<int> at{a, c};
        ++report.coefficients_checked;
        if (rhs.coefficient(at) != printed) {
          report.first_mismatch =
              Mismatch{.at = {{"q", a}, {"z", c}},
                       .lhs = printed,
                       .rhs = rhs.coefficient(at),
                       .detail = "printed expansion"};
          break;
        }
      }
    }
  }
  report.elapsed = clock.elapsed();
  return report;
}

namespace detail {

void require_params(bool ok, const std::string& what) {
  if (!ok) throw Error(ErrorCode::kDegenerateParams, what);
}

void compare_counts(const CountTable& lhs, const CountTable& rhs,
                    const std::vector<std::string>& key_names,
                    VerificationReport& report) {
  CountTable all = lhs;
  for (const auto& [key, count] : rhs) all.try_emplace(key, 0);
  for (const auto& [key, unused] : all) {
    (void)unused;
    ++report.coefficients_checked;
    const auto get = [&](const CountTable& table) {
      const auto it = table.find(key);
      return it == table.end() ? 0LL : it->second;
    };
    const long long a = get(lhs);
    const long long b = get(rhs);
    if (a != b && !report.first_mismatch) {
      Mismatch m{.lhs = a, .rhs = b, .detail = "count"};
      for (std::size_t i = 0; i < key.size() && i < key_names.size(); ++i) {
        m.at.emplace_back(key_names[i], key[i]);
      }
      report.first_mismatch = std::move(m);
    }
  }
}

}  // namespace detail

}  // namespace schmidt::verify
