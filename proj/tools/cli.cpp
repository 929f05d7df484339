#include "cli.hpp"

#include <CLI11.hpp>

#include <algorithm>
#include <optional>
#include <ostream>

#include "schmidt/json.hpp"

namespace schmidt::cli {

namespace {

using io::Json;
using verify::TheoremId;

// Raised for bad input that gets past the flag parser.
struct UsageError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct BijectionArgs {
  std::string name;
  std::string input;
  bool inverse = false;
  int t = 2;
  int r = 1;
  int m = 2;
};

struct VerifyArgs {
  std::string id;
  std::optional<int> t, r, n, max_q, max_z, max_s;
  bool inject_fault = false;
};

struct SeriesArgs {
  std::string id;
  std::optional<int> t, r, n, max_q, max_z, max_s;
};

struct SuiteArgs {
  std::string level = "quick";
  int threads = 1;
  std::vector<std::string> faults;
};

struct Output {
  bool json = false;
  bool timing = false;
};

Json parse_json(const std::string& text) {
  try {
    return Json::parse(text);
  } catch (const Json::exception& e) {
    throw UsageError(std::string("invalid JSON input: ") + e.what());
  }
}

Json run_bijection(const BijectionArgs& a) {
  const Json input = parse_json(a.input);
  const auto partition = [&] { return io::partition_from_json(input); };

  if (a.name == "mork") {
    return io::to_json(a.inverse ? mork_inverse(partition()) : mork(partition()));
  }
  if (a.name == "modular-fill") {
    return io::to_json(a.inverse ? modular_fill_inverse(partition())
                                 : modular_fill(partition()));
  }
  if (a.name == "bessenrodt") {
    return io::to_json(a.inverse ? bessenrodt_inverse(partition())
                                 : bessenrodt(partition()));
  }
  if (a.name == "color-conjugate") {
    if (!a.inverse) return io::to_json(color_conjugate(partition(), a.t, a.r));
    if (!input.is_object()) {
      throw UsageError("inverse color-conjugate expects {\"nu\":[..],\"mu\":[..]}");
    }
    return io::to_json(color_conjugate_inverse(
        io::partition_from_json(input.at("nu")),
        io::colored_from_json(input.at("mu"), a.t), a.t, a.r));
  }
  if (a.name == "hook-map") {
    if (a.inverse) throw UsageError("hook-map has no inverse");
    const ModularDiagram diagram = input.is_object()
                                       ? io::diagram_from_json(input)
                                       : to_modular(partition(), a.m);
    Json out = io::to_json(generalized_hook_map(diagram));
    out["diagram"] = io::to_json(diagram);
    return out;
  }
  throw UsageError("unknown bijection: " + a.name);
}

void print_report(const verify::VerificationReport& r, const Output& o,
                  std::ostream& out) {
  if (o.json) {
    out << io::to_json(r, {.timing = o.timing}).dump() << '\n';
    return;
  }
  out << verify::to_string(r.id);
  if (r.params.t) out << " t=" << *r.params.t;
  if (r.params.r) out << " r=" << *r.params.r;
  if (r.params.n) out << " n=" << *r.params.n;
  out << ": " << (r.passed() ? "pass" : "fail") << " (box";
  for (const auto& v : r.box.variables()) {
    out << ' ' << v.name << "<=" << v.max_exponent;
  }
  out << ", " << r.coefficients_checked << " checked";
  if (o.timing) out << ", " << r.elapsed.count() << " ms";
  out << ')';
  if (r.first_mismatch) {
    const auto& m = *r.first_mismatch;
    out << "\n  first mismatch";
    for (const auto& [name, e] : m.at) out << ' ' << name << '=' << e;
    out << ": lhs " << m.lhs << ", rhs " << m.rhs;
    if (!m.detail.empty()) out << " [" << m.detail << ']';
  }
  out << '\n';
}

verify::Params params_for(TheoremId id, std::optional<int> t,
                          std::optional<int> r, std::optional<int> n) {
  verify::Params p;
  switch (id) {
    case TheoremId::kProgressionWeight:
    case TheoremId::kSizeTracked:
    case TheoremId::kComplementWeight:
      p.t = t.value_or(2);
      p.r = r.value_or(2);
      break;
    case TheoremId::kColorWeights:
      p.t = t.value_or(2);
      break;
    case TheoremId::kBoundedLength:
      p.n = n.value_or(4);
      break;
    default:
      break;
  }
  return p;
}

verify::VerificationReport run_verify(const VerifyArgs& a) {
  const TheoremId id = verify::parse_theorem_id(a.id);
  const verify::CheckOptions check{.inject_fault = a.inject_fault};
  if (verify::is_series_identity(id)) {
    const verify::Params params = params_for(id, a.t, a.r, a.n);
    const qseries::Box box = verify::identity_box(
        id, params, {.q = a.max_q, .z = a.max_z, .s = a.max_s});
    return verify::verify_identity(id, params, box, check);
  }
  const int t = a.t.value_or(2);
  const int r = a.r.value_or(2);
  switch (id) {
    case TheoremId::kSchmidt:
      return verify::verify_schmidt(a.n.value_or(25), check);
    case TheoremId::kEulerRefinement:
      return verify::verify_euler_refinement(a.n.value_or(25), check);
    case TheoremId::kSchmidtRefinement:
      return verify::verify_schmidt_refinement(a.n.value_or(15), check);
    case TheoremId::kLiYee:
      return verify::verify_li_yee(t, a.n.value_or(8), check);
    case TheoremId::kColorConjugate:
      return verify::verify_color_conjugate(t, r, a.n.value_or(18), 8, check);
    case TheoremId::kOppositeSchmidt:
      return verify::verify_opposite_schmidt(t, r, a.max_z.value_or(6),
                                             a.n.value_or(10), check);
    case TheoremId::kRecurrence:
      return verify::verify_recurrence(
          t, a.n.value_or(6),
          qseries::Box{{"q", a.max_q.value_or(8)}, {"s", a.max_s.value_or(12)}},
          check);
    case TheoremId::kFunctionalEquation:
      return verify::verify_functional_equation(
          t,
          qseries::Box{{"q", a.max_q.value_or(6)},
                       {"z", a.max_z.value_or(4)},
                       {"s", a.max_s.value_or(10)}},
          check);
    case TheoremId::kBessenrodtTable:
      return verify::verify_bessenrodt_table(check);
    case TheoremId::kHookMapCollisions:
      return verify::verify_hook_map(a.n.value_or(20), check);
    default:
      throw UsageError("no verifier for " + a.id);
  }
}

int run_table(int n, const Output& o, std::ostream& out) {
  const auto rows = verify::table_bessenrodt(n);
  if (o.json) {
    Json j = Json::array();
    for (const auto& row : rows) j.push_back(io::to_json(row));
    out << j.dump() << '\n';
    return kExitPass;
  }
  out << "weight\tdistinct\todd\n";
  for (const auto& row : rows) {
    out << row.weight << '\t' << to_string(row.distinct) << '\t'
        << to_string(row.odd) << '\n';
  }
  return kExitPass;
}

int run_series(const SeriesArgs& a, const Output& o, std::ostream& out) {
  const TheoremId id = verify::parse_theorem_id(a.id);
  if (!verify::is_series_identity(id)) {
    throw UsageError(a.id + " has no closed-form series");
  }
  const verify::Params params = params_for(id, a.t, a.r, a.n);
  const qseries::Box box = verify::identity_box(
      id, params, {.q = a.max_q, .z = a.max_z, .s = a.max_s});
  const qseries::TruncatedSeries f = verify::rhs_series(id, params, box);
  out << (o.json ? io::to_json(f).dump() : qseries::to_string(f)) << '\n';
  return kExitPass;
}

int run_suite(const SuiteArgs& a, const Output& o, std::ostream& out) {
  verify::SuiteOptions options{.threads = a.threads};
  for (const auto& name : a.faults) {
    options.faulted.push_back(verify::parse_theorem_id(name));
  }
  const verify::SuiteReport report = verify::run_suite(
      a.level == "full" ? verify::SuiteLevel::kFull : verify::SuiteLevel::kQuick,
      options);
  if (o.json) {
    out << io::to_json(report, {.timing = o.timing}).dump() << '\n';
  } else {
    std::size_t failed = 0;
    for (const auto& r : report.reports) {
      print_report(r, o, out);
      if (!r.passed()) ++failed;
    }
    out << report.reports.size() - failed << '/' << report.reports.size()
        << " passed\n";
    for (const auto& r : report.reports) {
      if (!r.passed()) out << "FAILED " << verify::to_string(r.id) << '\n';
    }
  }
  return report.passed() ? kExitPass : kExitFail;
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out,
        std::ostream& err) {
  CLI::App app{"Partition bijections and generating-function checks", "schmidt"};
  app.require_subcommand(1);
  Output output;

  const auto add_output = [&](CLI::App* sub, bool timing) {
    sub->add_flag("--json", output.json, "Print JSON");
    if (timing) sub->add_flag("--timing", output.timing, "Include elapsed time");
  };

  BijectionArgs bij;
  auto* bijection = app.add_subcommand("bijection", "Apply a bijection");
  bijection
      ->add_option("name", bij.name,
                   "mork | modular-fill | bessenrodt | color-conjugate | hook-map")
      ->required()
      ->check(CLI::IsMember(
          {"mork", "modular-fill", "bessenrodt", "color-conjugate", "hook-map"}));
  bijection->add_option("--input", bij.input, "JSON partition or pair")->required();
  bijection->add_flag("--inverse", bij.inverse);
  bijection->add_option("--t", bij.t)->check(CLI::PositiveNumber);
  bijection->add_option("--r", bij.r)->check(CLI::PositiveNumber);
  bijection->add_option("--m", bij.m)->check(CLI::Range(2, 1 << 20));
  add_output(bijection, false);

  VerifyArgs ver;
  auto* verify_cmd = app.add_subcommand("verify", "Check one identity");
  verify_cmd->add_option("id", ver.id, "thm1, prop1, ..., furtherwork")->required();
  verify_cmd->add_option("--t", ver.t)->check(CLI::PositiveNumber);
  verify_cmd->add_option("--r", ver.r)->check(CLI::PositiveNumber);
  verify_cmd->add_option("--n", ver.n, "Size bound or index parameter")
      ->check(CLI::NonNegativeNumber);
  verify_cmd->add_option("--max-q", ver.max_q)->check(CLI::NonNegativeNumber);
  verify_cmd->add_option("--max-z", ver.max_z)->check(CLI::NonNegativeNumber);
  verify_cmd->add_option("--max-s", ver.max_s)->check(CLI::NonNegativeNumber);
  verify_cmd->add_flag("--inject-fault", ver.inject_fault,
                       "Perturb the closed-form side");
  add_output(verify_cmd, true);

  int table_n = 7;
  std::string table_name;
  auto* table = app.add_subcommand("table", "Reproduce a table");
  table->add_option("name", table_name)->required()->check(
      CLI::IsMember({"bessenrodt"}));
  table->add_option("--n", table_n)->check(CLI::NonNegativeNumber);
  add_output(table, false);

  SeriesArgs ser;
  auto* series = app.add_subcommand("series", "Print a closed-form series");
  series->add_option("id", ser.id)->required();
  series->add_option("--t", ser.t)->check(CLI::PositiveNumber);
  series->add_option("--r", ser.r)->check(CLI::PositiveNumber);
  series->add_option("--n", ser.n)->check(CLI::NonNegativeNumber);
  series->add_option("--max-q", ser.max_q)->check(CLI::NonNegativeNumber);
  series->add_option("--max-z", ser.max_z)->check(CLI::NonNegativeNumber);
  series->add_option("--max-s", ser.max_s)->check(CLI::NonNegativeNumber);
  add_output(series, false);

  SuiteArgs sui;
  auto* suite = app.add_subcommand("suite", "Run every check");
  suite->add_option("--level", sui.level)->check(CLI::IsMember({"quick", "full"}));
  suite->add_option("--threads", sui.threads)->check(CLI::PositiveNumber);
  suite->add_option("--fault", sui.faults, "Inject a fault into these ids");
  add_output(suite, true);

  try {
    std::vector<std::string> reversed(args.rbegin(), args.rend());
    app.parse(reversed);
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return kExitPass;
  } catch (const CLI::ParseError& e) {
    err << "error: " << e.what() << '\n';
    return kExitUsage;
  }

  try {
    if (*bijection) {
      out << run_bijection(bij).dump() << '\n';
      return kExitPass;
    }
    if (*verify_cmd) {
      const auto report = run_verify(ver);
      print_report(report, output, out);
      return report.passed() ? kExitPass : kExitFail;
    }
    if (*table) return run_table(table_n, output, out);
    if (*series) return run_series(ser, output, out);
    return run_suite(sui, output, out);
  } catch (const UsageError& e) {
    err << "error: " << e.what() << '\n';
  } catch (const Error& e) {
    err << "error: " << e.what() << '\n';
  } catch (const Json::exception& e) {
    err << "error: " << e.what() << '\n';
  }
  return kExitUsage;
}

}  // namespace schmidt::cli
