#include "schmidt/json.hpp"

#include <algorithm>

namespace schmidt::io {

Json to_json(const Partition& p) {
  Json out = Json::array();
  for (int v : p.parts()) out.push_back(v);
  return out;
}

Partition partition_from_json(const Json& j) {
  std::vector<long long> values;
  for (const Json& v : j.get<std::vector<Json>>()) {
    if (!v.is_number_integer()) {
      throw Json::type_error::create(302, "partition entries must be integers",
                                     &v);
    }
    values.push_back(v.get<long long>());
  }
  return make_partition(values);
}

Json to_json(const ColoredPartition& p) {
  Json out = Json::array();
  for (const ColoredPart& e : p.entries()) out.push_back({e.part, e.color});
  return out;
}

ColoredPartition colored_from_json(const Json& j, int palette) {
  std::vector<ColoredPart> entries;
  for (const Json& pair : j.get<std::vector<Json>>()) {
    if (!pair.is_array() || pair.size() != 2) {
      throw Error(ErrorCode::kInvalidColoredPartition,
                  "expected [part,color] pairs");
    }
    entries.push_back({pair[0].get<int>(), pair[1].get<int>()});
  }
  return ColoredPartition(std::move(entries), palette);
}

Json to_json(const ModularDiagram& d) {
  Json rows = Json::array();
  for (const ModularRow& r : d.rows()) rows.push_back({r.cells, r.remainder});
  return Json{{"m", d.base()}, {"rows", std::move(rows)}};
}

ModularDiagram diagram_from_json(const Json& j) {
  std::vector<ModularRow> rows;
  for (const Json& r : j.at("rows")) {
    if (!r.is_array() || r.size() != 2) {
      throw Error(ErrorCode::kInvalidDiagram, "expected [cells,remainder] rows");
    }
    rows.push_back({r[0].get<int>(), r[1].get<int>()});
  }
  return ModularDiagram(j.at("m").get<int>(), std::move(rows));
}

Json to_json(const ColorConjugate& c) {
  return Json{{"nu", to_json(c.nu)}, {"mu", to_json(c.mu)}};
}

Json to_json(const HookMapImage& image) {
  return Json{{"parts", image.parts}, {"is_partition", image.is_partition}};
}

Json to_json(const CollisionGroup& g) {
  Json pre = Json::array();
  for (const Partition& p : g.preimages) pre.push_back(to_json(p));
  return Json{{"image", to_json(g.image)}, {"preimages", std::move(pre)}};
}

Json to_json(const qseries::Box& box) {
  std::vector<qseries::Variable> vars(box.variables().begin(),
                                      box.variables().end());
  std::sort(vars.begin(), vars.end(),
            [](const auto& a, const auto& b) { return a.name < b.name; });
  Json out = Json::object();
  for (const auto& v : vars) out[v.name] = v.max_exponent;
  return out;
}

Json to_json(const qseries::TruncatedSeries& f) {
  Json terms = Json::array();
  const auto vars = f.box().variables();
  for (const qseries::Term& t : f.terms()) {
    Json mono = Json::object();
    for (std::size_t i = 0; i < vars.size(); ++i) {
      if (t.exponents[i] != 0) mono[vars[i].name] = t.exponents[i];
    }
    terms.push_back({std::move(mono), t.coefficient});
  }
  return Json{{"box", to_json(f.box())}, {"terms", std::move(terms)}};
}

Json to_json(const verify::BessenrodtRow& row) {
  return Json{{"weight", row.weight},
              {"distinct", to_json(row.distinct)},
              {"odd", to_json(row.odd)}};
}

Json to_json(const verify::VerificationReport& report,
             const ReportFormat& format) {
  Json params = Json::object();
  if (report.params.t) params["t"] = *report.params.t;
  if (report.params.r) params["r"] = *report.params.r;
  if (report.params.m) params["m"] = *report.params.m;
  if (report.params.n) params["n"] = *report.params.n;

  Json out{{"id", verify::to_string(report.id)},
           {"params", std::move(params)},
           {"box", to_json(report.box)},
           {"status", report.passed() ? "pass" : "fail"},
           {"coefficients_checked", report.coefficients_checked}};
  if (report.first_mismatch) {
    const verify::Mismatch& m = *report.first_mismatch;
    Json at = Json::object();
    for (const auto& [name, e] : m.at) at[name] = e;
    out["first_mismatch"] = Json{{"monomial", std::move(at)},
                                 {"lhs", m.lhs},
                                 {"rhs", m.rhs},
                                 {"detail", m.detail}};
  }
  if (!report.note.empty()) out["note"] = report.note;
  if (format.timing) out["elapsed_ms"] = report.elapsed.count();
  return out;
}

Json to_json(const verify::SuiteReport& report, const ReportFormat& format) {
  Json reports = Json::array();
  long long failed = 0;
  for (const auto& r : report.reports) {
    reports.push_back(to_json(r, format));
    if (!r.passed()) ++failed;
  }
  return Json{{"status", report.passed() ? "pass" : "fail"},
              {"total", report.reports.size()},
              {"failed", failed},
              {"reports", std::move(reports)}};
}

}  // namespace schmidt::io
