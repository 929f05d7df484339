#pragma once

#include <json.hpp>

#include "schmidt/bijections.hpp"
#include "schmidt/error.hpp"
#include "schmidt/partition.hpp"
#include "schmidt/qseries.hpp"
#include "schmidt/verify.hpp"

// JSON forms used by the command line. Object keys keep insertion order so
// output is stable byte for byte.
namespace schmidt::io {

using Json = nlohmann::ordered_json;

// [9,7,6,...]
Json to_json(const Partition& p);
// Throws Error for unsorted or negative input and Json::exception for
// anything that is not an array of integers.
Partition partition_from_json(const Json& j);

// [[part,color],...]
Json to_json(const ColoredPartition& p);
ColoredPartition colored_from_json(const Json& j, int palette);

// {"m":2,"rows":[[cells,remainder],...]}
Json to_json(const ModularDiagram& d);
ModularDiagram diagram_from_json(const Json& j);

// {"nu":[...],"mu":[[part,color],...]}
Json to_json(const ColorConjugate& c);

// {"parts":[...],"is_partition":true}
Json to_json(const HookMapImage& image);

// {"image":[...],"preimages":[[...],...]}
Json to_json(const CollisionGroup& g);

// Variable bounds keyed by name, in alphabetical order.
Json to_json(const qseries::Box& box);

// {"box":{...},"terms":[[{"q":1,"z":1},1],...]} in graded-lex order.
Json to_json(const qseries::TruncatedSeries& f);

Json to_json(const verify::BessenrodtRow& row);

struct ReportFormat {
  bool timing = false;  // elapsed time varies run to run
};

// {"id":...,"params":{...},"box":{...},"status":"pass"|"fail",
//  "coefficients_checked":N[,"first_mismatch":{...}][,"elapsed_ms":N]}
Json to_json(const verify::VerificationReport& report,
             const ReportFormat& format = {});
Json to_json(const verify::SuiteReport& report,
             const ReportFormat& format = {});

}  // namespace schmidt::io
