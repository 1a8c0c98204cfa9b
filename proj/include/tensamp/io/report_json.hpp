#pragma once

// Verdicts and reports as JSON. verdict_from_json inverts verdict_to_json.

#include "tensamp/io/model_json.hpp"
#include "tensamp/surface/classify.hpp"
#include "tensamp/surface/verdict.hpp"

namespace tensamp {

Json evidence_to_json(const Evidence& e);
Evidence evidence_from_json(const Json& j);

/// {status, evidence, assumptions, sub: [{name, verdict}]}
Json verdict_to_json(const Verdict& v);
Verdict verdict_from_json(const Json& j);

/// A verdict together with an echo of the query that produced it.
struct VerdictReport {
  Json query;
  Verdict verdict;
};

Json report_to_json(const VerdictReport& r);
VerdictReport report_from_json(const Json& j);

Json canonical_report_to_json(const CanonicalReport& r);

}  // namespace tensamp
