// Orchestration of the check / extend-verify / convolve pipelines into
// machine-readable run reports with a stable field order.
#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include <json.hpp>

#include "hqmap/document.hpp"
#include "hqmap/verify.hpp"

namespace hqmap {

inline constexpr const char* kToolVersion = "1.0.0";
inline constexpr int kReportSchemaVersion = 1;

struct CheckRun {
  bool all_member = false;
  nlohmann::ordered_json json;
};

// One class report per requested profile. Profile names: "starlike",
// "convex", "strongly-starlike" (interior; the latter needs an order from the
// document or the override), "sigma" (exterior). An empty list selects every
// profile applicable to the document's kind. Throws DocumentError for
// profiles that do not apply.
CheckRun run_check(const MapDocument& doc, const std::vector<std::string>& profiles,
                   std::optional<double> order_override);

struct VerifyRun {
  // true when a grid supremum exceeded its analytic bound beyond 1e-9,
  // which would indicate an implementation bug
  bool bound_violated = false;
  nlohmann::ordered_json json;
};

VerifyRun run_extend_verify(const MapDocument& doc, const VerifyGridOptions& options,
                            std::optional<double> order_override);

struct ConvolveRun {
  bool hypothesis_met = false;  // both operands had minimal constants < 1
  nlohmann::ordered_json json;
};

// Both documents must be exterior kind; throws DocumentError otherwise.
ConvolveRun run_convolve(const MapDocument& doc1, const MapDocument& doc2);

std::string report_to_string(const nlohmann::ordered_json& report);

}  // namespace hqmap
