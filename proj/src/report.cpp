#include "hqmap/report.hpp"

#include <cmath>

#include "hqmap/conditions.hpp"
#include "hqmap/convolution.hpp"
#include "hqmap/extension.hpp"

namespace hqmap {

namespace {

using nlohmann::ordered_json;

ordered_json header(const MapDocument& doc) {
  ordered_json j;
  j["schema_version"] = kReportSchemaVersion;
  j["tool_version"] = kToolVersion;
  j["input"] = ordered_json::parse(serialize_document(doc));
  return j;
}

ordered_json pair_json(Cplx v) { return ordered_json::array({v.real(), v.imag()}); }

ordered_json class_report_json(const ClassReport& report) {
  ordered_json j;
  j["profile"] = report.profile;
  j["weighted_sum"] = report.weighted_sum;
  j["member"] = report.member;
  j["b1_branch"] = report.b1_branch == B1Branch::zero ? "b1_zero" : "b1_nonzero";
  if (report.minimal_k) {
    j["minimal_k"] = *report.minimal_k;
  } else {
    j["minimal_k"] = nullptr;
  }
  if (report.uniform_dilatation_bound) {
    j["uniform_dilatation_bound"] = *report.uniform_dilatation_bound;
    j["bound_route"] = report.bound_route == BoundRoute::reciprocal_psi1
                           ? "reciprocal_psi1"
                           : "two_over_psi2";
  }
  return j;
}

ordered_json sigma_report_json(const SigmaReport& report) {
  ordered_json j;
  j["profile"] = "sigma";
  j["minimal_k"] = report.minimal_k;
  j["member"] = report.member_of.has_value();
  if (report.member_of) {
    j["member_of"] = *report.member_of;
  } else {
    j["member_of"] = nullptr;
  }
  return j;
}

ordered_json bounds_json(const AnalyticBounds& bounds) {
  ordered_json j;
  j["inner"] = bounds.inner ? ordered_json(*bounds.inner) : ordered_json(nullptr);
  j["outer"] = bounds.outer ? ordered_json(*bounds.outer) : ordered_json(nullptr);
  const auto overall = bounds.overall();
  j["overall"] = overall ? ordered_json(*overall) : ordered_json(nullptr);
  return j;
}

ordered_json verification_json(const VerificationReport& v) {
  ordered_json j;
  j["sup_mu"] = v.sup_mu;
  j["argmax_point"] = pair_json(v.argmax_point);
  j["inner_sup_mu"] = v.inner_sup_mu;
  j["inner_argmax"] = pair_json(v.inner_argmax);
  j["outer_sup_mu"] = v.outer_sup_mu;
  j["outer_argmax"] = pair_json(v.outer_argmax);
  j["skipped_points"] = v.skipped_points;
  j["bilipschitz"] = {{"min_ratio", v.bilipschitz.min_ratio},
                      {"max_ratio", v.bilipschitz.max_ratio},
                      {"pair_count", v.bilipschitz.pair_count}};
  j["min_jacobian"] = v.min_jacobian;
  j["max_starlike_angle"] =
      v.max_starlike_angle ? ordered_json(*v.max_starlike_angle) : ordered_json(nullptr);
  j["mu_asymptotic"] =
      v.mu_asymptotic ? ordered_json(*v.mu_asymptotic) : ordered_json(nullptr);
  j["grid"] = {{"radii_per_region", v.grid_radii_per_region},
               {"angles_per_circle", v.grid_angles},
               {"r_max", v.r_max}};
  j["seed"] = v.seed;
  return j;
}

std::optional<double> effective_order(const MapDocument& doc,
                                      std::optional<double> order_override) {
  if (order_override) return order_override;
  return doc.order;
}

}  // namespace

CheckRun run_check(const MapDocument& doc, const std::vector<std::string>& profiles,
                   std::optional<double> order_override) {
  const std::optional<double> order = effective_order(doc, order_override);

  std::vector<std::string> selected = profiles;
  if (selected.empty()) {
    if (doc.is_interior()) {
      selected = {"starlike", "convex"};
      if (order) selected.push_back("strongly-starlike");
    } else {
      selected = {"sigma"};
    }
  }

  CheckRun run;
  run.all_member = true;
  run.json = header(doc);
  ordered_json reports = ordered_json::array();
  for (const std::string& name : selected) {
    if (name == "sigma") {
      if (doc.is_interior()) {
        throw DocumentError("profile 'sigma' applies to exterior maps only");
      }
      const SigmaReport report = check_sigma_condition(doc.exterior());
      run.all_member = run.all_member && report.member_of.has_value();
      reports.push_back(sigma_report_json(report));
      continue;
    }
    if (!doc.is_interior()) {
      throw DocumentError("profile '" + name + "' applies to interior maps only");
    }
    WeightProfile profile;
    if (name == "starlike") {
      profile = starlike_profile();
    } else if (name == "convex") {
      profile = convex_profile();
    } else if (name == "strongly-starlike") {
      if (!order) {
        throw DocumentError("profile 'strongly-starlike' needs an order");
      }
      profile = strongly_starlike_profile(*order);
    } else {
      throw DocumentError("unknown profile '" + name + "'");
    }
    const ClassReport report = check_membership(doc.interior(), profile);
    run.all_member = run.all_member && report.member;
    reports.push_back(class_report_json(report));
  }
  run.json["class_reports"] = std::move(reports);
  return run;
}

VerifyRun run_extend_verify(const MapDocument& doc, const VerifyGridOptions& options,
                            std::optional<double> order_override) {
  const std::optional<double> order = effective_order(doc, order_override);
  const PlaneExtension extension =
      doc.is_interior() ? extend_interior(doc.interior())
                        : extend_exterior(doc.exterior());
  const VerificationReport verification = run_verification(extension, options, order);

  VerifyRun run;
  run.json = header(doc);
  run.json["analytic_bounds"] = bounds_json(extension.bounds());
  run.json["verification"] = verification_json(verification);

  constexpr double kTol = 1e-9;
  const AnalyticBounds& bounds = extension.bounds();
  bool violated = false;
  if (bounds.inner && verification.inner_sup_mu > *bounds.inner + kTol) violated = true;
  if (bounds.outer && verification.outer_sup_mu > *bounds.outer + kTol) violated = true;
  run.bound_violated = violated;
  run.json["bound_violated"] = violated;
  return run;
}

ConvolveRun run_convolve(const MapDocument& doc1, const MapDocument& doc2) {
  if (doc1.is_interior() || doc2.is_interior()) {
    throw DocumentError("convolve requires two exterior documents");
  }
  const ExteriorMap& f1 = doc1.exterior();
  const ExteriorMap& f2 = doc2.exterior();

  ConvolveRun run;
  run.json["schema_version"] = kReportSchemaVersion;
  run.json["tool_version"] = kToolVersion;
  run.json["input"] = ordered_json::parse(serialize_document(doc1));
  run.json["input2"] = ordered_json::parse(serialize_document(doc2));

  const ExteriorMap product = convolve(f1, f2);
  MapDocument product_doc{product, std::nullopt, std::nullopt};
  if (doc1.label || doc2.label) {
    product_doc.label = doc1.label.value_or("f1") + " * " + doc2.label.value_or("f2");
  }
  run.json["product"] = ordered_json::parse(serialize_document(product_doc));

  const SigmaReport s1 = check_sigma_condition(f1);
  const SigmaReport s2 = check_sigma_condition(f2);
  run.hypothesis_met = s1.member_of.has_value() && s2.member_of.has_value();
  if (run.hypothesis_met) {
    const ConvolutionReport report = closure_check(f1, f2);
    run.json["closure"] = {{"k1", report.k1},
                           {"k2", report.k2},
                           {"m_value", report.m_value},
                           {"bound", report.bound},
                           {"within_bound", report.within_bound}};
  } else {
    run.json["closure"] = nullptr;
    run.json["closure_note"] = "operand minimal constants must be < 1";
  }
  return run;
}

std::string report_to_string(const ordered_json& report) {
  return report.dump(2) + "\n";
}

}  // namespace hqmap
