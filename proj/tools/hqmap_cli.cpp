// Command-line front end. Talks to the library exclusively through the C API.
//
// Exit codes: 0 success / all memberships hold, 1 requested condition not
// met, 2 input error, 3 a grid supremum exceeded its analytic bound.
#include <cstdint>
#include <cstdio>
#include <fstream>
#include <iostream>
#include <memory>
#include <string>

#include <CLI11.hpp>

#include "hqmap.h"

namespace {

constexpr int kExitOk = 0;
constexpr int kExitConditionNotMet = 1;
constexpr int kExitInputError = 2;
constexpr int kExitBoundViolated = 3;

struct MapDeleter {
  void operator()(hqmap_map* m) const { hqmap_map_free(m); }
};
using MapHandle = std::unique_ptr<hqmap_map, MapDeleter>;

struct StringDeleter {
  void operator()(char* s) const { hqmap_string_free(s); }
};
using StringHandle = std::unique_ptr<char, StringDeleter>;

int report_error(const char* context) {
  std::cerr << "hqmap: " << context << ": " << hqmap_last_error() << "\n";
  return kExitInputError;
}

MapHandle load_map(const std::string& path, int& exit_code) {
  hqmap_map* raw = nullptr;
  if (hqmap_map_from_file(path.c_str(), &raw) != HQMAP_OK) {
    exit_code = report_error(path.c_str());
    return nullptr;
  }
  exit_code = kExitOk;
  return MapHandle(raw);
}

int emit(const std::string& out_path, const char* text) {
  if (out_path.empty()) {
    std::cout << text;
    return kExitOk;
  }
  std::ofstream out(out_path, std::ios::binary);
  if (!out) {
    std::cerr << "hqmap: cannot open output file: " << out_path << "\n";
    return kExitInputError;
  }
  out << text;
  return kExitOk;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"harmonic map class checks, quasiconformal plane extensions, "
               "verification, convolution and figures"};
  app.require_subcommand(1);

  std::string input, input2, profiles, out_path, circles;
  double order = 0.0;
  int grid_radii = 200, grid_angles = 720, pairs = 10000, rays = 12, samples = 512;
  double r_max = 10.0;
  std::uint64_t seed = 1;
  bool no_timestamp = false;

  CLI::App* check = app.add_subcommand("check", "class-membership checks");
  check->add_option("--input", input, "map document (JSON)")->required();
  check->add_option("--profiles", profiles,
                    "comma-separated: starlike,convex,strongly-starlike,sigma");
  check->add_option("--order", order, "strongly-starlike order in (0,1)");
  check->add_option("--out", out_path, "report path (default: stdout)");

  CLI::App* verify = app.add_subcommand(
      "extend-verify", "build the plane extension and verify dilatation bounds");
  verify->add_option("--input", input, "map document (JSON)")->required();
  verify->add_option("--order", order, "strongly-starlike order in (0,1)");
  verify->add_option("--grid-radii", grid_radii, "radii per region (default 200)");
  verify->add_option("--grid-angles", grid_angles, "angles per circle (default 720)");
  verify->add_option("--r-max", r_max, "outer grid cap (default 10)");
  verify->add_option("--pairs", pairs, "bi-Lipschitz sample pairs (default 10000)");
  verify->add_option("--seed", seed, "sampling seed (default 1)");
  verify->add_option("--out", out_path, "report path (default: stdout)");

  CLI::App* render = app.add_subcommand("render", "SVG figure of the extension");
  render->add_option("--input", input, "map document (JSON)")->required();
  render->add_option("--circles", circles, "comma-separated circle radii");
  render->add_option("--rays", rays, "number of radial rays (default 12)");
  render->add_option("--samples", samples, "points per curve (default 512)");
  render->add_flag("--no-timestamp", no_timestamp, "omit the timestamp comment");
  render->add_option("--out", out_path, "SVG path")->required();

  CLI::App* convolve = app.add_subcommand(
      "convolve", "coefficient-wise convolution of two exterior maps");
  convolve->add_option("--input", input, "first map document")->required();
  convolve->add_option("--input2", input2, "second map document")->required();
  convolve->add_option("--out", out_path, "report path (default: stdout)");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? kExitOk : kExitInputError;
  }

  int exit_code = kExitOk;
  MapHandle map = load_map(input, exit_code);
  if (!map) return exit_code;

  if (check->parsed()) {
    int all_member = 0;
    char* json = nullptr;
    if (hqmap_check(map.get(), profiles.c_str(), order, &all_member, &json) !=
        HQMAP_OK) {
      return report_error("check");
    }
    StringHandle guard(json);
    const int rc = emit(out_path, json);
    if (rc != kExitOk) return rc;
    return all_member ? kExitOk : kExitConditionNotMet;
  }

  if (verify->parsed()) {
    hqmap_verify_options options;
    hqmap_verify_options_init(&options);
    options.grid_radii = grid_radii;
    options.grid_angles = grid_angles;
    options.r_max = r_max;
    options.pairs = pairs;
    options.seed = seed;
    options.order = order;
    int bound_violated = 0;
    char* json = nullptr;
    if (hqmap_extend_verify(map.get(), &options, &bound_violated, &json) !=
        HQMAP_OK) {
      return report_error("extend-verify");
    }
    StringHandle guard(json);
    const int rc = emit(out_path, json);
    if (rc != kExitOk) return rc;
    return bound_violated ? kExitBoundViolated : kExitOk;
  }

  if (render->parsed()) {
    hqmap_render_options options;
    hqmap_render_options_init(&options);
    if (!circles.empty()) options.circle_radii_csv = circles.c_str();
    options.rays = rays;
    options.samples = samples;
    options.include_timestamp = no_timestamp ? 0 : 1;
    if (hqmap_render_svg(map.get(), &options, out_path.c_str()) != HQMAP_OK) {
      return report_error("render");
    }
    return kExitOk;
  }

  // convolve
  MapHandle map2 = load_map(input2, exit_code);
  if (!map2) return exit_code;
  int hypothesis_met = 0;
  char* json = nullptr;
  if (hqmap_convolve(map.get(), map2.get(), &hypothesis_met, &json) != HQMAP_OK) {
    return report_error("convolve");
  }
  StringHandle guard(json);
  const int rc = emit(out_path, json);
  if (rc != kExitOk) return rc;
  return hypothesis_met ? kExitOk : kExitConditionNotMet;
}
