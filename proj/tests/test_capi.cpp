#include <cmath>
#include <cstdio>
#include <string>

#include <doctest.h>
#include <json.hpp>

#include "hqmap.h"

namespace {

constexpr const char* kExteriorSample = R"({
  "kind": "exterior",
  "label": "exterior sample",
  "alpha": [1.0, 0.0],
  "beta": [0.0, -0.16666666666666666],
  "A": [0.0, 0.25],
  "a": [[4, 0.0, -0.125]],
  "b": []
})";

struct Handle {
  hqmap_map* map = nullptr;
  ~Handle() { hqmap_map_free(map); }
};

}  // namespace

TEST_CASE("c api lifecycle and evaluation") {
  CHECK(std::string(hqmap_version()) == "1.0.0");

  Handle h;
  REQUIRE(hqmap_map_from_json(kExteriorSample, &h.map) == HQMAP_OK);
  CHECK(hqmap_map_kind(h.map) == 1);

  double out[2] = {0, 0};
  REQUIRE(hqmap_map_eval(h.map, 1.0, 0.0, out) == HQMAP_OK);
  CHECK(out[0] == doctest::Approx(1.0).epsilon(1e-15));
  CHECK(out[1] == doctest::Approx(-7.0 / 24.0).epsilon(1e-14));

  // origin is a domain error for the exterior formula
  CHECK(hqmap_map_eval(h.map, 0.0, 0.0, out) == HQMAP_ERR_DOMAIN);
  CHECK(std::string(hqmap_last_error()).find("z = 0") != std::string::npos);

  // but fine through the extension, whose inner formula is polynomial
  REQUIRE(hqmap_extension_eval(h.map, 0.0, 0.0, out) == HQMAP_OK);
  CHECK(out[0] == 0.0);
  CHECK(out[1] == 0.0);

  REQUIRE(hqmap_extension_dilatation(h.map, 0.0, -1.000001, out) == HQMAP_OK);
  CHECK(std::hypot(out[0], out[1]) == doctest::Approx(5.0 / 9.0).epsilon(1e-4));

  char* json = nullptr;
  REQUIRE(hqmap_map_to_json(h.map, &json) == HQMAP_OK);
  const auto parsed = nlohmann::json::parse(json);
  CHECK(parsed["kind"] == "exterior");
  hqmap_string_free(json);
}

TEST_CASE("c api error reporting") {
  hqmap_map* map = nullptr;
  CHECK(hqmap_map_from_json("{\"kind\": 3}", &map) == HQMAP_ERR_PARSE);
  CHECK(std::string(hqmap_last_error()).find("kind") != std::string::npos);
  CHECK(hqmap_map_from_file("/nonexistent/file.json", &map) == HQMAP_ERR_IO);
  CHECK(hqmap_map_from_json(nullptr, &map) == HQMAP_ERR_DOMAIN);
  CHECK(hqmap_map_kind(nullptr) == -1);
}

TEST_CASE("c api check") {
  Handle h;
  REQUIRE(hqmap_map_from_json(kExteriorSample, &h.map) == HQMAP_OK);
  int all_member = 0;
  char* json = nullptr;
  REQUIRE(hqmap_check(h.map, "", 0.0, &all_member, &json) == HQMAP_OK);
  CHECK(all_member == 1);
  const auto report = nlohmann::json::parse(json);
  CHECK(report["class_reports"][0]["minimal_k"].get<double>() ==
        doctest::Approx(11.0 / 12.0).epsilon(1e-14));
  hqmap_string_free(json);

  // a profile that does not apply to the kind is a parse-level error
  CHECK(hqmap_check(h.map, "starlike", 0.0, &all_member, &json) == HQMAP_ERR_PARSE);
}

TEST_CASE("c api extend-verify") {
  Handle h;
  REQUIRE(hqmap_map_from_json(kExteriorSample, &h.map) == HQMAP_OK);
  hqmap_verify_options options;
  hqmap_verify_options_init(&options);
  CHECK(options.grid_radii == 200);
  CHECK(options.seed == 1);
  options.grid_radii = 30;
  options.grid_angles = 90;
  options.pairs = 200;
  int violated = 1;
  char* json = nullptr;
  REQUIRE(hqmap_extend_verify(h.map, &options, &violated, &json) == HQMAP_OK);
  CHECK(violated == 0);
  const auto report = nlohmann::json::parse(json);
  CHECK(report["analytic_bounds"]["overall"].get<double>() ==
        doctest::Approx(7.0 / 9.0).epsilon(1e-14));
  hqmap_string_free(json);
}

TEST_CASE("c api convolve and render") {
  Handle h;
  REQUIRE(hqmap_map_from_json(kExteriorSample, &h.map) == HQMAP_OK);
  int hypothesis_met = 0;
  char* json = nullptr;
  REQUIRE(hqmap_convolve(h.map, h.map, &hypothesis_met, &json) == HQMAP_OK);
  CHECK(hypothesis_met == 1);
  const auto report = nlohmann::json::parse(json);
  CHECK(report["closure"]["m_value"].get<double>() ==
        doctest::Approx(11.0 / 72.0).epsilon(1e-12));
  hqmap_string_free(json);

  Handle interior;
  REQUIRE(hqmap_map_from_json(R"({"kind": "interior"})", &interior.map) == HQMAP_OK);
  CHECK(hqmap_convolve(h.map, interior.map, &hypothesis_met, &json) ==
        HQMAP_ERR_PARSE);

  hqmap_render_options render;
  hqmap_render_options_init(&render);
  render.include_timestamp = 0;
  render.samples = 64;
  const std::string path = "capi_render_test.svg";
  REQUIRE(hqmap_render_svg(h.map, &render, path.c_str()) == HQMAP_OK);
  std::FILE* file = std::fopen(path.c_str(), "rb");
  REQUIRE(file != nullptr);
  std::fclose(file);
  std::remove(path.c_str());

  CHECK(hqmap_render_svg(h.map, &render, "/nonexistent-dir/out.svg") == HQMAP_ERR_IO);
}
