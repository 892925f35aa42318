#include "hqmap.h"

#include <cstdlib>
#include <cstring>
#include <sstream>
#include <string>
#include <vector>

#include "hqmap/document.hpp"
#include "hqmap/extension.hpp"
#include "hqmap/render.hpp"
#include "hqmap/report.hpp"

struct hqmap_map {
  hqmap::MapDocument doc;
};

namespace {

thread_local std::string g_last_error;

char* dup_string(const std::string& s) {
  char* out = static_cast<char*>(std::malloc(s.size() + 1));
  std::memcpy(out, s.c_str(), s.size() + 1);
  return out;
}

hqmap_status fail(hqmap_status status, const char* message) {
  g_last_error = message;
  return status;
}

// Runs body, translating exceptions into status codes.
template <typename Body>
hqmap_status guarded(Body&& body) {
  try {
    return body();
  } catch (const hqmap::IoError& e) {
    return fail(HQMAP_ERR_IO, e.what());
  } catch (const hqmap::DocumentError& e) {
    return fail(HQMAP_ERR_PARSE, e.what());
  } catch (const std::invalid_argument& e) {
    return fail(HQMAP_ERR_PARSE, e.what());
  } catch (const std::domain_error& e) {
    return fail(HQMAP_ERR_DOMAIN, e.what());
  } catch (const std::exception& e) {
    return fail(HQMAP_ERR_INTERNAL, e.what());
  }
}

hqmap_status fail_null_arg() { return fail(HQMAP_ERR_DOMAIN, "null argument"); }

std::vector<std::string> split_csv(const char* csv) {
  std::vector<std::string> out;
  if (csv == nullptr) return out;
  std::stringstream stream(csv);
  std::string item;
  while (std::getline(stream, item, ',')) {
    if (!item.empty()) out.push_back(item);
  }
  return out;
}

hqmap::PlaneExtension extension_of(const hqmap::MapDocument& doc) {
  return doc.is_interior() ? hqmap::extend_interior(doc.interior())
                           : hqmap::extend_exterior(doc.exterior());
}

}  // namespace

extern "C" {

const char* hqmap_version(void) { return hqmap::kToolVersion; }

const char* hqmap_last_error(void) { return g_last_error.c_str(); }

void hqmap_string_free(char* s) { std::free(s); }

hqmap_status hqmap_map_from_json(const char* json_text, hqmap_map** out) {
  if (json_text == nullptr || out == nullptr) return fail_null_arg();
  return guarded([&] {
    *out = new hqmap_map{hqmap::parse_document(json_text)};
    return HQMAP_OK;
  });
}

hqmap_status hqmap_map_from_file(const char* path, hqmap_map** out) {
  if (path == nullptr || out == nullptr) return fail_null_arg();
  return guarded([&] {
    hqmap::MapDocument doc = hqmap::load_document(path);
    *out = new hqmap_map{std::move(doc)};
    return HQMAP_OK;
  });
}

void hqmap_map_free(hqmap_map* map) { delete map; }

int hqmap_map_kind(const hqmap_map* map) {
  if (map == nullptr) return -1;
  return map->doc.is_interior() ? 0 : 1;
}

hqmap_status hqmap_map_to_json(const hqmap_map* map, char** json_out) {
  if (map == nullptr || json_out == nullptr) return fail_null_arg();
  return guarded([&] {
    *json_out = dup_string(hqmap::serialize_document(map->doc));
    return HQMAP_OK;
  });
}

hqmap_status hqmap_map_eval(const hqmap_map* map, double re, double im,
                            double out[2]) {
  if (map == nullptr || out == nullptr) return fail_null_arg();
  return guarded([&] {
    const hqmap::Cplx value =
        map->doc.is_interior() ? map->doc.interior().evaluate({re, im})
                               : map->doc.exterior().evaluate({re, im});
    out[0] = value.real();
    out[1] = value.imag();
    return HQMAP_OK;
  });
}

hqmap_status hqmap_extension_eval(const hqmap_map* map, double re, double im,
                                  double out[2]) {
  if (map == nullptr || out == nullptr) return fail_null_arg();
  return guarded([&] {
    const hqmap::Cplx value = extension_of(map->doc).evaluate({re, im});
    out[0] = value.real();
    out[1] = value.imag();
    return HQMAP_OK;
  });
}

hqmap_status hqmap_extension_dilatation(const hqmap_map* map, double re, double im,
                                        double out[2]) {
  if (map == nullptr || out == nullptr) return fail_null_arg();
  return guarded([&] {
    const hqmap::Cplx value = extension_of(map->doc).dilatation({re, im});
    out[0] = value.real();
    out[1] = value.imag();
    return HQMAP_OK;
  });
}

hqmap_status hqmap_check(const hqmap_map* map, const char* profiles_csv,
                         double order, int* all_member, char** json_out) {
  if (map == nullptr || all_member == nullptr || json_out == nullptr) {
    return fail_null_arg();
  }
  return guarded([&] {
    const std::optional<double> order_override =
        order > 0.0 ? std::optional<double>(order) : std::nullopt;
    const hqmap::CheckRun run =
        hqmap::run_check(map->doc, split_csv(profiles_csv), order_override);
    *all_member = run.all_member ? 1 : 0;
    *json_out = dup_string(hqmap::report_to_string(run.json));
    return HQMAP_OK;
  });
}

void hqmap_verify_options_init(hqmap_verify_options* options) {
  if (options == nullptr) return;
  options->grid_radii = 200;
  options->grid_angles = 720;
  options->r_max = 10.0;
  options->pairs = 10000;
  options->seed = 1;
  options->order = 0.0;
}

hqmap_status hqmap_extend_verify(const hqmap_map* map,
                                 const hqmap_verify_options* options,
                                 int* bound_violated, char** json_out) {
  if (map == nullptr || bound_violated == nullptr || json_out == nullptr) {
    return fail_null_arg();
  }
  return guarded([&] {
    hqmap_verify_options defaults;
    hqmap_verify_options_init(&defaults);
    const hqmap_verify_options& opt = options ? *options : defaults;
    hqmap::VerifyGridOptions grid_options;
    grid_options.radii_per_region = opt.grid_radii;
    grid_options.angles_per_circle = opt.grid_angles;
    grid_options.r_max = opt.r_max;
    grid_options.pair_count = opt.pairs;
    grid_options.seed = opt.seed;
    const std::optional<double> order_override =
        opt.order > 0.0 ? std::optional<double>(opt.order) : std::nullopt;
    const hqmap::VerifyRun run =
        hqmap::run_extend_verify(map->doc, grid_options, order_override);
    *bound_violated = run.bound_violated ? 1 : 0;
    *json_out = dup_string(hqmap::report_to_string(run.json));
    return HQMAP_OK;
  });
}

void hqmap_render_options_init(hqmap_render_options* options) {
  if (options == nullptr) return;
  options->circle_radii_csv = nullptr;
  options->rays = 12;
  options->samples = 512;
  options->include_timestamp = 1;
}

hqmap_status hqmap_render_svg(const hqmap_map* map,
                              const hqmap_render_options* options,
                              const char* out_path) {
  if (map == nullptr || out_path == nullptr) return fail_null_arg();
  return guarded([&] {
    hqmap_render_options defaults;
    hqmap_render_options_init(&defaults);
    const hqmap_render_options& opt = options ? *options : defaults;
    hqmap::RenderOptions render_options;
    if (opt.circle_radii_csv != nullptr) {
      render_options.circle_radii.clear();
      for (const std::string& item : split_csv(opt.circle_radii_csv)) {
        render_options.circle_radii.push_back(std::stod(item));
      }
    }
    render_options.rays = opt.rays;
    render_options.samples_per_curve = opt.samples;
    render_options.include_timestamp = opt.include_timestamp != 0;
    const std::string svg =
        hqmap::render_svg(extension_of(map->doc), render_options, map->doc.label);
    hqmap::write_text_file(out_path, svg);
    return HQMAP_OK;
  });
}

hqmap_status hqmap_convolve(const hqmap_map* f1, const hqmap_map* f2,
                            int* hypothesis_met, char** json_out) {
  if (f1 == nullptr || f2 == nullptr || hypothesis_met == nullptr ||
      json_out == nullptr) {
    return fail_null_arg();
  }
  return guarded([&] {
    const hqmap::ConvolveRun run = hqmap::run_convolve(f1->doc, f2->doc);
    *hypothesis_met = run.hypothesis_met ? 1 : 0;
    *json_out = dup_string(hqmap::report_to_string(run.json));
    return HQMAP_OK;
  });
}

}  // extern "C"
