/*
 * C interface to the hqmap library: harmonic maps of the interior and
 * exterior unit disk, coefficient-class checks, piecewise plane extensions
 * with dilatation verification, harmonic convolution, and SVG rendering.
 *
 * Maps travel as opaque handles created from JSON documents. Report-producing
 * calls hand back malloc'd JSON strings; release them with hqmap_string_free.
 * Every call returns a status code; on failure hqmap_last_error() holds a
 * thread-local diagnostic message.
 */
#ifndef HQMAP_H
#define HQMAP_H

#include <stdint.h>

#if defined(_WIN32)
#define HQMAP_API __declspec(dllexport)
#else
#define HQMAP_API __attribute__((visibility("default")))
#endif

#ifdef __cplusplus
extern "C" {
#endif

typedef enum hqmap_status {
  HQMAP_OK = 0,
  HQMAP_ERR_PARSE = 1,   /* invalid document or map data */
  HQMAP_ERR_DOMAIN = 2,  /* operation precondition violated */
  HQMAP_ERR_IO = 3,      /* file could not be read or written */
  HQMAP_ERR_INTERNAL = 4
} hqmap_status;

typedef struct hqmap_map hqmap_map; /* opaque: one parsed map document */

HQMAP_API const char* hqmap_version(void);
/* thread-local message describing the most recent failure */
HQMAP_API const char* hqmap_last_error(void);
HQMAP_API void hqmap_string_free(char* s);

HQMAP_API hqmap_status hqmap_map_from_json(const char* json_text, hqmap_map** out);
HQMAP_API hqmap_status hqmap_map_from_file(const char* path, hqmap_map** out);
HQMAP_API void hqmap_map_free(hqmap_map* map);
/* 0 = interior, 1 = exterior, -1 = null handle */
HQMAP_API int hqmap_map_kind(const hqmap_map* map);
HQMAP_API hqmap_status hqmap_map_to_json(const hqmap_map* map, char** json_out);

/* Point evaluation. out receives [re, im]. */
HQMAP_API hqmap_status hqmap_map_eval(const hqmap_map* map, double re, double im,
                                      double out[2]);
/* Evaluation and dilatation of the piecewise plane extension of the map. */
HQMAP_API hqmap_status hqmap_extension_eval(const hqmap_map* map, double re,
                                            double im, double out[2]);
HQMAP_API hqmap_status hqmap_extension_dilatation(const hqmap_map* map, double re,
                                                  double im, double out[2]);

/*
 * Class-membership checks. profiles_csv selects from "starlike", "convex",
 * "strongly-starlike", "sigma" (comma separated); empty or NULL selects every
 * profile applicable to the map's kind. order > 0 overrides the document's
 * strongly-starlike order. all_member receives 1 when every requested
 * membership holds.
 */
HQMAP_API hqmap_status hqmap_check(const hqmap_map* map, const char* profiles_csv,
                                   double order, int* all_member, char** json_out);

typedef struct hqmap_verify_options {
  int grid_radii;      /* radii per region, default 200 */
  int grid_angles;     /* angles per circle, default 720 */
  double r_max;        /* outer grid cap, default 10 */
  int pairs;           /* bi-Lipschitz sample pairs, default 10000 */
  uint64_t seed;       /* default 1 */
  double order;        /* <= 0 means unset */
} hqmap_verify_options;

HQMAP_API void hqmap_verify_options_init(hqmap_verify_options* options);

/*
 * Builds the plane extension, measures grid dilatation suprema, bi-Lipschitz
 * ratios, the Jacobian minimum and (given an order) the starlike angle.
 * bound_violated receives 1 when a grid supremum exceeded its analytic bound
 * beyond tolerance.
 */
HQMAP_API hqmap_status hqmap_extend_verify(const hqmap_map* map,
                                           const hqmap_verify_options* options,
                                           int* bound_violated, char** json_out);

typedef struct hqmap_render_options {
  const char* circle_radii_csv; /* NULL: 0.2,0.4,0.6,0.8,1.0,1.25,1.6,2.0 */
  int rays;                     /* default 12 */
  int samples;                  /* points per curve, default 512 */
  int include_timestamp;        /* default 1 */
} hqmap_render_options;

HQMAP_API void hqmap_render_options_init(hqmap_render_options* options);

HQMAP_API hqmap_status hqmap_render_svg(const hqmap_map* map,
                                        const hqmap_render_options* options,
                                        const char* out_path);

/*
 * Coefficient-wise convolution of two exterior maps plus the closure report.
 * hypothesis_met receives 1 when both operands have minimal class constants
 * below 1 (the closure bound applies only then).
 */
HQMAP_API hqmap_status hqmap_convolve(const hqmap_map* f1, const hqmap_map* f2,
                                      int* hypothesis_met, char** json_out);

#ifdef __cplusplus
} /* extern "C" */
#endif

#endif /* HQMAP_H */
