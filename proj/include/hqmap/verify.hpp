// Grid- and sampling-based verification: dilatation suprema over annular
// grids, empirical bi-Lipschitz ratios over seeded random point pairs,
// minimum Jacobian scans, and the strongly-starlike angle
// max |arg((z f_z - conj(z) f_zbar) / f)|.
//
// Grid evaluation is pure and order-independent; the reductions are
// deterministic (ties resolved toward the smallest radius, then the smallest
// angle), so results are reproducible from (map, grid, seed) alone.
#pragma once

#include <cstdint>
#include <optional>
#include <vector>

#include "hqmap/extension.hpp"
#include "hqmap/maps.hpp"

namespace hqmap {

enum class GridRegion { inner, outer, both };

struct GridSpec {
  std::vector<double> radii;  // sorted ascending; never 0 or exactly 1
  int angles_per_circle = 720;
  GridRegion region = GridRegion::both;
};

// Logarithmically spaced radii: [1e-3, 1-1e-3] inside, [1+1e-3, r_max]
// outside, radii_per_region points each, concatenated for GridRegion::both.
GridSpec make_grid(GridRegion region, int radii_per_region = 200,
                   int angles_per_circle = 720, double r_max = 10.0);

struct SupDilatation {
  double sup_mu = 0.0;
  Cplx argmax_point;
  int skipped_points = 0;  // grid points where f_z vanished
};

// Maximum of |mu| over the grid; a lower bound for the essential supremum.
SupDilatation sup_dilatation(const PlaneExtension& extension, const GridSpec& grid);

struct BilipschitzSample {
  double min_ratio = 0.0;
  double max_ratio = 0.0;
  int pair_count = 0;
};

// min/max of |F(z1) - F(z2)| / |z1 - z2| over seeded pseudorandom pairs,
// drawn uniformly in (log radius, angle) within the region.
BilipschitzSample bilipschitz_sample(const PlaneExtension& extension,
                                     GridRegion region, int pair_count,
                                     std::uint64_t seed, double r_max = 10.0);

// Maximum of |arg((z f_z - conj(z) f_zbar) / f)| over an inner grid.
// Throws std::domain_error if f vanishes at a grid point.
double starlike_angle(const InteriorMap& f, const GridSpec& grid);

// Minimum Jacobian over the grid; positive everywhere is the numerical
// evidence of sense-preservation.
double sense_preserving_scan(const InteriorMap& f, const GridSpec& grid);
double sense_preserving_scan(const ExteriorMap& f, const GridSpec& grid);

struct VerificationReport {
  double sup_mu = 0.0;
  Cplx argmax_point;
  int skipped_points = 0;
  double inner_sup_mu = 0.0;
  Cplx inner_argmax;
  double outer_sup_mu = 0.0;
  Cplx outer_argmax;
  BilipschitzSample bilipschitz;
  double min_jacobian = 0.0;
  std::optional<double> max_starlike_angle;
  // limit of |mu| as |z| -> infinity for exterior sources: |beta / alpha|
  std::optional<double> mu_asymptotic;
  int grid_radii_per_region = 0;
  int grid_angles = 0;
  double r_max = 0.0;
  std::uint64_t seed = 0;
};

struct VerifyGridOptions {
  int radii_per_region = 200;
  int angles_per_circle = 720;
  double r_max = 10.0;
  int pair_count = 10000;
  std::uint64_t seed = 1;
};

// Full battery for one extension: per-region and combined dilatation suprema,
// bi-Lipschitz ratios and Jacobian scan over the source map's home region,
// and the starlike angle when an order is supplied for an interior source.
VerificationReport run_verification(const PlaneExtension& extension,
                                    const VerifyGridOptions& options,
                                    std::optional<double> order = std::nullopt);

}  // namespace hqmap
