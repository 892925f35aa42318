#include "hqmap/verify.hpp"

#include <cmath>
#include <numbers>
#include <stdexcept>

#include "hqmap/rng.hpp"

namespace hqmap {

namespace {

constexpr double kPi = std::numbers::pi;
constexpr double kEdge = 1e-3;  // offset of the grids from the seam and 0

std::vector<double> log_spaced(double lo, double hi, int count) {
  std::vector<double> radii;
  radii.reserve(count);
  if (count == 1) {
    radii.push_back(lo);
    return radii;
  }
  const double la = std::log(lo);
  const double lb = std::log(hi);
  for (int i = 0; i < count; ++i) {
    radii.push_back(std::exp(la + (lb - la) * i / double(count - 1)));
  }
  return radii;
}

void validate_grid(const GridSpec& grid) {
  if (grid.radii.empty()) throw std::invalid_argument("grid has no radii");
  if (grid.angles_per_circle < 1) {
    throw std::invalid_argument("grid needs at least one angle");
  }
  double prev = 0.0;
  for (double r : grid.radii) {
    if (!(r > prev)) throw std::invalid_argument("grid radii must increase strictly");
    if (r == 1.0) throw std::invalid_argument("grid radii must avoid the seam");
    if (grid.region == GridRegion::inner && r >= 1.0) {
      throw std::invalid_argument("inner grid radius above 1");
    }
    if (grid.region == GridRegion::outer && r <= 1.0) {
      throw std::invalid_argument("outer grid radius below 1");
    }
    prev = r;
  }
}

Cplx grid_point(double r, int j, int angles) {
  const double theta = 2.0 * kPi * j / angles;
  return Cplx(r * std::cos(theta), r * std::sin(theta));
}

// max over the grid with ties resolved toward the first (smallest radius,
// then smallest angle) point
template <typename Value>
void scan_max(const GridSpec& grid, Value&& value_at, double& best, Cplx& where) {
  bool first = true;
  for (double r : grid.radii) {
    for (int j = 0; j < grid.angles_per_circle; ++j) {
      const Cplx z = grid_point(r, j, grid.angles_per_circle);
      const std::optional<double> v = value_at(z);
      if (!v) continue;
      if (first || *v > best) {
        best = *v;
        where = z;
        first = false;
      }
    }
  }
  if (first) throw std::domain_error("no evaluable grid points");
}

}  // namespace

GridSpec make_grid(GridRegion region, int radii_per_region, int angles_per_circle,
                   double r_max) {
  if (radii_per_region < 1) throw std::invalid_argument("need at least one radius");
  if (r_max <= 1.0 + kEdge) throw std::invalid_argument("r_max too small");
  GridSpec grid;
  grid.region = region;
  grid.angles_per_circle = angles_per_circle;
  if (region == GridRegion::inner || region == GridRegion::both) {
    auto inner = log_spaced(kEdge, 1.0 - kEdge, radii_per_region);
    grid.radii.insert(grid.radii.end(), inner.begin(), inner.end());
  }
  if (region == GridRegion::outer || region == GridRegion::both) {
    auto outer = log_spaced(1.0 + kEdge, r_max, radii_per_region);
    grid.radii.insert(grid.radii.end(), outer.begin(), outer.end());
  }
  validate_grid(grid);
  return grid;
}

SupDilatation sup_dilatation(const PlaneExtension& extension, const GridSpec& grid) {
  validate_grid(grid);
  SupDilatation result;
  scan_max(
      grid,
      [&](Cplx z) -> std::optional<double> {
        const Wirtinger w = extension.derivatives(z);
        const double mu = std::abs(w.fzbar / w.fz);
        if (w.fz == Cplx(0.0) || !std::isfinite(mu)) {
          ++result.skipped_points;
          return std::nullopt;
        }
        return mu;
      },
      result.sup_mu, result.argmax_point);
  return result;
}

BilipschitzSample bilipschitz_sample(const PlaneExtension& extension,
                                     GridRegion region, int pair_count,
                                     std::uint64_t seed, double r_max) {
  if (pair_count < 1) throw std::invalid_argument("pair_count must be >= 1");
  SplitMix64 rng(seed);
  const auto draw = [&]() -> Cplx {
    double lo = kEdge, hi = 1.0 - kEdge;
    if (region == GridRegion::outer) {
      lo = 1.0 + kEdge;
      hi = r_max;
    } else if (region == GridRegion::both) {
      lo = kEdge;
      hi = r_max;
    }
    const double r = std::exp(rng.uniform(std::log(lo), std::log(hi)));
    const double theta = rng.uniform(0.0, 2.0 * kPi);
    return Cplx(r * std::cos(theta), r * std::sin(theta));
  };

  BilipschitzSample sample;
  sample.pair_count = pair_count;
  bool first = true;
  for (int i = 0; i < pair_count; ++i) {
    Cplx z1 = draw();
    Cplx z2 = draw();
    while (std::abs(z1 - z2) < 1e-9) z2 = draw();
    const double ratio =
        std::abs(extension.evaluate(z1) - extension.evaluate(z2)) / std::abs(z1 - z2);
    if (first) {
      sample.min_ratio = sample.max_ratio = ratio;
      first = false;
    } else {
      sample.min_ratio = std::min(sample.min_ratio, ratio);
      sample.max_ratio = std::max(sample.max_ratio, ratio);
    }
  }
  return sample;
}

double starlike_angle(const InteriorMap& f, const GridSpec& grid) {
  if (grid.region != GridRegion::inner) {
    throw std::invalid_argument("starlike angle requires an inner grid");
  }
  validate_grid(grid);
  double best = 0.0;
  Cplx where;
  scan_max(
      grid,
      [&](Cplx z) -> std::optional<double> {
        const Cplx value = f.evaluate(z);
        if (value == Cplx(0.0)) {
          throw std::domain_error("starlike angle undefined: f vanishes on the grid");
        }
        const Wirtinger w = f.derivatives(z);
        const Cplx numer = z * w.fz - std::conj(z) * w.fzbar;
        return std::abs(std::arg(numer / value));
      },
      best, where);
  return best;
}

namespace {

template <typename Map>
double min_jacobian_over(const Map& f, const GridSpec& grid) {
  validate_grid(grid);
  bool first = true;
  double best = 0.0;
  for (double r : grid.radii) {
    for (int j = 0; j < grid.angles_per_circle; ++j) {
      const double value = f.jacobian(grid_point(r, j, grid.angles_per_circle));
      if (first || value < best) {
        best = value;
        first = false;
      }
    }
  }
  return best;
}

}  // namespace

double sense_preserving_scan(const InteriorMap& f, const GridSpec& grid) {
  if (grid.region != GridRegion::inner) {
    throw std::invalid_argument("interior scan requires an inner grid");
  }
  return min_jacobian_over(f, grid);
}

double sense_preserving_scan(const ExteriorMap& f, const GridSpec& grid) {
  if (grid.region != GridRegion::outer) {
    throw std::invalid_argument("exterior scan requires an outer grid");
  }
  return min_jacobian_over(f, grid);
}

VerificationReport run_verification(const PlaneExtension& extension,
                                    const VerifyGridOptions& options,
                                    std::optional<double> order) {
  VerificationReport report;
  report.grid_radii_per_region = options.radii_per_region;
  report.grid_angles = options.angles_per_circle;
  report.r_max = options.r_max;
  report.seed = options.seed;

  const GridSpec inner = make_grid(GridRegion::inner, options.radii_per_region,
                                   options.angles_per_circle, options.r_max);
  const GridSpec outer = make_grid(GridRegion::outer, options.radii_per_region,
                                   options.angles_per_circle, options.r_max);

  const SupDilatation si = sup_dilatation(extension, inner);
  const SupDilatation so = sup_dilatation(extension, outer);
  report.inner_sup_mu = si.sup_mu;
  report.inner_argmax = si.argmax_point;
  report.outer_sup_mu = so.sup_mu;
  report.outer_argmax = so.argmax_point;
  report.skipped_points = si.skipped_points + so.skipped_points;
  if (so.sup_mu > si.sup_mu) {
    report.sup_mu = so.sup_mu;
    report.argmax_point = so.argmax_point;
  } else {
    report.sup_mu = si.sup_mu;
    report.argmax_point = si.argmax_point;
  }

  const GridRegion home =
      extension.source_is_interior() ? GridRegion::inner : GridRegion::outer;
  report.bilipschitz = bilipschitz_sample(extension, home, options.pair_count,
                                          options.seed, options.r_max);

  if (extension.source_is_interior()) {
    report.min_jacobian = sense_preserving_scan(extension.interior_source(), inner);
    if (order) {
      report.max_starlike_angle = starlike_angle(extension.interior_source(), inner);
    }
  } else {
    report.min_jacobian = sense_preserving_scan(extension.exterior_source(), outer);
    const ExteriorMap& f = extension.exterior_source();
    report.mu_asymptotic = std::abs(f.beta()) / std::abs(f.alpha());
  }
  return report;
}

}  // namespace hqmap
