// Piecewise plane extensions. An interior map is reflected to |z| >= 1 as
//   z + sum a_n conj(z^-n) + sum conj(b_n) z^-n,
// an exterior map to |z| <= 1 as
//   alpha z + beta conj(z) + sum a_n conj(z)^n + sum conj(b_n) z^n,
// and both formulas agree pointwise on |z| = 1. Analytic dilatation bounds
// per region come with the construction.
#pragma once

#include <optional>
#include <variant>

#include "hqmap/maps.hpp"

namespace hqmap {

enum class Region { inner, outer };

struct AnalyticBounds {
  // Series sup-bounds for |mu| on |z| < 1 and |z| > 1. Absent when the
  // corresponding denominator is not positive (bound unavailable).
  std::optional<double> inner;
  std::optional<double> outer;

  std::optional<double> overall() const {
    if (!inner || !outer) return std::nullopt;
    return std::max(*inner, *outer);
  }
};

class PlaneExtension {
 public:
  explicit PlaneExtension(InteriorMap source);
  explicit PlaneExtension(ExteriorMap source);

  bool source_is_interior() const {
    return std::holds_alternative<InteriorMap>(source_);
  }
  const InteriorMap& interior_source() const {
    return std::get<InteriorMap>(source_);
  }
  const ExteriorMap& exterior_source() const {
    return std::get<ExteriorMap>(source_);
  }

  // The seam |z| = 1 belongs to the source map's own region.
  Region region_of(Cplx z) const;

  Cplx evaluate(Cplx z) const;
  Cplx dilatation(Cplx z) const;
  Wirtinger derivatives(Cplx z) const;

  // Evaluate a specific region's formula regardless of where z lies; used to
  // compare the two formulas on and near the seam.
  Cplx evaluate_in(Region region, Cplx z) const;
  Wirtinger derivatives_in(Region region, Cplx z) const;

  const AnalyticBounds& bounds() const { return bounds_; }

 private:
  std::variant<InteriorMap, ExteriorMap> source_;
  AnalyticBounds bounds_;
};

PlaneExtension extend_interior(const InteriorMap& f);
PlaneExtension extend_exterior(const ExteriorMap& f);

}  // namespace hqmap
