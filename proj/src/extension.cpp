#include "hqmap/extension.hpp"

#include <cmath>
#include <stdexcept>

namespace hqmap {

namespace {

std::optional<double> ratio_bound(double numerator, double denominator) {
  if (denominator <= 0.0) return std::nullopt;
  return numerator / denominator;
}

AnalyticBounds interior_bounds(const InteriorMap& f) {
  const double sa = weighted_index_sum(f.a());
  const double sb = weighted_index_sum(f.b());
  AnalyticBounds bounds;
  // |mu_f| <= sum n|b_n| / (1 - sum n|a_n|) on |z| < 1
  bounds.inner = ratio_bound(sb, 1.0 - sa);
  // the reflection swaps the roles of the two sums on |z| > 1
  bounds.outer = ratio_bound(sa, 1.0 - sb);
  return bounds;
}

AnalyticBounds exterior_bounds(const ExteriorMap& f) {
  const double sa = weighted_index_sum(f.a());
  const double sb = weighted_index_sum(f.b());
  const double am = std::abs(f.alpha());
  const double bm = std::abs(f.beta());
  const double lm = std::abs(f.log_coeff());
  AnalyticBounds bounds;
  // reflected side: |mu| <= (|beta| + sum n|a_n|) / (|alpha| - sum n|b_n|)
  bounds.inner = ratio_bound(bm + sa, am - sb);
  // native side, where the log term contributes |A|/2 to both partials
  bounds.outer = ratio_bound(bm + lm / 2.0 + sb, am - lm / 2.0 - sa);
  return bounds;
}

}  // namespace

PlaneExtension::PlaneExtension(InteriorMap source)
    : source_(std::move(source)),
      bounds_(interior_bounds(std::get<InteriorMap>(source_))) {}

PlaneExtension::PlaneExtension(ExteriorMap source)
    : source_(std::move(source)),
      bounds_(exterior_bounds(std::get<ExteriorMap>(source_))) {}

Region PlaneExtension::region_of(Cplx z) const {
  const double r2 = std::norm(z);
  if (source_is_interior()) {
    return r2 <= 1.0 ? Region::inner : Region::outer;
  }
  return r2 >= 1.0 ? Region::outer : Region::inner;
}

Cplx PlaneExtension::evaluate(Cplx z) const { return evaluate_in(region_of(z), z); }

Cplx PlaneExtension::evaluate_in(Region region, Cplx z) const {
  if (source_is_interior()) {
    const InteriorMap& f = interior_source();
    if (region == Region::inner) return f.evaluate(z);
    Cplx v = z;
    for (const auto& c : f.a()) v += c.value * std::conj(ipow(z, -c.n));
    for (const auto& c : f.b()) v += std::conj(c.value) * ipow(z, -c.n);
    return v;
  }
  const ExteriorMap& f = exterior_source();
  if (region == Region::outer) return f.evaluate(z);
  Cplx v = f.alpha() * z + f.beta() * std::conj(z);
  for (const auto& c : f.a()) v += c.value * std::conj(ipow(z, c.n));
  for (const auto& c : f.b()) v += std::conj(c.value) * ipow(z, c.n);
  return v;
}

Wirtinger PlaneExtension::derivatives_in(Region region, Cplx z) const {
  if (source_is_interior()) {
    const InteriorMap& f = interior_source();
    if (region == Region::inner) return f.derivatives(z);
    // analytic part z + sum conj(b_n) z^-n, co-analytic part sum a_n conj(z^-n)
    Cplx fz(1.0);
    for (const auto& c : f.b()) {
      fz -= double(c.n) * std::conj(c.value) * ipow(z, -c.n - 1);
    }
    Cplx fzbar(0.0);
    for (const auto& c : f.a()) {
      fzbar -= double(c.n) * c.value * std::conj(ipow(z, -c.n - 1));
    }
    return {fz, fzbar};
  }
  const ExteriorMap& f = exterior_source();
  if (region == Region::outer) return f.derivatives(z);
  Cplx fz = f.alpha();
  for (const auto& c : f.b()) {
    fz += double(c.n) * std::conj(c.value) * ipow(z, c.n - 1);
  }
  Cplx fzbar = f.beta();
  for (const auto& c : f.a()) {
    fzbar += double(c.n) * c.value * std::conj(ipow(z, c.n - 1));
  }
  return {fz, fzbar};
}

Wirtinger PlaneExtension::derivatives(Cplx z) const {
  return derivatives_in(region_of(z), z);
}

Cplx PlaneExtension::dilatation(Cplx z) const {
  const Wirtinger w = derivatives(z);
  if (w.fz == Cplx(0.0)) {
    throw std::domain_error("dilatation undefined: f_z vanishes");
  }
  return w.fzbar / w.fz;
}

PlaneExtension extend_interior(const InteriorMap& f) { return PlaneExtension(f); }

PlaneExtension extend_exterior(const ExteriorMap& f) { return PlaneExtension(f); }

}  // namespace hqmap
