#include "hqmap/maps.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>
#include <string>

namespace hqmap {

namespace {

CoefficientList validate_list(CoefficientList coeffs, int min_index,
                              const char* what) {
  std::sort(coeffs.begin(), coeffs.end(),
            [](const Coefficient& x, const Coefficient& y) { return x.n < y.n; });
  int prev = min_index - 1;
  for (const auto& c : coeffs) {
    if (c.n < min_index) {
      throw std::invalid_argument(std::string(what) + ": index " +
                                  std::to_string(c.n) + " below minimum " +
                                  std::to_string(min_index));
    }
    if (c.n == prev) {
      throw std::invalid_argument(std::string(what) + ": duplicate index " +
                                  std::to_string(c.n));
    }
    if (!std::isfinite(c.value.real()) || !std::isfinite(c.value.imag())) {
      throw std::invalid_argument(std::string(what) + ": non-finite value at index " +
                                  std::to_string(c.n));
    }
    prev = c.n;
  }
  return coeffs;
}

void require_finite(Cplx v, const char* what) {
  if (!std::isfinite(v.real()) || !std::isfinite(v.imag())) {
    throw std::invalid_argument(std::string(what) + ": non-finite value");
  }
}

}  // namespace

Cplx ipow(Cplx z, int n) {
  if (n < 0) return 1.0 / ipow(z, -n);
  Cplx result(1.0);
  Cplx base = z;
  unsigned e = static_cast<unsigned>(n);
  while (e != 0) {
    if (e & 1u) result *= base;
    e >>= 1u;
    if (e != 0) base *= base;
  }
  return result;
}

double weighted_index_sum(const CoefficientList& coeffs) {
  double s = 0.0;
  for (const auto& c : coeffs) s += c.n * std::abs(c.value);
  return s;
}

double magnitude_sum(const CoefficientList& coeffs) {
  double s = 0.0;
  for (const auto& c : coeffs) s += std::abs(c.value);
  return s;
}

InteriorMap::InteriorMap(CoefficientList a, CoefficientList b)
    : a_(validate_list(std::move(a), 2, "interior a")),
      b_(validate_list(std::move(b), 1, "interior b")) {}

Cplx InteriorMap::evaluate(Cplx z) const {
  Cplx h = z;
  for (const auto& c : a_) h += c.value * ipow(z, c.n);
  Cplx g(0.0);
  for (const auto& c : b_) g += c.value * ipow(z, c.n);
  return h + std::conj(g);
}

Wirtinger InteriorMap::derivatives(Cplx z) const {
  Cplx hp(1.0);
  for (const auto& c : a_) hp += double(c.n) * c.value * ipow(z, c.n - 1);
  Cplx gp(0.0);
  for (const auto& c : b_) gp += double(c.n) * c.value * ipow(z, c.n - 1);
  return {hp, std::conj(gp)};
}

double InteriorMap::jacobian(Cplx z) const {
  const Wirtinger w = derivatives(z);
  return std::norm(w.fz) - std::norm(w.fzbar);
}

Cplx InteriorMap::dilatation(Cplx z) const {
  const Wirtinger w = derivatives(z);
  if (w.fz == Cplx(0.0)) {
    throw std::domain_error("dilatation undefined: f_z vanishes");
  }
  return w.fzbar / w.fz;
}

ExteriorMap::ExteriorMap(Cplx alpha, Cplx beta, CoefficientList a,
                         CoefficientList b, Cplx log_coeff)
    : alpha_(alpha),
      beta_(beta),
      a_(validate_list(std::move(a), 1, "exterior a")),
      b_(validate_list(std::move(b), 1, "exterior b")),
      log_coeff_(log_coeff) {
  require_finite(alpha_, "alpha");
  require_finite(beta_, "beta");
  require_finite(log_coeff_, "log coefficient");
  if (!(std::norm(beta_) < std::norm(alpha_))) {
    throw std::invalid_argument("exterior map requires |beta| < |alpha|");
  }
}

namespace {
void reject_origin(Cplx z) {
  if (z == Cplx(0.0)) {
    throw std::domain_error("exterior map undefined at z = 0");
  }
}
}  // namespace

Cplx ExteriorMap::evaluate(Cplx z) const {
  reject_origin(z);
  Cplx v = alpha_ * z + beta_ * std::conj(z);
  for (const auto& c : a_) v += c.value * ipow(z, -c.n);
  Cplx g(0.0);
  for (const auto& c : b_) g += c.value * ipow(z, -c.n);
  v += std::conj(g);
  // log|z| = 0.5 log(z zbar), real; no branch ambiguity
  v += log_coeff_ * (0.5 * std::log(std::norm(z)));
  return v;
}

Wirtinger ExteriorMap::derivatives(Cplx z) const {
  reject_origin(z);
  Cplx fz = alpha_ + log_coeff_ / (2.0 * z);
  for (const auto& c : a_) fz -= double(c.n) * c.value * ipow(z, -c.n - 1);
  Cplx gp(0.0);
  for (const auto& c : b_) gp += double(c.n) * c.value * ipow(z, -c.n - 1);
  const Cplx fzbar = beta_ + log_coeff_ / (2.0 * std::conj(z)) - std::conj(gp);
  return {fz, fzbar};
}

double ExteriorMap::jacobian(Cplx z) const {
  const Wirtinger w = derivatives(z);
  return std::norm(w.fz) - std::norm(w.fzbar);
}

Cplx ExteriorMap::dilatation(Cplx z) const {
  const Wirtinger w = derivatives(z);
  if (w.fz == Cplx(0.0)) {
    throw std::domain_error("dilatation undefined: f_z vanishes");
  }
  return w.fzbar / w.fz;
}

}  // namespace hqmap
