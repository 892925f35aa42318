#include "hqmap/convolution.hpp"

#include <cmath>
#include <stdexcept>

namespace hqmap {

namespace {

// product of same-index coefficients; lists are sorted by index
CoefficientList hadamard(const CoefficientList& x, const CoefficientList& y) {
  CoefficientList out;
  auto ix = x.begin();
  auto iy = y.begin();
  while (ix != x.end() && iy != y.end()) {
    if (ix->n < iy->n) {
      ++ix;
    } else if (iy->n < ix->n) {
      ++iy;
    } else {
      out.push_back({ix->n, ix->value * iy->value});
      ++ix;
      ++iy;
    }
  }
  return out;
}

}  // namespace

ExteriorMap convolve(const ExteriorMap& f1, const ExteriorMap& f2) {
  return ExteriorMap(f1.alpha() * f2.alpha(), f1.beta() * f2.beta(),
                     hadamard(f1.a(), f2.a()), hadamard(f1.b(), f2.b()),
                     f1.log_coeff() * f2.log_coeff());
}

ConvolutionReport closure_check(const ExteriorMap& f1, const ExteriorMap& f2) {
  const SigmaReport s1 = check_sigma_condition(f1);
  const SigmaReport s2 = check_sigma_condition(f2);
  if (!s1.member_of || !s2.member_of) {
    throw std::domain_error("closure check requires both minimal constants < 1");
  }
  ConvolutionReport report{convolve(f1, f2)};
  report.k1 = s1.minimal_k;
  report.k2 = s2.minimal_k;
  report.m_value = check_sigma_condition(report.product).minimal_k;
  report.bound = std::sqrt(report.k1 * report.k2);
  report.within_bound = report.m_value <= report.bound + kConditionTol;
  return report;
}

CauchySchwarzDiagnostic cauchy_schwarz_diagnostic(const ExteriorMap& f1,
                                                  const ExteriorMap& f2) {
  const auto half_sum = [](const ExteriorMap& f) {
    double s = std::pow(std::abs(f.beta()) + std::abs(f.log_coeff()), 2);
    for (const auto& c : f.a()) s += c.n * std::norm(c.value);
    for (const auto& c : f.b()) s += c.n * std::norm(c.value);
    return s / std::norm(f.alpha());
  };
  CauchySchwarzDiagnostic diag;
  diag.sum_x_sq = half_sum(f1);
  diag.sum_big_x_sq = half_sum(f2);
  diag.cs_bound = std::sqrt(diag.sum_x_sq * diag.sum_big_x_sq);
  diag.m_value = check_sigma_condition(convolve(f1, f2)).minimal_k;
  return diag;
}

}  // namespace hqmap
