#include "hqmap/conditions.hpp"

#include <cmath>
#include <numbers>
#include <set>
#include <stdexcept>

namespace hqmap {

namespace {

constexpr double kPi = std::numbers::pi;

void require_order(double order) {
  if (!(order > 0.0 && order < 1.0)) {
    throw std::invalid_argument("order must lie in (0, 1)");
  }
}

std::string format_order(double order) {
  char buf[40];
  std::snprintf(buf, sizeof buf, "%.12g", order);
  return buf;
}

}  // namespace

double phi_weight(int n, double order) {
  require_order(order);
  if (n < 2) throw std::invalid_argument("phi weight requires n >= 2");
  const double nn = n;
  const double root = std::sqrt(nn * nn - 2.0 * nn * std::cos(kPi * order) + 1.0);
  return (nn - 1.0 + root) / (2.0 * std::sin(kPi * order / 2.0));
}

double psi_weight(int n, double order) {
  require_order(order);
  if (n < 1) throw std::invalid_argument("psi weight requires n >= 1");
  const double nn = n;
  const double root = std::sqrt(nn * nn + 2.0 * nn * std::cos(kPi * order) + 1.0);
  return (nn + 1.0 + root) / (2.0 * std::sin(kPi * order / 2.0));
}

WeightProfile starlike_profile() {
  return {"starlike",
          [](int n) { return double(n); },
          [](int n) { return double(n); }};
}

WeightProfile convex_profile() {
  return {"convex",
          [](int n) { return double(n) * n; },
          [](int n) { return double(n) * n; }};
}

WeightProfile strongly_starlike_profile(double order) {
  require_order(order);
  return {"strongly-starlike(order=" + format_order(order) + ")",
          [order](int n) { return phi_weight(n, order); },
          [order](int n) { return psi_weight(n, order); }};
}

double weighted_sum(const InteriorMap& f, const WeightProfile& profile) {
  double s = 0.0;
  for (const auto& c : f.a()) s += profile.phi(c.n) * std::abs(c.value);
  for (const auto& c : f.b()) s += profile.psi(c.n) * std::abs(c.value);
  return s;
}

namespace {

// Single-sequence bound metadata: meaningful only when the profile weighs
// a_n and b_n identically over the map's support.
void attach_uniform_bound(ClassReport& report, const InteriorMap& f,
                          const WeightProfile& profile) {
  std::set<int> support;
  support.insert(2);
  for (const auto& c : f.a()) support.insert(c.n);
  for (const auto& c : f.b()) support.insert(c.n);
  for (int n : support) {
    if (n >= 2 && profile.phi(n) != profile.psi(n)) return;
  }

  const double psi1 = profile.psi(1);
  if (report.b1_branch == B1Branch::nonzero) {
    if (!(psi1 > 1.0 + kConditionTol)) return;
    for (int n : support) {
      if (profile.psi(n) / n < psi1 - kConditionTol) return;
    }
    report.uniform_dilatation_bound = 1.0 / psi1;
    report.bound_route = BoundRoute::reciprocal_psi1;
  } else {
    const double psi2 = profile.psi(2);
    if (std::abs(psi1 - 1.0) > kConditionTol) return;
    if (!(psi2 / 2.0 > 1.0 + kConditionTol)) return;
    for (int n : support) {
      if (n >= 2 && profile.psi(n) / n < psi2 / 2.0 - kConditionTol) return;
    }
    report.uniform_dilatation_bound = 2.0 / psi2;
    report.bound_route = BoundRoute::two_over_psi2;
  }
}

}  // namespace

ClassReport check_membership(const InteriorMap& f, const WeightProfile& profile) {
  ClassReport report;
  report.profile = profile.name;
  report.weighted_sum = weighted_sum(f, profile);
  report.member = report.weighted_sum <= 1.0 + kConditionTol;
  report.b1_branch = B1Branch::zero;
  for (const auto& c : f.b()) {
    if (c.n == 1 && c.value != Cplx(0.0)) report.b1_branch = B1Branch::nonzero;
  }
  if (report.member) report.minimal_k = report.weighted_sum;
  attach_uniform_bound(report, f, profile);
  return report;
}

Cond1Result check_cond1(const WeightProfile& profile, double k1, double k2,
                        int max_index) {
  if (!(k1 > 0.0 && k1 < 1.0 && k2 > 0.0 && k2 < 1.0)) {
    throw std::invalid_argument("check_cond1 requires k1, k2 in (0, 1)");
  }
  if (max_index < 2) throw std::invalid_argument("max_index must be >= 2");
  Cond1Result result{true, true};
  for (int n = 2; n <= max_index; ++n) {
    if (profile.phi(n) / n < 1.0 / k1 - kConditionTol) {
      result.phi_ok = false;
      break;
    }
  }
  for (int n = 1; n <= max_index; ++n) {
    if (profile.psi(n) / n < 1.0 / k2 - kConditionTol) {
      result.psi_ok = false;
      break;
    }
  }
  return result;
}

Cond1Result check_cond1_all_n(double order, double k1, double k2) {
  require_order(order);
  if (!(k1 > 0.0 && k1 < 1.0 && k2 > 0.0 && k2 < 1.0)) {
    throw std::invalid_argument("check_cond1_all_n requires k1, k2 in (0, 1)");
  }
  Cond1Result result;
  // phi_n/n is smallest at n = 2; psi_n/n stays above its limit 1/sin.
  result.phi_ok = phi_weight(2, order) / 2.0 >= 1.0 / k1 - kConditionTol;
  result.psi_ok = k2 >= std::sin(kPi * order / 2.0) - kConditionTol;
  return result;
}

SigmaReport check_sigma_condition(const ExteriorMap& f) {
  SigmaReport report;
  const double total = std::abs(f.beta()) + std::abs(f.log_coeff()) +
                       weighted_index_sum(f.a()) + weighted_index_sum(f.b());
  report.minimal_k = total / std::abs(f.alpha());
  if (report.minimal_k < 1.0) report.member_of = report.minimal_k;
  return report;
}

MonotonicityScan monotonicity_scan(double order, int max_index) {
  require_order(order);
  if (max_index < 3) throw std::invalid_argument("max_index must be >= 3");
  MonotonicityScan scan{true, true};
  double prev = phi_weight(2, order) / 2.0;
  for (int n = 3; n <= max_index; ++n) {
    const double cur = phi_weight(n, order) / n;
    if (!(cur > prev)) {
      scan.phi_increasing = false;
      break;
    }
    prev = cur;
  }
  prev = psi_weight(1, order);
  for (int n = 2; n <= max_index; ++n) {
    const double cur = psi_weight(n, order) / n;
    if (!(cur < prev)) {
      scan.psi_decreasing = false;
      break;
    }
    prev = cur;
  }
  return scan;
}

}  // namespace hqmap
