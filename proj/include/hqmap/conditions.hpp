// Weighted coefficient functionals and class-membership predicates for
// harmonic maps: the starlike {n}/{n} and convex {n^2}/{n^2} profiles, the
// strongly-starlike weights phi_n(order), psi_n(order), the refinement ratio
// condition phi_n/n >= 1/k1, psi_n/n >= 1/k2, and the exterior-class
// functional |beta| + |A| + sum n(|a_n| + |b_n|) <= k |alpha|.
#pragma once

#include <functional>
#include <optional>
#include <string>

#include "hqmap/maps.hpp"

namespace hqmap {

// Closed inequalities against class bounds admit this much overshoot, so
// equality cases (extremal maps with sum exactly 1) are not lost to rounding.
inline constexpr double kConditionTol = 1e-12;

struct WeightProfile {
  std::string name;
  std::function<double(int)> phi;  // weight for |a_n|, n >= 2
  std::function<double(int)> psi;  // weight for |b_n|, n >= 1
};

// phi_n(order) = (n - 1 + sqrt(n^2 - 2n cos(pi*order) + 1)) / (2 sin(pi*order/2))
// for n >= 2, 0 < order < 1. Satisfies n < phi_n(order) < n / sin(pi*order/2).
double phi_weight(int n, double order);
// psi_n(order) = (n + 1 + sqrt(n^2 + 2n cos(pi*order) + 1)) / (2 sin(pi*order/2))
// for n >= 1; psi_1 = (1 + cos(pi*order/2)) / sin(pi*order/2).
double psi_weight(int n, double order);

WeightProfile starlike_profile();                        // {n}, {n}
WeightProfile convex_profile();                          // {n^2}, {n^2}
WeightProfile strongly_starlike_profile(double order);   // {phi_n}, {psi_n}

enum class B1Branch { zero, nonzero };
enum class BoundRoute { none, reciprocal_psi1, two_over_psi2 };

struct ClassReport {
  std::string profile;
  double weighted_sum = 0.0;
  bool member = false;
  B1Branch b1_branch = B1Branch::zero;
  // equals weighted_sum whenever the map is a member
  std::optional<double> minimal_k;
  // Single-sequence dilatation-bound metadata, reported when the profile has
  // phi == psi on the map's support and the branch hypothesis holds:
  // 1/psi_1 when psi_1 > 1 and psi_n/n >= psi_1 (b_1 != 0 branch), or
  // 2/psi_2 when psi_1 = 1 and psi_n/n >= psi_2/2 > 1 (b_1 = 0 branch).
  std::optional<double> uniform_dilatation_bound;
  BoundRoute bound_route = BoundRoute::none;
};

// psi_1 |b_1| + sum_{n>=2} (phi_n |a_n| + psi_n |b_n|) over the stored support
double weighted_sum(const InteriorMap& f, const WeightProfile& profile);

ClassReport check_membership(const InteriorMap& f, const WeightProfile& profile);

struct Cond1Result {
  bool phi_ok = false;
  bool psi_ok = false;
  bool ok() const { return phi_ok && psi_ok; }
};

// Checks phi_n/n >= 1/k1 for 2 <= n <= max_index and psi_n/n >= 1/k2 for
// 1 <= n <= max_index. Requires 0 < k1 < 1 and 0 < k2 < 1.
Cond1Result check_cond1(const WeightProfile& profile, double k1, double k2,
                        int max_index);

// Same ratio condition for the strongly-starlike profile, decided for every
// index at once: phi_n/n increases from phi_2/2 and psi_n/n decreases toward
// 1/sin(pi*order/2), so the verdict needs only those two endpoints.
Cond1Result check_cond1_all_n(double order, double k1, double k2);

struct SigmaReport {
  double minimal_k = 0.0;
  // present exactly when minimal_k < 1
  std::optional<double> member_of;
};

// minimal_k = (|beta| + |A| + sum n(|a_n| + |b_n|)) / |alpha|
SigmaReport check_sigma_condition(const ExteriorMap& f);

struct MonotonicityScan {
  bool phi_increasing = false;
  bool psi_decreasing = false;
};

// Verifies phi_{n+1}/(n+1) > phi_n/n for 2 <= n < max_index and
// psi_{n+1}/(n+1) < psi_n/n for 1 <= n < max_index, strictly.
MonotonicityScan monotonicity_scan(double order, int max_index);

}  // namespace hqmap
