#include <cmath>
#include <numbers>

#include <doctest.h>

#include "hqmap/conditions.hpp"
#include "hqmap/extension.hpp"
#include "hqmap/rng.hpp"
#include "support/testutil.hpp"

using hqmap::Cplx;
using hqmap::ExteriorMap;
using hqmap::InteriorMap;
using hqmap::PlaneExtension;

namespace {
constexpr double kPi = std::numbers::pi;

bool close(Cplx a, Cplx b, double tol = 1e-14) { return std::abs(a - b) <= tol; }
}  // namespace

TEST_CASE("identity extensions") {
  const PlaneExtension interior = hqmap::extend_interior(InteriorMap{});
  CHECK(*interior.bounds().inner == 0.0);
  CHECK(*interior.bounds().outer == 0.0);
  CHECK(*interior.bounds().overall() == 0.0);
  CHECK(close(interior.evaluate({0.3, -0.1}), {0.3, -0.1}));
  CHECK(close(interior.evaluate({2.0, 1.0}), {2.0, 1.0}));
  CHECK(close(interior.dilatation({2.0, 1.0}), {0.0, 0.0}));

  const PlaneExtension exterior = hqmap::extend_exterior(ExteriorMap{});
  CHECK(*exterior.bounds().overall() == 0.0);
  CHECK(close(exterior.evaluate({0.3, -0.1}), {0.3, -0.1}));
}

TEST_CASE("interior analytic bounds") {
  const InteriorMap f({{2, Cplx(0.2, 0.0)}}, {{1, Cplx(0.1, 0.0)}});
  const auto bounds = hqmap::extend_interior(f).bounds();
  CHECK(*bounds.inner == doctest::Approx(1.0 / 6.0).epsilon(1e-15));
  CHECK(*bounds.outer == doctest::Approx(4.0 / 9.0).epsilon(1e-15));
  CHECK(*bounds.overall() == doctest::Approx(4.0 / 9.0).epsilon(1e-15));
}

TEST_CASE("single co-analytic coefficient extension") {
  // f = z + b conj(z)^n with |b| = 1/psi_n: reflection z + conj(b) z^-n,
  // bound n|b| = 2n sin(pi a/2) / (n + 1 + |n + e^{i pi a}|)
  const int n = 3;
  const double order = 0.5;
  const double b = 1.0 / hqmap::psi_weight(n, order);
  const InteriorMap f({}, {{n, Cplx(b, 0.0)}});
  const PlaneExtension ext = hqmap::extend_interior(f);
  CHECK(*ext.bounds().inner == doctest::Approx(n * b).epsilon(1e-15));
  CHECK(*ext.bounds().outer == 0.0);
  const double closed_form =
      2.0 * n * std::sin(kPi * order / 2.0) /
      (n + 1.0 + std::abs(Cplx(double(n), 0.0) +
                          std::exp(Cplx(0.0, kPi * order))));
  CHECK(*ext.bounds().overall() == doctest::Approx(closed_form).epsilon(1e-14));

  CHECK(close(ext.evaluate({2.0, 0.0}), {2.0 + b / 8.0, 0.0}));
  // co-analytic mass reflects to the analytic side: zero outer dilatation
  CHECK(close(ext.dilatation({1.7, 0.4}), {0.0, 0.0}));
}

TEST_CASE("exterior sample bounds and values") {
  const PlaneExtension ext = hqmap::extend_exterior(testutil::exterior_log_sample());
  CHECK(*ext.bounds().inner == doctest::Approx(2.0 / 3.0).epsilon(1e-15));
  CHECK(*ext.bounds().outer == doctest::Approx(7.0 / 9.0).epsilon(1e-15));
  CHECK(*ext.bounds().overall() == doctest::Approx(7.0 / 9.0).epsilon(1e-15));

  // inner formula: z - (i/6) conj(z) - (i/8) conj(z)^4 at z = 0.5
  CHECK(close(ext.evaluate({0.5, 0.0}),
              {0.5, -(1.0 / 12.0 + 1.0 / 128.0)}, 1e-15));

  // |mu| just outside the seam at -i: |1/8 - i/6| / (3/8) = 5/9
  const Cplx z(0.0, -(1.0 + 1e-6));
  const double mu = std::abs(ext.dilatation(z));
  CHECK(std::abs(mu - 5.0 / 9.0) < 1e-4);
  CHECK(mu < 7.0 / 9.0);
}

TEST_CASE("exterior map with co-analytic tail only") {
  const ExteriorMap f(1.0, 0.0, {}, {{1, Cplx(0.3, 0.0)}}, 0.0);
  const auto bounds = hqmap::extend_exterior(f).bounds();
  CHECK(*bounds.inner == 0.0);
  CHECK(*bounds.outer == doctest::Approx(0.3).epsilon(1e-15));
}

TEST_CASE("degenerate bound marker") {
  const InteriorMap heavy({{2, Cplx(0.5, 0.0)}}, {});  // sum n|a_n| = 1
  const auto bounds = hqmap::extend_interior(heavy).bounds();
  CHECK_FALSE(bounds.inner.has_value());
  CHECK(*bounds.outer == doctest::Approx(1.0).epsilon(1e-15));
  CHECK_FALSE(bounds.overall().has_value());
}

TEST_CASE("the two formulas agree on the seam") {
  hqmap::SplitMix64 rng(48);
  for (int trial = 0; trial < 20; ++trial) {
    const InteriorMap f =
        testutil::random_member(rng, hqmap::starlike_profile(), rng.uniform(0.2, 1.0));
    const PlaneExtension ext = hqmap::extend_interior(f);
    for (int j = 0; j < 100; ++j) {
      const double theta = 2.0 * kPi * j / 100.0;
      const Cplx z(std::cos(theta), std::sin(theta));
      CHECK(std::abs(ext.evaluate_in(hqmap::Region::inner, z) -
                     ext.evaluate_in(hqmap::Region::outer, z)) <= 1e-12);
    }
  }
  for (int trial = 0; trial < 20; ++trial) {
    const ExteriorMap f = testutil::random_sigma_member(rng, rng.uniform(0.2, 0.9));
    const PlaneExtension ext = hqmap::extend_exterior(f);
    for (int j = 0; j < 100; ++j) {
      const double theta = 2.0 * kPi * j / 100.0;
      const Cplx z(std::cos(theta), std::sin(theta));
      CHECK(std::abs(ext.evaluate_in(hqmap::Region::inner, z) -
                     ext.evaluate_in(hqmap::Region::outer, z)) <= 1e-12);
    }
  }
}

TEST_CASE("extension dilatation matches finite differences of the formulas") {
  hqmap::SplitMix64 rng(49);
  for (int trial = 0; trial < 10; ++trial) {
    const InteriorMap f =
        testutil::random_member(rng, hqmap::starlike_profile(), rng.uniform(0.2, 0.9));
    const PlaneExtension ext = hqmap::extend_interior(f);
    for (double r : {0.4, 0.9, 1.3, 2.5}) {
      const Cplx z = testutil::random_phase(rng) * r;
      const auto fd =
          testutil::fd_wirtinger([&](Cplx w) { return ext.evaluate_in(ext.region_of(z), w); }, z);
      const Cplx mu = ext.dilatation(z);
      CHECK(std::abs(mu - fd.fzbar / fd.fz) <= 1e-6);
    }
  }
  const PlaneExtension sample = hqmap::extend_exterior(testutil::exterior_log_sample());
  for (double r : {0.3, 0.8, 1.2, 3.0}) {
    hqmap::SplitMix64 point_rng(r * 1000);
    const Cplx z = testutil::random_phase(point_rng) * r;
    const auto fd = testutil::fd_wirtinger(
        [&](Cplx w) { return sample.evaluate_in(sample.region_of(z), w); }, z);
    CHECK(std::abs(sample.dilatation(z) - fd.fzbar / fd.fz) <= 1e-6);
  }
}

TEST_CASE("seam continuity with the coefficient-scaled constant") {
  hqmap::SplitMix64 rng(50);
  const double eps = 1e-6;
  const auto check_seam = [&](const PlaneExtension& ext, double coeff_total) {
    const double c = 10.0 * coeff_total;
    for (int j = 0; j < 1000; ++j) {
      const double theta = 2.0 * kPi * j / 1000.0;
      const Cplx dir(std::cos(theta), std::sin(theta));
      const double diff =
          std::abs(ext.evaluate((1.0 - eps) * dir) - ext.evaluate((1.0 + eps) * dir));
      REQUIRE(diff <= c * eps);
    }
  };
  check_seam(hqmap::extend_interior(InteriorMap{}), 1.0);
  for (int trial = 0; trial < 5; ++trial) {
    const InteriorMap f =
        testutil::random_member(rng, hqmap::starlike_profile(), rng.uniform(0.2, 1.0));
    check_seam(hqmap::extend_interior(f),
               1.0 + hqmap::magnitude_sum(f.a()) + hqmap::magnitude_sum(f.b()));
    const ExteriorMap g = testutil::random_sigma_member(rng, rng.uniform(0.2, 0.9));
    check_seam(hqmap::extend_exterior(g),
               std::abs(g.alpha()) + std::abs(g.beta()) + std::abs(g.log_coeff()) +
                   hqmap::magnitude_sum(g.a()) + hqmap::magnitude_sum(g.b()));
  }
}

TEST_CASE("strongly-starlike members: analytic bounds under the class caps") {
  // Per-region caps attained by the class: sin(pi a/2) inside and
  // 2/phi_2(order) outside; the outside cap exceeds sin(pi a/2).
  hqmap::SplitMix64 rng(51);
  for (const double order : {0.25, 0.5, 0.75}) {
    const double s = std::sin(kPi * order / 2.0);
    const double outer_cap = 2.0 / hqmap::phi_weight(2, order);
    for (int trial = 0; trial < 50; ++trial) {
      const InteriorMap f = testutil::random_member(
          rng, hqmap::strongly_starlike_profile(order), rng.uniform(0.5, 1.0));
      const auto bounds = hqmap::extend_interior(f).bounds();
      REQUIRE(bounds.inner.has_value());
      REQUIRE(bounds.outer.has_value());
      CHECK(*bounds.inner <= s + 1e-12);
      CHECK(*bounds.outer <= outer_cap + 1e-12);
    }
    // the analytic-part extremal map attains the outside cap
    const InteriorMap extremal({{2, Cplx(1.0 / hqmap::phi_weight(2, order), 0.0)}}, {});
    const auto bounds = hqmap::extend_interior(extremal).bounds();
    CHECK(*bounds.outer == doctest::Approx(outer_cap).epsilon(1e-14));
    CHECK(*bounds.outer > s);
  }
}
