#include <catch2/catch_amalgamated.hpp>

#include <cmath>
#include <numbers>
#include <stdexcept>

#include "leaffun/identities.hpp"
#include "leaffun/verify.hpp"
#include "reference_values.hpp"

namespace lf = leaffun;
namespace ref = leaffun_test_ref;

namespace {
const lf::LeafOrder n2{2};
}

TEST_CASE("pythagorean relation of the order-2 pair", "[identities]") {
  SECTION("reference grid phases") {
    for (int i = 0; i < ref::kGridRows; ++i) {
      REQUIRE(std::abs(lf::pythagorean_residual(ref::kGrid[i][0])) < 1e-10);
    }
  }
  SECTION("dense sweep over a full period") {
    const double period = 2.0 * lf::pi_n(n2);
    for (int i = 0; i <= 200; ++i) {
      REQUIRE(std::abs(lf::pythagorean_residual(period * i / 200.0)) < 1e-9);
    }
  }
}

TEST_CASE("polar angles from arc length", "[identities]") {
  for (int i = 0; i < ref::kGridRows; ++i) {
    const double l = ref::kGrid[i][0];
    REQUIRE(std::abs(lf::theta_from_l_cleaf(l) - ref::kGrid[i][1]) < 1e-11);
    REQUIRE(std::abs(lf::theta_from_l_sleaf(l) - ref::kGrid[i][3]) < 1e-11);
  }

  SECTION("endpoints of the principal branch") {
    const double half = lf::pi_n(n2) / 2;
    REQUIRE(lf::theta_from_l_cleaf(0.0) == 0.0);
    REQUIRE(std::abs(lf::theta_from_l_cleaf(half) - std::numbers::pi / 4) <
            1e-12);
    REQUIRE(std::abs(lf::theta_from_l_sleaf(0.0)) < 1e-15);
    REQUIRE(std::abs(lf::theta_from_l_sleaf(half) - std::numbers::pi / 4) <
            1e-12);
  }

  SECTION("strictly increasing along the arc") {
    double prev_t = -1.0, prev_tb = -1.0;
    for (double l = 0.0; l <= 1.31; l += 0.05) {
      const double t = lf::theta_from_l_cleaf(l);
      const double tb = lf::theta_from_l_sleaf(l);
      REQUIRE(t > prev_t);
      REQUIRE(tb > prev_tb);
      prev_t = t;
      prev_tb = tb;
    }
  }

  SECTION("rejects phases off the principal branch") {
    const double half = lf::pi_n(n2) / 2;
    REQUIRE_THROWS_AS(lf::theta_from_l_cleaf(-0.1), std::domain_error);
    REQUIRE_THROWS_AS(lf::theta_from_l_cleaf(half + 0.1), std::domain_error);
    REQUIRE_THROWS_AS(lf::theta_from_l_sleaf(half + 0.1), std::domain_error);
    REQUIRE_THROWS_AS(lf::cumulative_leaf_integral(lf::LeafKind::Cleaf, -0.1),
                      std::domain_error);
  }
}

TEST_CASE("angles by quadrature match the closed forms", "[identities]") {
  REQUIRE(lf::cumulative_leaf_integral(lf::LeafKind::Cleaf, 0.0) == 0.0);
  REQUIRE(lf::cumulative_leaf_integral(lf::LeafKind::Sleaf, 0.0) == 0.0);
  for (double l : {0.1, 0.4, 0.7, 1.0, 1.3}) {
    REQUIRE(std::abs(lf::cumulative_leaf_integral(lf::LeafKind::Cleaf, l) -
                     lf::theta_from_l_cleaf(l)) < 1e-8);
    REQUIRE(std::abs(lf::cumulative_leaf_integral(lf::LeafKind::Sleaf, l) -
                     lf::theta_from_l_sleaf(l)) < 1e-8);
  }
  // spot values carried by the reference grid at l = 1.0
  REQUIRE(std::abs(lf::cumulative_leaf_integral(lf::LeafKind::Cleaf, 1.0) -
                   ref::kGrid[10][1]) < 1e-8);
  REQUIRE(std::abs(lf::cumulative_leaf_integral(lf::LeafKind::Sleaf, 1.0) -
                   ref::kGrid[10][3]) < 1e-8);
}

TEST_CASE("double angle and tangent couplings", "[identities]") {
  const double half = lf::pi_n(n2) / 2;
  for (int i = 0; i <= 100; ++i) {
    const double l = half * (i / 100.0);
    REQUIRE(std::abs(lf::double_angle_relation_c(l)) < 1e-9);
    REQUIRE(std::abs(lf::double_angle_relation_s(l)) < 1e-9);
    const auto [ts, tc] = lf::tan_relations(l);
    REQUIRE(std::abs(ts) < 1e-9);
    REQUIRE(std::abs(tc) < 1e-9);
  }
}

TEST_CASE("angle growth rates are the leaf values themselves",
          "[identities]") {
  // d theta / d l = cleaf_2(l) and d theta_bar / d l = sleaf_2(l); probed
  // with a central difference well inside the branch.
  const double h = 1e-6;
  for (double l = 0.1; l <= 1.2; l += 0.1) {
    const double dt =
        (lf::theta_from_l_cleaf(l + h) - lf::theta_from_l_cleaf(l - h)) /
        (2 * h);
    const double dtb =
        (lf::theta_from_l_sleaf(l + h) - lf::theta_from_l_sleaf(l - h)) /
        (2 * h);
    REQUIRE(std::abs(dt - lf::cleaf(n2, l).value) < 1e-6);
    REQUIRE(std::abs(dtb - lf::sleaf(n2, l).value) < 1e-6);
  }
}

TEST_CASE("report pass threshold is inclusive", "[identities]") {
  lf::IdentityReport r{"x", 1e-8, 1, 0.0, 1.0};
  REQUIRE(r.passes(1e-8));
  REQUIRE_FALSE(r.passes(9.9e-9));
}

TEST_CASE("the full check battery stays under tolerance", "[identities]") {
  const auto reports = lf::run_identity_checks(24);
  REQUIRE(reports.size() == 20);
  for (const auto& r : reports) {
    INFO(r.name << " residual " << r.max_abs_residual);
    REQUIRE_FALSE(r.name.empty());
    REQUIRE(r.sample_count >= 1);
    REQUIRE(r.passes(1e-8));
  }
  REQUIRE_THROWS_AS(lf::run_identity_checks(0), std::invalid_argument);
}
