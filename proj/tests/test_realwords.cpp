#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>
#include <random>
#include <vector>

#include "gw/errors.hpp"
#include "gw/realwords.hpp"

using gw::RealGammaWord;
using gw::RealPhiImage;
using gw::XxRootPair;

namespace {

constexpr double kEulerInv = 0.36787944117144233;   // 1/e
constexpr double kEtaMin = 0.69220062755534635;     // e^{-1/e}, the double-root value

double xx(double t) { return std::exp(t * std::log(t)); }

}  // namespace

TEST_CASE("real word construction and reduction") {
  SUBCASE("indices sorted, must be positive finite") {
    RealGammaWord w({0.5, 2.5, 1.0}, {0.75});
    CHECK(w.upper() == std::vector<double>{2.5, 1.0, 0.5});
    CHECK_THROWS_AS(RealGammaWord({-1.0}, {}), gw::out_of_range_error);
    CHECK_THROWS_AS(RealGammaWord({0.0}, {}), gw::out_of_range_error);
    CHECK_THROWS_AS(RealGammaWord({1.0 / 0.0}, {}), gw::out_of_range_error);
  }

  SUBCASE("reduce cancels within tolerance") {
    RealGammaWord w({1.0, 0.5}, {0.5 + 1e-12});
    RealGammaWord r = gw::reduce(w);
    CHECK(r.upper() == std::vector<double>{1.0});
    CHECK(r.lower().empty());

    // Indices farther apart than the tolerance survive.
    RealGammaWord apart({0.5}, {0.5 + 1e-6});
    CHECK_FALSE(gw::reduce(apart).empty());
  }

  SUBCASE("inverse pairs cancel") {
    RealGammaWord w({0.7, 0.3}, {1.5});
    CHECK(gw::reduce(gw::multiply(w, gw::invert(w))).empty());
  }
}

TEST_CASE("solve_xx finds both roots") {
  SUBCASE("eta = 0.8") {
    XxRootPair roots = gw::solve_xx(0.8);
    CHECK(roots.theta1 > 0.0);
    CHECK(roots.theta1 < kEulerInv);
    CHECK(roots.theta2 > kEulerInv);
    CHECK(roots.theta2 < 1.0);
    CHECK(std::abs(xx(roots.theta1) - 0.8) <= 1e-12);
    CHECK(std::abs(xx(roots.theta2) - 0.8) <= 1e-12);
  }

  SUBCASE("boundaries rejected, double root included") {
    CHECK_THROWS_AS(gw::solve_xx(std::pow(kEulerInv, kEulerInv)), gw::out_of_range_error);
    CHECK_THROWS_AS(gw::solve_xx(1.0), gw::out_of_range_error);
    CHECK_THROWS_AS(gw::solve_xx(0.5), gw::out_of_range_error);
    CHECK_THROWS_AS(gw::solve_xx(1.5), gw::out_of_range_error);
    CHECK_THROWS_AS(gw::solve_xx(kEtaMin), gw::out_of_range_error);
  }

  SUBCASE("residuals below 1e-12 across the interval") {
    std::mt19937_64 rng(8);
    std::uniform_real_distribution<double> etas(kEtaMin + 1e-9, 1.0 - 1e-9);
    for (int i = 0; i < 50; ++i) {
      double eta = etas(rng);
      XxRootPair roots = gw::solve_xx(eta);
      CHECK(std::abs(xx(roots.theta1) - eta) <= 1e-12);
      CHECK(std::abs(xx(roots.theta2) - eta) <= 1e-12);
      CHECK(roots.theta1 < kEulerInv);
      CHECK(roots.theta2 > kEulerInv);
    }
  }
}

TEST_CASE("phi extends to real indices") {
  SUBCASE("identity") {
    RealPhiImage image = gw::phi_real(RealGammaWord());
    CHECK(image.d == 0);
    CHECK(image.sum_diff == 0.0);
    CHECK(image.power == 1.0);
    CHECK_FALSE(image.log_only);
  }

  SUBCASE("single index") {
    RealPhiImage image = gw::phi_real(RealGammaWord({0.5}, {}));
    CHECK(image.d == 1);
    CHECK(image.sum_diff == doctest::Approx(0.5).epsilon(1e-15));
    CHECK(image.power == doctest::Approx(std::sqrt(0.5)).epsilon(1e-14));
  }

  SUBCASE("root-pair words land in the real kernel direction") {
    XxRootPair roots = gw::solve_xx(0.85);
    RealPhiImage image = gw::phi_real(RealGammaWord({roots.theta2}, {roots.theta1}));
    CHECK(image.d == 0);
    CHECK(image.sum_diff == doctest::Approx(roots.theta2 - roots.theta1).epsilon(1e-14));
    CHECK(std::abs(image.power - 1.0) <= 1e-10);
  }

  SUBCASE("large words switch to log-only reporting") {
    // 500^500 alone has log ~ 3100, far past the overflow guard.
    RealPhiImage image = gw::phi_real(RealGammaWord({500.0}, {}));
    CHECK(image.log_only);
    CHECK(image.log_power == doctest::Approx(500.0 * std::log(500.0)).epsilon(1e-13));
    CHECK(std::isnan(image.power));
  }
}

TEST_CASE("real preimage construction") {
  SUBCASE("trivial target gives the empty word") {
    RealGammaWord w = gw::construct_preimage_real(0, 0.0, 1.0);
    CHECK(gw::reduce(w).empty());
  }

  SUBCASE("pinned targets") {
    RealGammaWord half = gw::construct_preimage_real(0, 0.5, 1.0);
    RealPhiImage image = gw::phi_real(half);
    CHECK(image.d == 0);
    CHECK(image.sum_diff == doctest::Approx(0.5).epsilon(1e-9));
    CHECK(std::abs(image.power - 1.0) <= 1e-9);

    RealGammaWord padded = gw::construct_preimage_real(2, 0.0, 1.0);
    RealPhiImage padded_image = gw::phi_real(padded);
    CHECK(padded_image.d == 2);
    CHECK(std::abs(padded_image.sum_diff) <= 1e-9);
    CHECK(std::abs(padded_image.power - 1.0) <= 1e-9);
  }

  SUBCASE("bounds enforced") {
    CHECK_THROWS_AS(gw::construct_preimage_real(0, 2e6, 1.0), gw::out_of_range_error);
    CHECK_THROWS_AS(gw::construct_preimage_real(0, 0.0, -2.0), gw::out_of_range_error);
    CHECK_THROWS_AS(gw::construct_preimage_real(0, 0.0, 0.0), gw::out_of_range_error);
  }

  SUBCASE("tiny residuals still round-trip") {
    // Exercises the overshoot path: the root-gap function cannot represent
    // arbitrarily small steps directly.
    for (double x : {1e-5, -1e-5, 1e-3, 5e-3}) {
      RealGammaWord w = gw::construct_preimage_real(0, x, 1.0);
      RealPhiImage image = gw::phi_real(w);
      CHECK(image.d == 0);
      CHECK(std::abs(image.sum_diff - x) <= 1e-9);
      CHECK(std::abs(image.power - 1.0) <= 1e-9);
    }
  }

  SUBCASE("random round trips within tolerance") {
    std::mt19937_64 rng(13);
    std::uniform_int_distribution<std::int64_t> d_dist(-3, 3);
    std::uniform_real_distribution<double> x_dist(-10.0, 10.0);
    std::uniform_real_distribution<double> y_dist(0.1, 10.0);
    for (int i = 0; i < 50; ++i) {
      std::int64_t d = d_dist(rng);
      double x = x_dist(rng);
      double y = y_dist(rng);
      RealGammaWord w = gw::construct_preimage_real(d, x, y);
      RealPhiImage image = gw::phi_real(w);
      CHECK(image.d == d);
      CHECK(std::abs(image.sum_diff - x) <= 1e-9);
      CHECK(std::abs(image.power - y) <= 1e-9 * y);
    }
  }

  SUBCASE("larger sums stay within tolerance") {
    RealGammaWord w = gw::construct_preimage_real(0, 137.25, 2.5);
    RealPhiImage image = gw::phi_real(w);
    CHECK(image.d == 0);
    CHECK(std::abs(image.sum_diff - 137.25) <= 1e-9);
    CHECK(std::abs(image.power - 2.5) <= 2.5e-9);
  }
}
