#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>
#include <numbers>
#include <random>
#include <stdexcept>

#include "echo2d/units.hpp"

using namespace echo2d;

TEST_CASE("round-trip conversions are identity to 1e-12 relative") {
  std::mt19937_64 rng(42);
  std::uniform_real_distribution<double> val(1e-3, 1e4);
  for (int i = 0; i < 200; ++i) {
    const double x = val(rng);
    CHECK(units::thz_to_mev(units::mev_to_thz(x)) == doctest::Approx(x).epsilon(1e-12));
    CHECK(units::radfs_to_mev(units::mev_to_radfs(x)) == doctest::Approx(x).epsilon(1e-12));
    CHECK(units::radfs_to_thz(units::thz_to_radfs(x)) == doctest::Approx(x).epsilon(1e-12));
    CHECK(units::convert(units::convert(x, "meV", "THz"), "THz", "meV") ==
          doctest::Approx(x).epsilon(1e-12));
  }
}

TEST_CASE("caption values: 1510 meV ~ 365 THz and 1640 meV ~ 397 THz within 0.2%") {
  CHECK(std::abs(units::mev_to_thz(1510.0) - 365.0) / 365.0 < 0.002);
  CHECK(std::abs(units::mev_to_thz(1640.0) - 397.0) / 397.0 < 0.002);
}

TEST_CASE("rad/fs pivot and hbar") {
  CHECK(units::mev_to_radfs(units::hbar_meV_fs) == doctest::Approx(1.0).epsilon(1e-15));
  // 1 fs^-1 = 1000 THz of ordinary frequency times 2 pi
  CHECK(units::thz_to_radfs(1000.0) == doctest::Approx(2.0 * std::numbers::pi).epsilon(1e-15));
  CHECK(units::convert(3.7, "rad/fs", "rad/fs") == 3.7);
}

TEST_CASE("unknown units are rejected") {
  CHECK_THROWS_AS(units::convert(1.0, "eV", "meV"), std::invalid_argument);
  CHECK_THROWS_AS(units::convert(1.0, "meV", "nm"), std::invalid_argument);
}

TEST_CASE("grating period") {
  CHECK(units::grating_period(800.0, std::numbers::pi) == doctest::Approx(400.0).epsilon(1e-15));
  // lambda = 800 nm, theta = 0.1 rad -> ~8.003 um
  CHECK(units::grating_period(800.0, 0.1) ==
        doctest::Approx(800.0 / (2.0 * std::sin(0.05))).epsilon(1e-15));
  CHECK(units::grating_period(800.0, 0.1) == doctest::Approx(8003.3).epsilon(1e-4));
  CHECK_THROWS_AS(units::grating_period(800.0, 0.0), std::invalid_argument);
  CHECK_THROWS_AS(units::grating_period(-1.0, 0.1), std::invalid_argument);
  CHECK_THROWS_AS(units::grating_period(800.0, 4.0), std::invalid_argument);
}
