#include <doctest.h>

#include <cmath>
#include <numbers>

#include "gns/geometry.hpp"
#include "gns/models.hpp"
#include "gns/rng.hpp"

using namespace gns;
namespace nums = std::numbers;

TEST_CASE("von Mises log-likelihood basics") {
  CHECK(von_mises_log_l(1.3, 1.3, 7.0) == doctest::Approx(7.0).epsilon(1e-15));
  CHECK(von_mises_log_l(2.0, 2.0 - nums::pi, 5.0) ==
        doctest::Approx(-5.0).epsilon(1e-12));
  CHECK(von_mises_log_l(0.7, 4.1, 0.0) == 0.0);
  CHECK_THROWS_AS(von_mises_log_l(0.0, 0.0, -1.0), std::invalid_argument);
}

TEST_CASE("edge bimodal mixture arithmetic at a mode centre") {
  const double kappa = 10.0;
  const Point at_a{{0.1, 0.1}};
  // At (0.1, 0.1): own component contributes 2*kappa, the seam-opposite
  // component 2*kappa*cos(0.2); the exact mixture value follows.
  const double cross = 2.0 * kappa * (std::cos(0.2) - 1.0);
  const double expected = std::log(0.5) + 2.0 * kappa + std::log1p(std::exp(cross));
  CHECK(edge_bimodal_torus_log_l(at_a, kappa) ==
        doctest::Approx(expected).epsilon(1e-12));
  CHECK_THROWS_AS(edge_bimodal_torus_log_l(Point{{0.1}}, kappa),
                  std::invalid_argument);
}

TEST_CASE("edge bimodal mixture is symmetric under reflection through 0") {
  RngState rng(31);
  for (int i = 0; i < 2000; ++i) {
    const double t0 = rng.uniform(1e-9, 2.0 * nums::pi);
    const double t1 = rng.uniform(1e-9, 2.0 * nums::pi);
    const double direct = edge_bimodal_torus_log_l(Point{{t0, t1}}, 10.0);
    const double reflected = edge_bimodal_torus_log_l(
        Point{{wrap(-t0, 0.0, 2.0 * nums::pi), wrap(-t1, 0.0, 2.0 * nums::pi)}},
        10.0);
    CHECK(std::abs(direct - reflected) < 1e-12);
  }
}

TEST_CASE("vMF likelihood equals kappa on the mode and 0 orthogonal to it") {
  const UnitVec3 m = angles_to_cart(1.0, 0.5);
  const auto [mt, mp] = cart_to_angles(m);
  CHECK(vmf_sphere_log_l(Point{{mt, mp}}, m, 10.0) ==
        doctest::Approx(10.0).epsilon(1e-12));
  // An orthogonal direction: rotate the polar angle by pi/2 in the plane
  // phi = 0.5.
  const UnitVec3 orth = angles_to_cart(1.0 + nums::pi / 2.0, 0.5);
  const auto [ot, op] = cart_to_angles(orth);
  CHECK(std::abs(vmf_sphere_log_l(Point{{ot, op}}, m, 10.0)) < 1e-10);
}

TEST_CASE("antipodal mixture is symmetric and flat at kappa zero") {
  const UnitVec3 m = angles_to_cart(1.0, 0.5);
  RngState rng(32);
  for (int i = 0; i < 2000; ++i) {
    const double ct = rng.uniform(-1.0, 1.0);
    const double theta = std::acos(ct);
    const double phi = rng.uniform(0.0, 2.0 * nums::pi);
    const double here = antipodal_vmf_mixture_log_l(Point{{theta, phi}}, m, 10.0);
    // The antipode of (theta, phi).
    const double atheta = nums::pi - theta;
    const double aphi = wrap(phi + nums::pi, 0.0, 2.0 * nums::pi);
    const double there =
        antipodal_vmf_mixture_log_l(Point{{atheta, aphi}}, m, 10.0);
    CHECK(std::abs(here - there) < 1e-12);
  }
  CHECK(antipodal_vmf_mixture_log_l(Point{{1.3, 0.2}}, m, 0.0) ==
        doctest::Approx(0.0).epsilon(1e-15));
}

TEST_CASE("gaussian box values") {
  CHECK(gaussian_box_log_l(Point{{0.5, 0.5}}, {0.5, 0.5}, {0.05, 0.05}) == 0.0);
  CHECK(gaussian_box_log_l(Point{{0.55}}, {0.5}, {0.05}) ==
        doctest::Approx(-0.5).epsilon(1e-12));
}

TEST_CASE("all catalogue models are finite over their whole domain") {
  RngState rng(33);
  for (const auto& info : model_catalog()) {
    const ModelSpec model = make_model(info.name, {});
    for (int i = 0; i < 100000; ++i) {
      const Point p = model.space.sample_prior(rng);
      const double ll = model.log_likelihood(p);
      REQUIRE(std::isfinite(ll));
    }
  }
}

TEST_CASE("model construction validates names and parameters") {
  CHECK_THROWS_WITH_AS(make_model("von_mise", {}),
                       doctest::Contains("did you mean \"von_mises\""),
                       std::invalid_argument);
  CHECK_THROWS_WITH_AS(make_model("von_mises", {{"kapa", 5.0}}),
                       doctest::Contains("did you mean \"kappa\""),
                       std::invalid_argument);
  CHECK_THROWS_AS(make_model("von_mises", {{"kappa", -2.0}}),
                  std::invalid_argument);
  CHECK_THROWS_AS(make_model("vmf_sphere", {{"mu_theta", 4.0}}),
                  std::invalid_argument);
  CHECK_THROWS_AS(make_model("gaussian_box", {{"dim", 2.5}}),
                  std::invalid_argument);
  CHECK_THROWS_AS(make_model("gaussian_box", {{"sigma", 0.0}}),
                  std::invalid_argument);

  const ModelSpec box = make_model("gaussian_box", {{"dim", 3.0}});
  CHECK(box.space.dimension() == 3);
  CHECK(box.dimension_names == std::vector<std::string>{"x0", "x1", "x2"});
}
