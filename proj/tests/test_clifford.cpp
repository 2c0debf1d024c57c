#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <numbers>

#include "spingroup/clifford.hpp"
#include "spingroup/harness.hpp"

using namespace spingroup;
namespace {
constexpr double kPi = std::numbers::pi;
const cplx kI(0.0, 1.0);
}  // namespace

TEST_CASE("gamma basis is the Dirac-Pauli representation") {
  const GammaBasis& g = dirac_basis();

  Mat4c g0 = Mat4c::Zero();
  g0.diagonal() << 1, 1, -1, -1;
  CHECK(max_abs(g.gamma[0] - g0) == 0.0);
  CHECK(max_abs(g.gamma[1] * g.gamma[1] + Mat4c::Identity()) <= 1e-15);

  SUBCASE("anticommutation and sigma definition") {
    for (int a = 0; a < 4; ++a)
      for (int b = 0; b < 4; ++b) {
        CHECK(max_abs(g.gamma[a] * g.gamma[b] + g.gamma[b] * g.gamma[a] -
                      2.0 * GammaBasis::metric(a, b) * Mat4c::Identity()) <=
              1e-12);
        CHECK(max_abs(g.sigma(a, b) -
                      0.5 * (g.gamma[a] * g.gamma[b] -
                             g.gamma[b] * g.gamma[a])) <= 1e-12);
      }
  }

  SUBCASE("hermiticity pattern") {
    CHECK(max_abs(g.gamma[0].adjoint() - g.gamma[0]) == 0.0);
    for (int k = 1; k < 4; ++k)
      CHECK(max_abs(g.gamma[k].adjoint() + g.gamma[k]) == 0.0);
  }

  SUBCASE("sigma^{12} = -i diag(1,-1,1,-1)") {
    Mat4c expect = Mat4c::Zero();
    expect.diagonal() << -kI, kI, -kI, kI;
    CHECK(max_abs(g.sigma(1, 2) - expect) <= 1e-15);
  }

  SUBCASE("levi-civita convention") {
    CHECK(GammaBasis::levi_civita(0, 1, 2, 3) == 1.0);
    CHECK(GammaBasis::levi_civita(1, 0, 2, 3) == -1.0);
    CHECK(GammaBasis::levi_civita(0, 0, 2, 3) == 0.0);
  }
}

TEST_CASE("slash lowers indices through the metric") {
  const GammaBasis& g = dirac_basis();
  const double m = 1.3;

  CHECK(max_abs(slash({m, Vec3::Zero()}, g) - m * g.gamma[0]) == 0.0);
  CHECK(max_abs(slash({0.0, Vec3::Zero()}, g)) == 0.0);
  CHECK(max_abs(slash({std::sqrt(2.0) * m, Vec3(m, 0, 0)}, g) -
                (std::sqrt(2.0) * m * g.gamma[0] - m * g.gamma[1])) <= 1e-15);
}

TEST_CASE("exp_series") {
  const GammaBasis& g = dirac_basis();

  CHECK(max_abs(exp_series(Mat4c::Zero()) - Mat4c::Identity()) == 0.0);

  Mat4c d = Mat4c::Zero();
  d.diagonal() << std::log(2.0), 0.0, 0.0, 0.0;
  Mat4c expect = Mat4c::Identity();
  expect(0, 0) = 2.0;
  CHECK(max_abs(exp_series(d) - expect) <= 1e-14);

  const double b = 0.3;
  CHECK(max_abs(exp_series(b * g.sigma(0, 3)) -
                (std::cosh(b) * Mat4c::Identity() +
                 std::sinh(b) * g.sigma(0, 3))) <= 1e-14);

  CHECK_THROWS(exp_series(1e6 * Mat4c::Identity()));
  CHECK_THROWS(exp_series(Mat4c::Zero(), 0.0));
}

TEST_CASE("closed-form exponentials match the series oracle") {
  const GammaBasis& g = dirac_basis();

  CHECK(max_abs(exp_boost_closed(Vec3(0, 0, 1), 0.0, g) - Mat4c::Identity()) ==
        0.0);
  CHECK(max_abs(exp_boost_closed(Vec3(0, 0, 1), 0.5, g) -
                (std::cosh(0.5) * Mat4c::Identity() +
                 std::sinh(0.5) * g.sigma(0, 3))) <= 1e-15);
  CHECK(max_abs(exp_rotation_closed(Vec3(0, 0, 1), 0.0, g) -
                Mat4c::Identity()) == 0.0);
  CHECK(max_abs(exp_rotation_closed(Vec3(0, 0, 1), 2.0 * kPi, g) +
                Mat4c::Identity()) <= 1e-15);
  CHECK(max_abs(exp_rotation_closed(Vec3(0, 0, 1), kPi / 3.0, g) -
                (std::cos(kPi / 6.0) * Mat4c::Identity() +
                 std::sin(kPi / 6.0) * g.sigma(1, 2))) <= 1e-15);

  CHECK_THROWS(exp_boost_closed(Vec3(0, 0, 2), 0.5, g));
  CHECK_THROWS(exp_rotation_closed(Vec3(0.5, 0, 0), 0.5, g));

  for (int i = 0; i < 100; ++i) {
    DrawRng rng(7, 0, i);
    const Vec3 dir = rng.unit_vector();
    const double b = rng.uniform(0.0, 1.5);
    CHECK(max_abs(exp_boost_closed(dir, b, g) -
                  exp_series(b * g.boost_generator(dir))) <= 1e-9);
    const Vec3 axis = rng.unit_vector();
    const double th = rng.uniform(0.0, 4.0 * kPi);
    CHECK(max_abs(exp_rotation_closed(axis, th, g) -
                  exp_series(0.5 * th * g.rotation_generator(axis))) <= 1e-9);
  }
}

TEST_CASE("boost is Hermitian, rotation is unitary") {
  const GammaBasis& g = dirac_basis();
  const Mat4c h = exp_boost_closed(Vec3(1, 0, 0), 0.7, g);
  CHECK(max_abs(h.adjoint() - h) <= 1e-14);
  const Mat4c u = exp_rotation_closed(Vec3(0, 1, 0), 1.1, g);
  CHECK(max_abs(u.adjoint() * u - Mat4c::Identity()) <= 1e-14);
}

TEST_CASE("vector_rep") {
  const GammaBasis& g = dirac_basis();

  CHECK(max_abs(vector_rep(Mat4c::Identity(), g) - Mat4d::Identity()) <=
        1e-14);

  SUBCASE("rotation about z maps to the standard rotation matrix") {
    const double th = 0.9;
    Mat4d expect = Mat4d::Identity();
    expect(1, 1) = std::cos(th);
    expect(1, 2) = -std::sin(th);
    expect(2, 1) = std::sin(th);
    expect(2, 2) = std::cos(th);
    CHECK(max_abs(vector_rep(exp_rotation_closed(Vec3(0, 0, 1), th, g), g) -
                  expect) <= 1e-12);
  }

  SUBCASE("boost maps to a pure boost with beta = tanh 2b") {
    const double b = 0.4;
    const double beta = std::tanh(2.0 * b);
    const double gf = 1.0 / std::sqrt(1.0 - beta * beta);
    const Mat4d lam = vector_rep(exp_boost_closed(Vec3(0, 0, 1), b, g), g);
    Mat4d expect = Mat4d::Identity();
    expect(0, 0) = gf;
    expect(0, 3) = gf * beta;
    expect(3, 0) = gf * beta;
    expect(3, 3) = gf;
    CHECK(max_abs(lam - expect) <= 1e-12);
  }

  SUBCASE("homomorphism and metric preservation on random pairs") {
    Mat4d eta = Mat4d::Zero();
    eta.diagonal() << 1, -1, -1, -1;
    for (int i = 0; i < 50; ++i) {
      DrawRng rng(11, 1, i);
      const Mat4c s1 =
          exp_boost_closed(rng.unit_vector(), rng.uniform(0.0, 1.0), g);
      const Mat4c s2 =
          exp_rotation_closed(rng.unit_vector(), rng.uniform(0.0, 2 * kPi), g);
      CHECK(max_abs(vector_rep(Mat4c(s1 * s2), g) -
                    Mat4d(vector_rep(s1, g) * vector_rep(s2, g))) <= 1e-9);
      const Mat4d lam = vector_rep(Mat4c(s1 * s2), g);
      CHECK(max_abs(Mat4d(lam.transpose() * eta * lam) - eta) <= 1e-9);
    }
  }

  CHECK_THROWS(vector_rep(Mat4c::Zero(), g));
}
