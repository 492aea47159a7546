#include <doctest.h>

#include <random>

#include "hyperspinor/experiments.hpp"
#include "hyperspinor/spherical.hpp"

using namespace hyperspinor;

TEST_CASE("scalar components basic values") {
  for (int n : {2, 3, 4, 5})
    for (int sg : (n % 2 ? std::vector<int>{+1, -1} : std::vector<int>{0}))
      for (const cplx cp : scalar_components(n, sg, 1.1, 0.0))
        CHECK(std::abs(cp - 1.0) < 1e-14);
  // Weyl symmetry: (sigma+, -lam) = (sigma-, lam)
  const auto a = scalar_components(3, +1, -1.1, 0.8);
  const auto b = scalar_components(3, -1, 1.1, 0.8);
  CHECK(std::abs(a[0] - b[0]) < 1e-12);
  CHECK(std::abs(a[1] - b[1]) < 1e-12);
  // parity-even sum identity
  for (int n : {3, 5})
    for (double t : {0.4, 1.3, 2.2}) {
      const auto c = scalar_components(n, +1, 0.9, t);
      const cplx lhs = c[0] + c[1];
      const cplx rhs = 2.0 * std::cosh(t / 2.0) *
                       jacobi_phi({n / 2.0 - 1.0, n / 2.0}, 2.0 * 0.9, t / 2.0);
      CHECK(std::abs(lhs - rhs) < 1e-12 * std::abs(rhs));
    }
}

TEST_CASE("spherical matrix structure") {
  const spin_rep R = spin_rep::build(3, rep_variant::full);
  CHECK((spherical_matrix(R, +1, 1.0, 0.0) - cmat::Identity(2, 2)).norm() < 1e-13);
  std::mt19937_64 rng(73);
  const cmat Phi = spherical_matrix(R, +1, 1.0, 1.0);
  for (int s = 0; s < 30; ++s) {
    const cmat Tm = R.ev(random_M_rotor(2, rng));
    CHECK((Phi * Tm - Tm * Phi).norm() < 1e-10);
  }
  const auto c = scalar_components(3, +1, 1.0, 1.0);
  CHECK(std::abs(Phi.trace() - (c[0] + c[1])) < 1e-12);
}

TEST_CASE("eisenstein integral cross checks") {
  // identity point
  {
    const spin_rep R = spin_rep::build(2, rep_variant::plus);
    const sphere_grid g = sphere_grid_build(1, 256);
    const cmat E = eisenstein_integral(R, 0, 1.0, vahlen::identity(1), g);
    CHECK((E - cmat::Identity(1, 1)).norm() < 1e-8);
  }
  {
    const spin_rep R = spin_rep::build(3, rep_variant::full);
    const sphere_grid g = sphere_grid_build(2, 40);
    const cmat E = eisenstein_integral(R, +1, 1.0, vahlen::identity(2), g);
    CHECK((E - cmat::Identity(2, 2)).norm() < 1e-8);
  }
  // closed form on A, n=2, lam=1, t=1.5
  {
    const spin_rep R = spin_rep::build(2, rep_variant::plus);
    const sphere_grid g = sphere_grid_build(1, 256);
    const cmat E = eisenstein_integral(R, 0, 1.0, body_units::make_a(1, 1.5), g);
    const cmat C = spherical_matrix(R, 0, 1.0, 1.5);
    CHECK((E - C).norm() < 1e-6 * C.norm());
  }
  // radiality through the quadrature path
  {
    const spin_rep R = spin_rep::build(3, rep_variant::full);
    const sphere_grid g = sphere_grid_build(2, 40);
    std::mt19937_64 rng(79);
    const vahlen k1 = make_k(random_K_rotor(2, rng)), k2 = make_k(random_K_rotor(2, rng));
    const vahlen at = body_units::make_a(2, 1.2);
    const cmat lhs = eisenstein_integral(R, +1, 0.8, k1.mul(at).mul(k2), g);
    const cmat rhs = R.ev(k2).adjoint() * eisenstein_integral(R, +1, 0.8, at, g) *
                     R.ev(k1).adjoint();
    CHECK((lhs - rhs).norm() < 1e-7);
  }
  // closed-form general-point evaluator agrees with quadrature off A
  {
    const spin_rep R = spin_rep::build(3, rep_variant::full);
    const sphere_grid g = sphere_grid_build(2, 96);
    std::mt19937_64 rng(83);
    const vahlen x = random_g(2, rng, 0.7);
    const cmat E = eisenstein_integral(R, -1, 1.3, x, g);
    const cmat C = spherical_at(R, -1, 1.3, x);
    CHECK((E - C).norm() < 1e-8 * (C.norm() + 1.0));
  }
}

TEST_CASE("weyl sum consistency at moderate t") {
  const spin_rep R = spin_rep::build(2, rep_variant::plus);
  const double defect = asymptotic_defect(R, 0, 2.0, 6.0);
  const double size = operator_norm(spherical_matrix(R, 0, 2.0, 6.0));
  CHECK(defect < 1e-2 * size);
}

TEST_CASE("fatou decay is monotone-ish in t") {
  const spin_rep R = spin_rep::build(3, rep_variant::full);
  const cplx lam(1.0, -1.0);
  const double d6 = operator_norm(fatou_limit_check(R, +1, lam, 6.0));
  const double d8 = operator_norm(fatou_limit_check(R, +1, lam, 8.0));
  CHECK(d8 < d6);
}
