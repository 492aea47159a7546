#include <doctest.h>

#include <random>

#include "hyperspinor/experiments.hpp"
#include "hyperspinor/transforms.hpp"

using namespace hyperspinor;

TEST_CASE("p function at the identity") {
  const spin_rep R = spin_rep::build(3, rep_variant::full);
  std::mt19937_64 rng(89);
  const cvec v = random_cvec(2, rng);
  const sphere_grid g = sphere_grid_build(2, 12);
  for (std::size_t j = 0; j < 20; ++j) {
    const vahlen k = k_section(g.nodes[j]);
    const cvec got = p_value(R, +1, 1.3, vahlen::identity(2), v, k);
    const cvec expect = R.projector(+1) * (R.ev(k).adjoint() * v);
    CHECK((got - expect).norm() < 1e-12);
  }
}

TEST_CASE("gram matrix of random p functions is nonsingular") {
  const spin_rep R = spin_rep::build(3, rep_variant::full);
  std::mt19937_64 rng(97);
  const sphere_grid g = sphere_grid_build(2, 32);
  std::vector<std::vector<cvec>> vals;
  for (int i = 0; i < 6; ++i) {
    const p_combo F = random_p_combo(R, +1, 1.3, 1, rng, 1.0);
    vals.push_back(combo_values(R, F, g));
  }
  cmat G(6, 6);
  for (int i = 0; i < 6; ++i)
    for (int j = 0; j < 6; ++j) G(i, j) = l2k_inner(g, vals[i], vals[j]);
  Eigen::JacobiSVD<cmat> svd(G);
  CHECK(svd.singularValues()(0) / svd.singularValues()(5) < 1e8);
}

TEST_CASE("poisson transform of a p function is a translated spherical function") {
  // n even (d = 1): quadrature path against the closed form
  const spin_rep R = spin_rep::build(2, rep_variant::plus);
  std::mt19937_64 rng(101);
  const sphere_grid g = sphere_grid_build(1, 256);
  const vahlen g0 = random_g(1, rng, 1.0);
  const cvec v = random_cvec(1, rng);
  p_combo F;
  F.sigma = 0;
  F.lam = 1.0;
  F.terms.push_back({g0, v, cplx(1.0)});
  const std::vector<cvec> Fv = combo_values(R, F, g);
  for (int s = 0; s < 5; ++s) {
    const vahlen x = random_g(1, rng, 0.8);
    const cvec quad = poisson_quadrature(R, F.lam, Fv, g, x);
    const cvec closed = spherical_at(R, 0, F.lam, g0.inverse().mul(x)) * v;
    CHECK((quad - closed).norm() < 1e-6 * closed.norm());
  }
}

TEST_CASE("poisson quadrature agrees with the exact combo path at n=3") {
  const spin_rep R = spin_rep::build(3, rep_variant::full);
  std::mt19937_64 rng(103);
  const sphere_grid g = sphere_grid_build(2, 192);
  const p_combo F = random_p_combo(R, +1, 1.1, 2, rng, 0.4);
  const std::vector<cvec> Fv = combo_values(R, F, g);
  for (int s = 0; s < 5; ++s) {
    // sampled translates reach raw radius ~2.4, where the Poisson kernel
    // concentrates; the grid order is sized for that dynamic range
    const vahlen x = random_g(2, rng, 0.4);
    const cvec quad = poisson_quadrature(R, F.lam, Fv, g, x);
    const cvec closed = poisson_combo(R, F, x);
    CHECK((quad - closed).norm() < 1e-4 * (closed.norm() + 1.0));
  }
}

TEST_CASE("poisson fatou limit on translated spheres") {
  // e^{(rho - i lam) t} P F (k a_t) -> c(lam) F(k) for Re(i lam) > 0
  const spin_rep R = spin_rep::build(2, rep_variant::plus);
  std::mt19937_64 rng(107);
  const cplx lam(1.0, -1.0);
  const p_combo F = random_p_combo(R, 0, lam, 2, rng, 0.6);
  const double rho = rho_of(2);
  const sphere_grid g = sphere_grid_build(1, 16);
  const double t = 8.0;
  for (std::size_t j = 0; j < 5; ++j) {
    const vahlen k = k_section(g.nodes[j]);
    const cvec lhs = std::exp((rho - cplx(0, 1) * lam) * t) *
                     poisson_combo(R, F, k.mul(body_units::make_a(1, t)));
    const cvec rhs = hc_c_function(lam, 2) * combo_value(R, F, k);
    CHECK((lhs - rhs).norm() < 1e-3 * (rhs.norm() + 1.0));
  }
}

namespace {
bundle_section test_bump(const spin_rep& rep, double R0, const cvec& v, double freq = 0.0) {
  return bump_section(rep, rep.n() % 2 ? +1 : 0, R0,
                      [freq](double t) { return 1.0 + 0.3 * std::cos(freq * t); }, v);
}
}  // namespace

TEST_CASE("helgason fourier adjointness") {
  const spin_rep R = spin_rep::build(2, rep_variant::plus);
  std::mt19937_64 rng(109);
  const cvec v = cvec::Ones(1);
  const bundle_section f = test_bump(R, 2.0, v, 1.5);
  const gpolar_grid gp = gpolar_grid::build(2, 2.0, 40, 128);
  const sphere_grid boundary = sphere_grid_build(1, 128);
  const double lam = 1.2;
  const p_combo Fc = random_p_combo(R, 0, lam, 2, rng, 0.7);
  const std::vector<cvec> Fv = combo_values(R, Fc, boundary);
  // <F f, F>_{L2(K)}
  const std::vector<cvec> Ff = helgason_fourier(R, 0, lam, f, gp, boundary);
  cplx lhs = 0.0;
  for (std::size_t j = 0; j < boundary.size(); ++j)
    lhs += boundary.weights[j] * Fv[j].dot(Ff[j]);
  // <f, P F>_{L2(G)}
  cplx rhs = 0.0;
  for (std::size_t j = 0; j < gp.sphere.size(); ++j)
    for (std::size_t i = 0; i < gp.radial.t.size(); ++i) {
      const vahlen x = gp.knodes[j].mul(body_units::make_a(1, gp.radial.t[i]));
      rhs += gp.sphere.weights[j] * gp.radial.w[i] *
             cplx(poisson_combo(R, Fc, x).dot(f.f(x)));
    }
  CHECK(std::abs(lhs - rhs) < 1e-5 * (std::abs(lhs) + 1.0));
}

TEST_CASE("radon transform support, symmetry, fourier duality") {
  const spin_rep R = spin_rep::build(2, rep_variant::plus);
  const cvec v = cvec::Ones(1);
  const bundle_section f = test_bump(R, 2.0, v);
  const vahlen k = vahlen::identity(1);
  // support in [-R0, R0]
  CHECK(radon_transform(R, 0, f, 2.3, k, 160).norm() < 1e-10);
  CHECK(radon_transform(R, 0, f, -2.3, k, 160).norm() < 1e-10);
  // even radial profile for the symmetric section
  const cvec rp = radon_transform(R, 0, f, 0.9, k, 640);
  const cvec rm = radon_transform(R, 0, f, -0.9, k, 640);
  CHECK((rp - rm).norm() < 5e-7 * (rp.norm() + 1e-12));
  // F f(lam, k) = int e^{-i lam t} R f(t, k) dt
  const double lam = 1.0;
  const gl_rule tg = gauss_legendre_on(96, -2.2, 2.2);
  cvec viaRadon = cvec::Zero(1);
  for (int i = 0; i < 96; ++i)
    viaRadon += tg.weights[i] * std::exp(cplx(0, -lam * tg.nodes[i])) *
                radon_transform(R, 0, f, tg.nodes[i], k, 160);
  const gpolar_grid gp = gpolar_grid::build(2, 2.0, 48, 192);
  std::vector<double> base = {1.0, 0.0};
  sphere_grid single;
  single.dim = 1;
  single.nodes = {base};
  single.weights = {1.0};
  const cvec direct = helgason_fourier(R, 0, lam, f, gp, single)[0];
  CHECK((viaRadon - direct).norm() < 1e-4 * (direct.norm() + 1e-12));
}

TEST_CASE("spectral projection composes the two transforms") {
  const spin_rep R = spin_rep::build(2, rep_variant::plus);
  const cvec v = cvec::Ones(1);
  const bundle_section f = test_bump(R, 1.5, v, 2.0);
  const gpolar_grid gp = gpolar_grid::build(2, 1.5, 24, 64);
  const sphere_grid boundary = sphere_grid_build(1, 64);
  const vahlen x = body_units::make_a(1, 0.7);
  const double lam = 1.4;
  const cvec got = spectral_projection(R, 0, lam, f, gp, boundary, x);
  const std::vector<cvec> Ff = helgason_fourier(R, 0, lam, f, gp, boundary);
  const cvec manual =
      plancherel_density(lam, 2) * poisson_quadrature(R, lam, Ff, boundary, x);
  CHECK((got - manual).norm() == 0.0);
}

TEST_CASE("scattering profile invariances") {
  const spin_rep R = spin_rep::build(3, rep_variant::full);
  std::mt19937_64 rng(113);
  const p_combo F = random_p_combo(R, +1, 1.2, 2, rng, 0.8);
  const vahlen x = random_g(2, rng, 1.5);
  const cvec prof = scattering_profile(R, F, x);
  // W-invariance: the relabeled combo gives the same profile
  const cvec profW = scattering_profile(R, intertwiner_U(3, F), x);
  CHECK((prof - profW).norm() < 1e-9 * (prof.norm() + 1.0));
  // gauge invariance under the Cartan M-ambiguity
  const cartan_factors cf = cartan(x);
  const vahlen mk = make_k(random_M_rotor(2, rng));
  const vahlen k1m = cf.k1.mul(mk), mk2 = mk.inverse().mul(cf.k2);
  const double rho = rho_of(3), A = 2.0 * cf.t;
  const cplx il(0, 1);
  const p_combo Fw = intertwiner_U(3, F);
  const cvec sum = std::exp((il * F.lam - rho) * A) * hc_c_function(F.lam, 3) *
                       combo_value(R, F, k1m) +
                   std::exp((-il * F.lam - rho) * A) * hc_c_function(-F.lam, 3) *
                       combo_value(R, Fw, k1m);
  const cvec gauged = (1.0 / std::sqrt(2.0)) * (R.ev(mk2).adjoint() * sum);
  CHECK((prof - gauged).norm() < 1e-9 * (prof.norm() + 1.0));
}

TEST_CASE("scattering profile is B-star asymptotic to the poisson transform") {
  const spin_rep R = spin_rep::build(2, rep_variant::plus);
  std::mt19937_64 rng(127);
  const p_combo F = random_p_combo(R, 0, 1.0, 2, rng, 0.8);
  const double Rmax = 40.0;
  const sphere_grid kavg = sphere_grid_build(1, 32);
  const int NT = 700;
  double diff_acc = 0.0, norm_sup = 0.0, norm_acc = 0.0;
  for (int i = 0; i < NT; ++i) {
    const double t = (i + 0.5) * Rmax / NT;
    double da = 0.0, na = 0.0;
    for (std::size_t j = 0; j < kavg.size(); ++j) {
      const vahlen x = k_section(kavg.nodes[j]).mul(body_units::make_a(1, t));
      const cvec p = poisson_combo(R, F, x);
      const cvec s = scattering_profile(R, F, x);
      da += kavg.weights[j] * (p - s).squaredNorm();
      na += kavg.weights[j] * p.squaredNorm();
    }
    const double w = (2.0 * std::sinh(t)) * Rmax / NT;
    diff_acc += w * da;
    norm_acc += w * na;
    norm_sup = std::max(norm_sup, norm_acc / std::max(t, 1.0));
  }
  CHECK(diff_acc / Rmax < 0.05 * norm_sup);
}

TEST_CASE("star norm basics") {
  const ball_grid bg = ball_grid_build(2, 8.0, 128);
  const std::vector<double> zero(bg.t.size(), 0.0);
  CHECK(star_norm_sq(bg, zero, {1, 2, 4, 8}) == 0.0);
}
