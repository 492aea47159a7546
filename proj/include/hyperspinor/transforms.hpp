#pragma once

#include <Eigen/Dense>
#include <cmath>
#include <complex>
#include <functional>
#include <vector>

#include "hyperspinor/quadrature.hpp"
#include "hyperspinor/special_functions.hpp"
#include "hyperspinor/spherical.hpp"
#include "hyperspinor/spin_rep.hpp"
#include "hyperspinor/vahlen.hpp"

// Poisson transform, Helgason Fourier transform, Radon transform (small n),
// spectral projections, p-functions, the Weyl intertwiner and the scattering
// profile.  Boundary sections live on a sphere grid through the section map;
// all group-coordinate exponents use the geodesic-polar units of body_units.

namespace hyperspinor {

// ---------------------------------------------------------------------------
// Boundary sections and p-functions.

struct p_term {
  vahlen g;
  cvec v;
  cplx coeff;
};

struct p_combo {
  int sigma = +1;  // half-spin label (ignored for n even)
  cplx lam;
  std::vector<p_term> terms;
};

// p^{g,v}_{sigma,lambda}(k) = e^{(i lam - rho)H(g^{-1}k)} P_sigma tau(kappa(g^{-1}k))^{-1} v
inline cvec p_value(const spin_rep& rep, int sigma_sign, cplx lam, const vahlen& g,
                    const cvec& v, const vahlen& k) {
  const double rho = rho_of(rep.n());
  const vahlen gk = g.inverse().mul(k);
  const double H = 2.0 * iwasawa_H(gk);
  const cliff ku = iwasawa_kappa_u(gk);
  return std::exp((cplx(0, 1) * lam - rho) * H) *
         (rep.projector(sigma_sign) * (rep.ev(ku).adjoint() * v));
}

inline cvec combo_value(const spin_rep& rep, const p_combo& F, const vahlen& k) {
  cvec acc = cvec::Zero(rep.dim());
  for (const auto& tm : F.terms)
    acc += tm.coeff * p_value(rep, F.sigma, F.lam, tm.g, tm.v, k);
  return acc;
}

inline std::vector<cvec> combo_values(const spin_rep& rep, const p_combo& F,
                                      const sphere_grid& grid) {
  std::vector<cvec> vals(grid.size());
  for (std::size_t j = 0; j < grid.size(); ++j)
    vals[j] = combo_value(rep, F, k_section(grid.nodes[j]));
  return vals;
}

// L2(K, sigma) inner product of grid-sampled sections (normalized measure).
inline cplx l2k_inner(const sphere_grid& grid, const std::vector<cvec>& A,
                      const std::vector<cvec>& B) {
  cplx s = 0.0;
  for (std::size_t j = 0; j < grid.size(); ++j) s += grid.weights[j] * A[j].dot(B[j]);
  return s;
}

inline double l2k_norm_sq(const sphere_grid& grid, const std::vector<cvec>& A) {
  return l2k_inner(grid, A, A).real();
}

// ---------------------------------------------------------------------------
// Poisson transform.

// Quadrature form: sqrt(d) int_K e^{-(i lam + rho)H(x^{-1}k)} tau(kappa(x^{-1}k)) F(k) dk.
inline cvec poisson_quadrature(const spin_rep& rep, cplx lam, const std::vector<cvec>& F,
                               const sphere_grid& grid, const vahlen& x) {
  const double rho = rho_of(rep.n());
  const vahlen xi = x.inverse();
  cvec acc = cvec::Zero(rep.dim());
  for (std::size_t j = 0; j < grid.size(); ++j) {
    const vahlen k = k_section(grid.nodes[j]);
    const vahlen xk = xi.mul(k);
    const double H = 2.0 * iwasawa_H(xk);
    const cliff ku = iwasawa_kappa_u(xk);
    acc += grid.weights[j] * std::exp(-(cplx(0, 1) * lam + rho) * H) * (rep.ev(ku) * F[j]);
  }
  return std::sqrt(double(d_tau_sigma(rep.n()))) * acc;
}

// Exact form on p-function combinations:
//   P p^{g,v} = (1/sqrt(d)) Phi_{sigma,lam}(g^{-1} .) v,
// evaluated through the closed-form spherical matrix.  Stable at any radius;
// agreement with poisson_quadrature is verified in the tests.
inline cvec poisson_combo(const spin_rep& rep, const p_combo& F, const vahlen& x) {
  const double inv_sqrt_d = 1.0 / std::sqrt(double(d_tau_sigma(rep.n())));
  cvec acc = cvec::Zero(rep.dim());
  for (const auto& tm : F.terms)
    acc += tm.coeff * (spherical_at(rep, F.sigma, F.lam, tm.g.inverse().mul(x)) * tm.v);
  return inv_sqrt_d * acc;
}

// ---------------------------------------------------------------------------
// Helgason Fourier transform of a compactly supported bundle section.
// The section is a covariant rule g -> f(g) in V_tau; the integral over G
// descends to geodesic-polar coordinates (outer sphere x radial grid).

struct bundle_section {
  std::function<cvec(const vahlen&)> f;
  double support_R = 1.0;
};

struct gpolar_grid {
  sphere_grid sphere;
  ball_grid radial;
  std::vector<vahlen> knodes;  // section elements of the sphere nodes

  static gpolar_grid build(int n, double R, int NT, int sphere_order) {
    gpolar_grid g;
    g.sphere = sphere_grid_build(n - 1, sphere_order);
    g.radial = ball_grid_build(n, R, NT);
    g.knodes.reserve(g.sphere.size());
    for (std::size_t j = 0; j < g.sphere.size(); ++j)
      g.knodes.push_back(k_section(g.sphere.nodes[j]));
    return g;
  }
};

inline double l2g_norm_sq(const spin_rep& rep, const bundle_section& f, const gpolar_grid& gp) {
  double s = 0.0;
  for (std::size_t j = 0; j < gp.sphere.size(); ++j)
    for (std::size_t i = 0; i < gp.radial.t.size(); ++i) {
      const vahlen g = gp.knodes[j].mul(body_units::make_a(rep.M(), gp.radial.t[i]));
      s += gp.sphere.weights[j] * gp.radial.w[i] * f.f(g).squaredNorm();
    }
  return s;
}

// F^tau_sigma f(lam, k) = sqrt(d) P_sigma int_G e^{(i lam - rho)H(g^{-1}k)}
//   tau(kappa(g^{-1}k))^{-1} f(g) dg, sampled on the boundary grid.
inline std::vector<cvec> helgason_fourier(const spin_rep& rep, int sigma_sign, cplx lam,
                                          const bundle_section& f, const gpolar_grid& gp,
                                          const sphere_grid& boundary) {
  const double rho = rho_of(rep.n());
  const cmat P = rep.projector(sigma_sign);
  const double sq_d = std::sqrt(double(d_tau_sigma(rep.n())));
  // cache f on the polar grid
  std::vector<std::vector<cvec>> fv(gp.sphere.size());
  std::vector<std::vector<vahlen>> ginv(gp.sphere.size());
  for (std::size_t j = 0; j < gp.sphere.size(); ++j) {
    fv[j].resize(gp.radial.t.size());
    ginv[j].resize(gp.radial.t.size());
    for (std::size_t i = 0; i < gp.radial.t.size(); ++i) {
      const vahlen g = gp.knodes[j].mul(body_units::make_a(rep.M(), gp.radial.t[i]));
      fv[j][i] = f.f(g);
      ginv[j][i] = g.inverse();
    }
  }
  std::vector<cvec> out(boundary.size());
  for (std::size_t b = 0; b < boundary.size(); ++b) {
    const vahlen k = k_section(boundary.nodes[b]);
    cvec acc = cvec::Zero(rep.dim());
    for (std::size_t j = 0; j < gp.sphere.size(); ++j)
      for (std::size_t i = 0; i < gp.radial.t.size(); ++i) {
        const vahlen gk = ginv[j][i].mul(k);
        const double H = 2.0 * iwasawa_H(gk);
        const cliff ku = iwasawa_kappa_u(gk);
        acc += gp.sphere.weights[j] * gp.radial.w[i] *
               std::exp((cplx(0, 1) * lam - rho) * H) * (rep.ev(ku).adjoint() * fv[j][i]);
      }
    out[b] = sq_d * (P * acc);
  }
  return out;
}

// ---------------------------------------------------------------------------
// Radon transform (n in {2,3}): R f(t,k) = sqrt(d) P_sigma e^{rho t}
//   int_N f(k a_t n_x) dn, with dn = gamma_N dx fixed by the normalized
//   Poisson-kernel integral int_N (1+4|x|^2)^{-2 rho} gamma_N dx = 1.

inline double radon_gamma_N(int n) {
  if (n == 2) return 2.0 / kPi;  // int dx/(1+4x^2) = pi/2
  if (n == 3) return 4.0 / kPi;  // int_{R^2} dx/(1+4|x|^2)^2 = pi/4
  throw std::invalid_argument("radon: n in {2,3} only");
}

inline cvec radon_transform(const spin_rep& rep, int sigma_sign, const bundle_section& f,
                            double t, const vahlen& k, int slabN = 96, double slab_half = 0.0) {
  const int n = rep.n();
  const int m = rep.M();
  const double rho = rho_of(n);
  if (slab_half <= 0.0) slab_half = std::cosh(f.support_R) + 2.0;
  const gl_rule gl = gauss_legendre_on(slabN, -slab_half, slab_half);
  cvec acc = cvec::Zero(rep.dim());
  const vahlen kat = k.mul(body_units::make_a(m, t));
  if (n == 2) {
    for (int i = 0; i < slabN; ++i) {
      const vahlen g = kat.mul(make_n(m, {gl.nodes[i]}));
      if (2.0 * cartan_Aplus(g) > f.support_R) continue;
      acc += gl.weights[i] * f.f(g);
    }
  } else {
    for (int i = 0; i < slabN; ++i)
      for (int j = 0; j < slabN; ++j) {
        const vahlen g = kat.mul(make_n(m, {gl.nodes[i], gl.nodes[j]}));
        if (2.0 * cartan_Aplus(g) > f.support_R) continue;
        acc += gl.weights[i] * gl.weights[j] * f.f(g);
      }
  }
  const double sq_d = std::sqrt(double(d_tau_sigma(n)));
  return sq_d * std::exp(rho * t) * radon_gamma_N(n) * (rep.projector(sigma_sign) * acc);
}

// ---------------------------------------------------------------------------
// Spectral projection Q_{sigma,lambda} f = nu(lambda) P_{sigma,lambda}(F f).

inline cvec spectral_projection(const spin_rep& rep, int sigma_sign, double lam,
                                const bundle_section& f, const gpolar_grid& gp,
                                const sphere_grid& boundary, const vahlen& x) {
  const std::vector<cvec> Ff = helgason_fourier(rep, sigma_sign, lam, f, gp, boundary);
  return plancherel_density(lam, rep.n()) * poisson_quadrature(rep, lam, Ff, boundary, x);
}

// ---------------------------------------------------------------------------
// Weyl intertwiner on p-function combinations: relabel (sigma, lam) ->
// (s sigma, -lam); the half-spin label flips for n odd and is fixed for n even.

inline p_combo intertwiner_U(int n, const p_combo& F) {
  p_combo G = F;
  G.lam = -F.lam;
  if (n % 2 != 0) G.sigma = -F.sigma;
  return G;
}

// ---------------------------------------------------------------------------
// Scattering profile: the Weyl-sum far-field of the Poisson transform,
//   (1/sqrt d) tau(k2(x))^{-1} sum_s e^{(i s lam - rho)A+(x)} c(s lam) (U_s F)(k1(x)).
inline cvec scattering_profile(const spin_rep& rep, const p_combo& F, const vahlen& x) {
  const int n = rep.n();
  const double rho = rho_of(n);
  const cartan_factors cf = cartan(x);
  const double A = 2.0 * cf.t;
  const vahlen k1 = cf.k1;
  const cplx il(0, 1);
  const p_combo Fw = intertwiner_U(n, F);
  const cvec val1 = combo_value(rep, F, k1);
  const cvec valw = combo_value(rep, Fw, k1);
  const cvec sum = std::exp((il * F.lam - rho) * A) * hc_c_function(F.lam, n) * val1 +
                   std::exp((-il * F.lam - rho) * A) * hc_c_function(-F.lam, n) * valw;
  return (1.0 / std::sqrt(double(d_tau_sigma(n)))) * (rep.ev(cf.k2).adjoint() * sum);
}

// ---------------------------------------------------------------------------
// Strichartz-type norms on finite R-ladders.

// sup_R (1/R) int_{B(R)} ||h||^2 evaluated on cumulative radial grids:
// values[i] must hold the K-averaged squared norm at radius t_i, including
// nothing else; the (2 sinh t)^{n-1} weight comes from the grid.
inline double star_norm_sq(const ball_grid& bg, const std::vector<double>& kavg_sq,
                           const std::vector<double>& Rset) {
  double sup = 0.0;
  for (double R : Rset) {
    double acc = 0.0;
    for (std::size_t i = 0; i < bg.t.size(); ++i)
      if (bg.t[i] <= R) acc += bg.w[i] * kavg_sq[i];
    sup = std::max(sup, acc / R);
  }
  return sup;
}

}  // namespace hyperspinor
