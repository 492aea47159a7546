#pragma once

#include <Eigen/Dense>
#include <complex>
#include <vector>

#include "hyperspinor/quadrature.hpp"
#include "hyperspinor/special_functions.hpp"
#include "hyperspinor/spin_rep.hpp"
#include "hyperspinor/vahlen.hpp"

// tau-spherical functions Phi_{sigma,lambda}: scalar components in closed
// form through Jacobi functions, the Eisenstein integral by quadrature on
// general group elements, Fatou limits and the quantitative Weyl asymptotics.

namespace hyperspinor {

inline double rho_of(int n) { return (n - 1) / 2.0; }

// Scalar components on A.  n even: the single phi(lam, t); n odd: the pair
// (phi^+, phi^-) multiplying the projectors P_+ and P_- for sigma = sigma^s.
inline std::vector<cplx> scalar_components(int n, int sigma_sign, cplx lam, double t) {
  const jacobi_params pa{n / 2.0 - 1.0, n / 2.0};
  const cplx a = std::cosh(t / 2.0) * jacobi_phi(pa, 2.0 * lam, t / 2.0);
  if (n % 2 == 0) return {a};
  const jacobi_params pb{n / 2.0, n / 2.0 - 1.0};
  const cplx b = cplx(0, 1) * (2.0 * lam / double(n)) * std::sinh(t / 2.0) *
                 jacobi_phi(pb, 2.0 * lam, t / 2.0);
  const double s = sigma_sign >= 0 ? 1.0 : -1.0;
  return {a + s * b, a - s * b};
}

inline cmat spherical_matrix(const spin_rep& rep, int sigma_sign, cplx lam, double t) {
  const int n = rep.n();
  const std::vector<cplx> c = scalar_components(n, sigma_sign, lam, t);
  if (n % 2 == 0) return c[0] * cmat::Identity(rep.dim(), rep.dim());
  return c[0] * rep.projector(+1) + c[1] * rep.projector(-1);
}

// Phi at a general group element through the Cartan decomposition and the
// radiality Phi(k1 g k2) = tau(k2)^{-1} Phi(g) tau(k1)^{-1}.
inline cmat spherical_at(const spin_rep& rep, int sigma_sign, cplx lam, const vahlen& g) {
  const cartan_factors cf = cartan(g);
  const double t = 2.0 * cf.t;  // geodesic-polar radius
  const cmat phiA = spherical_matrix(rep, sigma_sign, lam, t);
  return rep.ev(cf.k2).adjoint() * phiA * rep.ev(cf.k1).adjoint();
}

// Eisenstein integral d int_K e^{-(i lam + rho)H(g^{-1}k)}
// tau(kappa(g^{-1}k)) P_sigma tau(k)^{-1} dk, quadrature over K/M.
inline cmat eisenstein_integral(const spin_rep& rep, int sigma_sign, cplx lam, const vahlen& g,
                                const sphere_grid& grid) {
  const int n = rep.n();
  const double rho = rho_of(n);
  const cmat P = rep.projector(sigma_sign);
  const vahlen gi = g.inverse();
  cmat acc = cmat::Zero(rep.dim(), rep.dim());
  for (std::size_t j = 0; j < grid.size(); ++j) {
    const vahlen k = k_section(grid.nodes[j]);
    const vahlen gk = gi.mul(k);
    const double H = 2.0 * iwasawa_H(gk);
    const cliff ku = iwasawa_kappa_u(gk);
    acc += grid.weights[j] * std::exp(-(cplx(0, 1) * lam + rho) * H) *
           (rep.ev(ku) * P * rep.ev(k.a).adjoint());
  }
  return double(d_tau_sigma(n)) * acc;
}

inline double operator_norm(const cmat& A) {
  Eigen::JacobiSVD<cmat> svd(A);
  return svd.singularValues()(0);
}

// Defect of the Weyl asymptotic sum
//   Phi(a_t) ~ sum_s e^{(i s lam - rho) t} c(s lam) P_{s sigma}
// with the reduced scalar c-function; s sigma flips the half-spin label for
// n odd and is trivial for n even.
inline double asymptotic_defect(const spin_rep& rep, int sigma_sign, cplx lam, double t) {
  const int n = rep.n();
  const double rho = rho_of(n);
  const cplx il(0, 1);
  const cmat phiA = spherical_matrix(rep, sigma_sign, lam, t);
  cmat weyl;
  if (n % 2 == 0) {
    weyl = (std::exp((il * lam - rho) * t) * hc_c_function(lam, n) +
            std::exp((-il * lam - rho) * t) * hc_c_function(-lam, n)) *
           cmat::Identity(rep.dim(), rep.dim());
  } else {
    weyl = std::exp((il * lam - rho) * t) * hc_c_function(lam, n) * rep.projector(sigma_sign) +
           std::exp((-il * lam - rho) * t) * hc_c_function(-lam, n) * rep.projector(-sigma_sign);
  }
  return operator_norm(phiA - weyl);
}

// e^{(rho - i lam) t} Phi(a_t) - c(lam) P_sigma, for Re(i lam) > 0.
inline cmat fatou_limit_check(const spin_rep& rep, int sigma_sign, cplx lam, double t) {
  const int n = rep.n();
  const double rho = rho_of(n);
  const cmat phiA = spherical_matrix(rep, sigma_sign, lam, t);
  return std::exp((rho - cplx(0, 1) * lam) * t) * phiA -
         hc_c_function(lam, n) * rep.projector(sigma_sign);
}

// Operator-norm distance between tau^{-1}(k2(g a_R)) P_sigma tau^{-1}(k1(g a_R))
// and P_sigma tau^{-1}(kappa(g)); tends to 0 as R grows.
inline double cartan_limit_defect(const vahlen& g, double R, const spin_rep& rep,
                                  int sigma_sign) {
  const cmat P = rep.projector(sigma_sign);
  const vahlen gR = g.mul(make_a(g.m(), R));
  const cartan_factors cf = cartan(gR);
  const cmat lhs = rep.ev(cf.k2).adjoint() * P * rep.ev(cf.k1).adjoint();
  const cmat rhs = P * rep.ev(iwasawa_kappa_u(g)).adjoint();
  return operator_norm(lhs - rhs);
}

}  // namespace hyperspinor
