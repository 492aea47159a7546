#pragma once

#include <cmath>
#include <stdexcept>
#include <vector>

#include "hyperspinor/clifford.hpp"

// G = Spin0(1,n) as Vahlen matrices (a b; b' a') over Cl(0,n-1):
// group law, Iwasawa and Cartan decompositions, Mobius ball action,
// and the error functional E(g,x) of the A+ subadditivity estimate.
//
// Units: H(g) = log|a+b| and A+(g) = log(|a|+|b|) are the raw Vahlen
// coordinates.  The geodesic-polar coordinates used by the analytic layer
// are twice these; see body_units below.

namespace hyperspinor {

struct vahlen {
  cliff a, b;

  int m() const { return a.m(); }

  static vahlen identity(int m) { return {cliff::scalar(m, 1.0), cliff(m)}; }

  vahlen mul(const vahlen& h) const {
    // (a b; b' a')(c d; d' c') has top row (ac + b d', ad + b c').
    return {a * h.a + b * h.b.main_involution(), a * h.b + b * h.a.main_involution()};
  }
  vahlen inverse() const {
    // inverse of (a b; c d) is (d*, -b*; -c*, a*); with c = b', d = a'
    // the top row is (conj(a), -rev(b)).
    return {a.conj(), -b.rev()};
  }

  bool is_valid(double tol = 1e-8) const {
    if (std::abs(a.norm_sq() - b.norm_sq() - 1.0) > tol) return false;
    if (!(b * a.star()).is_paravector(tol)) return false;
    if (!a.is_zero() && !lipschitz_check(a, tol)) return false;
    if (!b.is_zero(tol) && !lipschitz_check(b, tol)) return false;
    return true;
  }
  void require_valid(double tol = 1e-8) const {
    if (!is_valid(tol)) throw std::domain_error("vahlen: invariants violated");
  }

  bool in_K(double tol = 1e-8) const {
    return b.norm() < tol && std::abs(a.norm() - 1.0) < tol;
  }

  // Restore |a|^2 - |b|^2 = 1 after long product chains.
  vahlen renormalized() const {
    const double q = a.norm_sq() - b.norm_sq();
    if (q <= 0.0) throw std::domain_error("vahlen: renormalize with |a|<=|b|");
    const double s = 1.0 / std::sqrt(q);
    return {a * s, b * s};
  }

  double max_abs_diff(const vahlen& o) const {
    double d = 0.0;
    for (int A = 0; A < a.blades(); ++A) {
      d = std::max(d, std::abs(a[A] - o.a[A]));
      d = std::max(d, std::abs(b[A] - o.b[A]));
    }
    return d;
  }
};

inline vahlen make_a(int m, double t) {
  return {cliff::scalar(m, std::cosh(t)), cliff::scalar(m, std::sinh(t))};
}
inline vahlen make_n(int m, const std::vector<double>& x) {
  const cliff xv = cliff::vec(m, x);
  return {cliff::scalar(m, 1.0) - xv, xv};
}
inline vahlen make_k(const cliff& u) { return {u, cliff(u.m())}; }

// ---------------------------------------------------------------------------
// Iwasawa decomposition g = k a_H n_x, H(g) = log|a+b|.

struct iwasawa_factors {
  vahlen k;
  double t = 0.0;
  std::vector<double> x;
};

inline double iwasawa_H(const vahlen& g) { return std::log((g.a + g.b).norm()); }

inline cliff iwasawa_kappa_u(const vahlen& g) { return (g.a + g.b).normalized(); }

inline iwasawa_factors iwasawa(const vahlen& g) {
  const int m = g.m();
  iwasawa_factors f;
  const cliff apb = g.a + g.b;
  f.t = std::log(apb.norm());
  f.k = make_k(apb.normalized());
  const vahlen nmat = make_a(m, -f.t).mul(f.k.inverse()).mul(g);
  f.x.resize(m);
  for (int i = 0; i < m; ++i) f.x[i] = nmat.b[1u << i];
  return f;
}

// ---------------------------------------------------------------------------
// Cartan decomposition g = k1 a_t k2, A+(g) = log(|a|+|b|).

inline double cartan_Aplus(const vahlen& g) { return std::log(g.a.norm() + g.b.norm()); }

// Two-reflection rotor with twisted action taking the base paravector 1 to
// the unit paravector xi: u = ((xi+1)/|xi+1|) * 1.  Singular at xi = -1,
// which quadrature grids keep away from.
inline cliff rotor_to(const cliff& xi) {
  const cliff w = xi + cliff::scalar(xi.m(), 1.0);
  const double nw = w.norm();
  if (nw < 1e-8) throw std::domain_error("rotor_to: antipode");
  return w * (1.0 / nw);
}

struct cartan_factors {
  vahlen k1;
  double t = 0.0;
  vahlen k2;
};

inline cartan_factors cartan(const vahlen& g) {
  const int m = g.m();
  cartan_factors f;
  const double na = g.a.norm(), nb = g.b.norm();
  f.t = std::log(na + nb);
  if (nb < 1e-13) {
    f.k1 = g;
    f.t = 0.0;
    f.k2 = vahlen::identity(m);
    return f;
  }
  // xi = direction of g.0 = b (a')^{-1}
  const cliff b0 = g.b * g.a.main_involution().group_inverse();
  f.k1 = make_k(rotor_to(b0.normalized()));
  // k1^{-1} g = a_t k2 with k2 = (u, 0), so its top-left entry is cosh(t) u;
  // normalizing it recovers u without the e^{2t}-scale cancellation that
  // forming a_{-t} k1^{-1} g directly would incur
  f.k2 = make_k(f.k1.inverse().mul(g).a.normalized());
  return f;
}

// ---------------------------------------------------------------------------
// Mobius action on the unit ball, x -> (a x + b)(b' x + a')^{-1}.

inline cliff ball_action(const vahlen& g, const cliff& p) {
  const cliff num = g.a * p + g.b;
  const cliff den = g.b.main_involution() * p + g.a.main_involution();
  return num * den.group_inverse();
}

inline double distance(const vahlen& g, const vahlen& h) {
  return cartan_Aplus(g.inverse().mul(h));
}

// ---------------------------------------------------------------------------
// Appendix error functional: A+(g x) = A+(x) + H(g k1(x)) + E(g, x).

inline double E_function(const vahlen& g, const vahlen& x) {
  const cartan_factors cx = cartan(x);
  return cartan_Aplus(g.mul(x)) - cartan_Aplus(x) - iwasawa_H(g.mul(cx.k1));
}

// ---------------------------------------------------------------------------
// Analytic-layer units: geodesic-polar coordinates are twice the raw Vahlen
// ones (normalized Haar check: int_K e^{-2 rho H_body(g^{-1}k)} dk = 1 with
// rho = (n-1)/2).

namespace body_units {

inline double H(const vahlen& g) { return 2.0 * iwasawa_H(g); }
inline double Aplus(const vahlen& g) { return 2.0 * cartan_Aplus(g); }
// a_t in body units.
inline vahlen make_a(int m, double t) { return hyperspinor::make_a(m, t / 2.0); }

}  // namespace body_units

// ---------------------------------------------------------------------------
// Stable Iwasawa data for g = a_s k_u (raw s): a + b = e^s u_even + e^{-s} u_odd,
// and the two grade parts are orthogonal, so that
//   H = s + (1/2) log(|u_e|^2 + e^{-4s}|u_o|^2)        (for s >= 0)
// with no cancellation or overflow.  kappa is returned as the diagonal unit u.
struct iwasawa_stable {
  double H = 0.0;
  cliff kappa_u;
};

inline iwasawa_stable iwasawa_a_k(double s, const cliff& u) {
  const cliff ue = u.even_part(), uo = u.odd_part();
  iwasawa_stable r;
  if (s >= 0.0) {
    const double q = ue.norm_sq() + std::exp(-4.0 * s) * uo.norm_sq();
    r.H = s + 0.5 * std::log(q);
    r.kappa_u = (ue + std::exp(-2.0 * s) * uo) * (1.0 / std::sqrt(q));
  } else {
    const double q = std::exp(4.0 * s) * ue.norm_sq() + uo.norm_sq();
    r.H = -s + 0.5 * std::log(q);
    r.kappa_u = (std::exp(2.0 * s) * ue + uo) * (1.0 / std::sqrt(q));
  }
  return r;
}

}  // namespace hyperspinor
