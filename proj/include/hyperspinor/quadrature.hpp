#pragma once

#include <cmath>
#include <functional>
#include <stdexcept>
#include <vector>

#include "hyperspinor/clifford.hpp"
#include "hyperspinor/special_functions.hpp"
#include "hyperspinor/vahlen.hpp"

// Quadrature: Gauss-Legendre rules, normalized sphere grids S^1..S^4 (the
// boundary K/M with its Haar-descended measure), the section map xi -> k(xi),
// and radial ball grids for the measure (2 sinh t)^{n-1} dt.

namespace hyperspinor {

struct gl_rule {
  std::vector<double> nodes;    // on [-1, 1]
  std::vector<double> weights;  // sum 2
};

inline gl_rule gauss_legendre(int N) {
  gl_rule r;
  r.nodes.resize(N);
  r.weights.resize(N);
  for (int i = 0; i < N; ++i) {
    // Newton from the Chebyshev-like initial guess.
    double x = std::cos(kPi * (i + 0.75) / (N + 0.5));
    double pp = 0.0;
    for (int it = 0; it < 100; ++it) {
      double p0 = 1.0, p1 = x;
      for (int k = 2; k <= N; ++k) {
        const double p2 = ((2.0 * k - 1.0) * x * p1 - (k - 1.0) * p0) / k;
        p0 = p1;
        p1 = p2;
      }
      pp = N * (x * p1 - p0) / (x * x - 1.0);
      const double dx = p1 / pp;
      x -= dx;
      if (std::abs(dx) < 1e-15) break;
    }
    r.nodes[N - 1 - i] = x;
    r.weights[N - 1 - i] = 2.0 / ((1.0 - x * x) * pp * pp);
  }
  return r;
}

inline gl_rule gauss_legendre_on(int N, double a, double b) {
  gl_rule r = gauss_legendre(N);
  for (int i = 0; i < N; ++i) {
    r.nodes[i] = a + (b - a) * 0.5 * (r.nodes[i] + 1.0);
    r.weights[i] *= (b - a) * 0.5;
  }
  return r;
}

// ---------------------------------------------------------------------------
// Sphere grids.  Nodes are unit vectors in R^{dim+1}; weights sum to 1
// (normalized measure).  Component 0 is the scalar slot of the paravector
// model, so the base point is (1, 0, ..., 0) and the antipode (-1, 0, ...)
// is avoided by node placement.

struct sphere_grid {
  int dim = 1;
  std::vector<std::vector<double>> nodes;
  std::vector<double> weights;

  std::size_t size() const { return nodes.size(); }
};

inline sphere_grid sphere_grid_build(int dim, int order) {
  sphere_grid g;
  g.dim = dim;
  if (dim == 1) {
    // uniform angles, offset half a step away from the antipode
    const int N = order;
    for (int j = 0; j < N; ++j) {
      const double th = 2.0 * kPi * (j + 0.5) / N;
      g.nodes.push_back({std::cos(th), std::sin(th)});
      g.weights.push_back(1.0 / N);
    }
  } else if (dim == 2) {
    // Gauss-Legendre in the polar cosine, uniform azimuth
    const int NP = order, NA = 2 * order;
    const gl_rule gl = gauss_legendre(NP);
    for (int i = 0; i < NP; ++i) {
      const double c = gl.nodes[i];
      const double s = std::sqrt(std::max(0.0, 1.0 - c * c));
      for (int j = 0; j < NA; ++j) {
        const double ph = 2.0 * kPi * (j + 0.5) / NA;
        g.nodes.push_back({c, s * std::cos(ph), s * std::sin(ph)});
        g.weights.push_back(gl.weights[i] / 2.0 / NA);
      }
    }
  } else if (dim == 3) {
    // c = cos chi with weight sqrt(1-c^2): Gauss-Chebyshev (second kind),
    // polynomial-exact; then an S^2 factor
    const int NC = order;
    const sphere_grid s2 = sphere_grid_build(2, std::max(4, order));
    double wsum = 0.0;
    std::vector<double> cn(NC), cw(NC);
    for (int i = 0; i < NC; ++i) {
      const double th = kPi * (i + 1.0) / (NC + 1.0);
      cn[i] = std::cos(th);
      cw[i] = std::pow(std::sin(th), 2);
      wsum += cw[i];
    }
    for (int i = 0; i < NC; ++i) {
      const double c = cn[i], s = std::sqrt(1.0 - c * c);
      const double wchi = cw[i] / wsum;
      for (std::size_t j = 0; j < s2.size(); ++j) {
        g.nodes.push_back({c, s * s2.nodes[j][0], s * s2.nodes[j][1], s * s2.nodes[j][2]});
        g.weights.push_back(wchi * s2.weights[j]);
      }
    }
  } else if (dim == 4) {
    // c = cos chi with polynomial weight (1-c^2): Gauss-Legendre in c with
    // the weight folded in, polynomial-exact; then an S^3 factor
    const int NC = order;
    const gl_rule gl = gauss_legendre(NC);
    const sphere_grid s3 = sphere_grid_build(3, std::max(4, order / 2));
    double wsum = 0.0;
    for (int i = 0; i < NC; ++i) wsum += gl.weights[i] * (1.0 - gl.nodes[i] * gl.nodes[i]);
    for (int i = 0; i < NC; ++i) {
      const double c = gl.nodes[i], s = std::sqrt(1.0 - c * c);
      const double wchi = gl.weights[i] * (1.0 - c * c) / wsum;
      for (std::size_t j = 0; j < s3.size(); ++j) {
        std::vector<double> node = {c};
        for (int cc = 0; cc < 4; ++cc) node.push_back(s * s3.nodes[j][cc]);
        g.nodes.push_back(node);
        g.weights.push_back(wchi * s3.weights[j]);
      }
    }
  } else {
    throw std::invalid_argument("sphere_grid: dim out of range");
  }
  return g;
}

// Paravector in Cl(0,dim) from a sphere node.
inline cliff node_paravector(const std::vector<double>& node) {
  const int m = int(node.size()) - 1;
  cliff p = cliff::scalar(m, node[0]);
  for (int i = 0; i < m; ++i) p[1u << i] = node[i + 1];
  return p;
}

// Section map K/M -> K: the two-reflection rotor taking the base paravector
// to xi, as a diagonal Vahlen element.
inline vahlen k_section(const std::vector<double>& node) {
  return make_k(rotor_to(node_paravector(node)));
}

// ---------------------------------------------------------------------------
// Radial ball grids for int_0^R (2 sinh t)^{n-1} dt (geodesic-polar measure).

struct ball_grid {
  int n = 2;
  double R = 1.0;
  std::vector<double> t;
  std::vector<double> w;  // includes the (2 sinh t)^{n-1} factor

  double total_weight() const {
    double s = 0.0;
    for (double x : w) s += x;
    return s;
  }
};

inline ball_grid ball_grid_build(int n, double R, int NT) {
  ball_grid b;
  b.n = n;
  b.R = R;
  const gl_rule gl = gauss_legendre_on(NT, 0.0, R);
  b.t = gl.nodes;
  b.w.resize(NT);
  for (int i = 0; i < NT; ++i)
    b.w[i] = gl.weights[i] * std::pow(2.0 * std::sinh(gl.nodes[i]), n - 1);
  return b;
}

// Reference value of int_0^R (2 sinh t)^{n-1} dt for the grid invariant.
inline double ball_radial_mass(int n, double R) {
  if (n == 2) return 2.0 * (std::cosh(R) - 1.0);
  if (n == 3) return std::sinh(2.0 * R) - 2.0 * R;  // (2 sinh t)^2 = 2 cosh 2t - 2
  // generic: fine trapezoid fallback
  const int N = 20000;
  double s = 0.0;
  for (int i = 0; i < N; ++i) {
    const double t = (i + 0.5) * R / N;
    s += std::pow(2.0 * std::sinh(t), n - 1) * R / N;
  }
  return s;
}

}  // namespace hyperspinor
