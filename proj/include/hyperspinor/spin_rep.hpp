#pragma once

#include <Eigen/Dense>
#include <complex>
#include <stdexcept>
#include <vector>

#include "hyperspinor/clifford.hpp"
#include "hyperspinor/vahlen.hpp"

// Matrix models of the spin representation tau_n (n odd) and the half-spin
// representations tau_n^{+/-} (n even) of K = Spin(n), realized inside
// Cl(0,n-1).  Generator images are anti-Hermitian with Gamma^2 = -Id,
// built by the standard tensor-of-Pauli construction; for n-1 odd the two
// inequivalent modules differ by the sign of the last generator.

namespace hyperspinor {

using cmat = Eigen::MatrixXcd;
using cvec = Eigen::VectorXcd;
using cplx = std::complex<double>;

enum class rep_variant { full, plus, minus };

namespace detail {

inline cmat pauli(int i) {
  cmat s(2, 2);
  switch (i) {
    case 1: s << 0, 1, 1, 0; break;
    case 2: s << 0, cplx(0, -1), cplx(0, 1), 0; break;
    default: s << 1, 0, 0, -1; break;
  }
  return s;
}

inline cmat kron(const cmat& A, const cmat& B) {
  cmat R(A.rows() * B.rows(), A.cols() * B.cols());
  for (int i = 0; i < A.rows(); ++i)
    for (int j = 0; j < A.cols(); ++j)
      R.block(i * B.rows(), j * B.cols(), B.rows(), B.cols()) = A(i, j) * B;
  return R;
}

// Anti-Hermitian generators of Cl(0,M).  M even: unique module; M odd:
// extend the M-1 module by a multiple of the volume element, with the
// overall sign selecting the variant.
inline std::vector<cmat> gammas(int M, int sign) {
  const cplx I(0, 1);
  if (M == 0) return {};
  if (M % 2 == 0) {
    std::vector<cmat> g;
    if (M == 2) {
      g = {pauli(1), pauli(2)};
    } else {  // M == 4
      const cmat id2 = cmat::Identity(2, 2);
      g = {kron(pauli(1), id2), kron(pauli(2), id2), kron(pauli(3), pauli(1)),
           kron(pauli(3), pauli(2))};
    }
    for (auto& x : g) x *= I;
    return g;
  }
  if (M == 1) {
    cmat g1(1, 1);
    g1(0, 0) = cplx(0, sign);
    return {g1};
  }
  std::vector<cmat> g = gammas(M - 1, +1);
  cmat vol = cmat::Identity(g[0].rows(), g[0].cols());
  for (const auto& x : g) vol = vol * x;
  // vol^2 = (-1)^{(M-1)/2} here; scale so the new generator squares to -Id.
  const int k = (M - 1) / 2;
  const cplx c = (k % 2 == 1) ? cplx(1, 0) : I;
  g.push_back(double(sign) * c * vol);
  return g;
}

}  // namespace detail

class spin_rep {
 public:
  static spin_rep build(int n, rep_variant variant) {
    if (n < 2 || n > 5) throw std::invalid_argument("spin_rep: n out of range");
    const bool even = (n % 2 == 0);
    if (even && variant == rep_variant::full)
      throw std::invalid_argument("spin_rep: n even requires a half-spin variant");
    if (!even && variant != rep_variant::full)
      throw std::invalid_argument("spin_rep: n odd has the full spin representation");
    spin_rep r;
    r.n_ = n;
    r.M_ = n - 1;
    r.variant_ = variant;
    const int sign = (variant == rep_variant::minus) ? -1 : +1;
    r.gamma_ = detail::gammas(r.M_, sign);
    r.dim_ = r.gamma_.empty() ? 1 : int(r.gamma_[0].rows());
    r.blades_.resize(std::size_t(1) << r.M_);
    for (unsigned A = 0; A < r.blades_.size(); ++A) {
      cmat B = cmat::Identity(r.dim_, r.dim_);
      for (int i = 0; i < r.M_; ++i)
        if (A >> i & 1u) B = B * r.gamma_[i];
      r.blades_[A] = B;
    }
    return r;
  }

  int n() const { return n_; }
  int M() const { return M_; }
  int dim() const { return dim_; }
  rep_variant variant() const { return variant_; }
  const cmat& gamma(int i) const { return gamma_[i]; }
  const cmat& blade_image(unsigned A) const { return blades_[A]; }

  // Algebra map on Cl(0,n-1); tau(k) for k = diag(u,u') in K is ev(u).
  cmat ev(const cliff& u) const {
    cmat R = cmat::Zero(dim_, dim_);
    for (unsigned A = 0; A < blades_.size(); ++A)
      if (u[A] != 0.0) R += u[A] * blades_[A];
    return R;
  }
  cmat ev(const vahlen& k) const { return ev(k.a); }

  // Grading operator (n odd): gamma = c * image of the volume blade, with
  // c in {1, i} fixed by gamma^2 = Id.
  cmat grading() const {
    if (M_ % 2 != 0) throw std::domain_error("grading: defined for n odd only");
    const cmat& vol = blades_.back();
    const cmat v2 = vol * vol;
    const cplx c = (v2 - cmat::Identity(dim_, dim_)).norm() < 1e-9 ? cplx(1, 0) : cplx(0, 1);
    return c * vol;
  }

  // Isotypic projector under M = Spin(n-1): Id for n even (multiplicity-one
  // restriction onto sigma_{n-1}); for n odd, P_{+/-} = (Id +/- grading)/2.
  cmat projector(int sigma_sign) const {
    if (n_ % 2 == 0) return cmat::Identity(dim_, dim_);
    if (sigma_sign == 0) throw std::invalid_argument("projector: n odd needs sigma = +/-1");
    const cmat g = grading();
    return 0.5 * (cmat::Identity(dim_, dim_) + double(sigma_sign) * g);
  }

  // Dimension of the sigma-isotypic component.
  int sigma_dim(int sigma_sign) const {
    return (n_ % 2 == 0) ? dim_ : dim_ / 2;
  }

 private:
  int n_ = 0, M_ = 0, dim_ = 0;
  rep_variant variant_ = rep_variant::full;
  std::vector<cmat> gamma_;
  std::vector<cmat> blades_;
};

// Eisenstein-integral multiplicity d_{tau,sigma}: 1 for n even, 2 for n odd.
inline int d_tau_sigma(int n) { return (n % 2 == 0) ? 1 : 2; }

}  // namespace hyperspinor
