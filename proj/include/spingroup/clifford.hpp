#pragma once

#include <Eigen/Dense>
#include <array>
#include <complex>

#include "spingroup/kinematics.hpp"

namespace spingroup {

using Mat4c = Eigen::Matrix4cd;
using Mat4d = Eigen::Matrix4d;
using Vec4c = Eigen::Vector4cd;
using cplx = std::complex<double>;

template <typename Derived>
double max_abs(const Eigen::MatrixBase<Derived>& m) {
  return m.cwiseAbs().maxCoeff();
}

// Dirac-Pauli representation: gamma^0 diagonal, metric (+,-,-,-),
// eps^{0123} = +1.
struct GammaBasis {
  std::array<Mat4c, 4> gamma;

  // sigma^{ab} = (gamma^a gamma^b - gamma^b gamma^a)/2
  const Mat4c& sigma(int a, int b) const { return sigma_[a][b]; }

  static double metric(int a, int b) {
    return a != b ? 0.0 : (a == 0 ? 1.0 : -1.0);
  }

  static double levi_civita(int a, int b, int c, int d);

  // a_x sigma^{01} + a_y sigma^{02} + a_z sigma^{03}
  Mat4c boost_generator(const Vec3& a) const;
  // a_x sigma^{23} + a_y sigma^{31} + a_z sigma^{12}
  Mat4c rotation_generator(const Vec3& a) const;

  Mat4c sigma_[4][4];
};

GammaBasis build_gamma_basis();

// Shared immutable instance, safe for concurrent use.
const GammaBasis& dirac_basis();

// p_alpha gamma^alpha (index lowering through the metric).
Mat4c slash(const FourVector& p, const GammaBasis& g);

// Taylor series of exp(M), summed until the largest entry of the current
// term drops below tol. Oracle for all closed-form exponentials.
Mat4c exp_series(const Mat4c& m, double tol = 1e-16);

// cosh(b) + sinh(b) n.sigma^{0k}, Hermitian; vector-rep speed is tanh(2b).
Mat4c exp_boost_closed(const Vec3& direction, double b, const GammaBasis& g);

// cos(theta/2) + sin(theta/2) a.sigma^{kl}, unitary; period 4*pi in theta.
Mat4c exp_rotation_closed(const Vec3& axis, double theta, const GammaBasis& g);

// Lorentz matrix of a spinor transform:
//   Lambda^mu_nu = 1/4 Re Tr(gamma^mu S gamma_nu S^{-1}),
// a homomorphism with vector_rep(W) p = p for little-group elements.
Mat4d vector_rep(const Mat4c& s, const GammaBasis& g, double imag_tol = 1e-9);

}  // namespace spingroup
