#include "spingroup/clifford.hpp"

#include <stdexcept>

namespace spingroup {

namespace {

Eigen::Matrix2cd pauli(int k) {
  const cplx i(0.0, 1.0);
  Eigen::Matrix2cd m;
  switch (k) {
    case 1: m << 0, 1, 1, 0; break;
    case 2: m << 0, -i, i, 0; break;
    default: m << 1, 0, 0, -1; break;
  }
  return m;
}

}  // namespace

double GammaBasis::levi_civita(int a, int b, int c, int d) {
  const int idx[4] = {a, b, c, d};
  double sign = 1.0;
  for (int i = 0; i < 4; ++i)
    for (int j = i + 1; j < 4; ++j) {
      int diff = idx[j] - idx[i];
      if (diff == 0) return 0.0;
      if (diff < 0) sign = -sign;
    }
  return sign;
}

Mat4c GammaBasis::boost_generator(const Vec3& a) const {
  return a.x() * sigma_[0][1] + a.y() * sigma_[0][2] + a.z() * sigma_[0][3];
}

Mat4c GammaBasis::rotation_generator(const Vec3& a) const {
  return a.x() * sigma_[2][3] + a.y() * sigma_[3][1] + a.z() * sigma_[1][2];
}

GammaBasis build_gamma_basis() {
  GammaBasis g;
  g.gamma[0] = Mat4c::Zero();
  g.gamma[0].diagonal() << 1, 1, -1, -1;
  for (int k = 1; k <= 3; ++k) {
    Eigen::Matrix2cd s = pauli(k);
    Mat4c m = Mat4c::Zero();
    m.block<2, 2>(0, 2) = s;
    m.block<2, 2>(2, 0) = -s;
    g.gamma[k] = m;
  }
  for (int a = 0; a < 4; ++a)
    for (int b = 0; b < 4; ++b)
      g.sigma_[a][b] =
          0.5 * (g.gamma[a] * g.gamma[b] - g.gamma[b] * g.gamma[a]);
  return g;
}

const GammaBasis& dirac_basis() {
  static const GammaBasis g = build_gamma_basis();
  return g;
}

Mat4c slash(const FourVector& p, const GammaBasis& g) {
  Mat4c m = p.t * g.gamma[0];
  for (int k = 0; k < 3; ++k) m -= p.x[k] * g.gamma[k + 1];
  return m;
}

Mat4c exp_series(const Mat4c& m, double tol) {
  if (!(tol > 0.0)) throw std::invalid_argument("exp_series: tol must be > 0");
  Mat4c sum = Mat4c::Identity();
  Mat4c term = Mat4c::Identity();
  for (int k = 1; k <= 200; ++k) {
    term = (term * m) / static_cast<double>(k);
    sum += term;
    if (max_abs(term) < tol) return sum;
  }
  throw std::runtime_error("exp_series: no convergence within 200 terms");
}

Mat4c exp_boost_closed(const Vec3& direction, double b, const GammaBasis& g) {
  if (std::abs(direction.norm() - 1.0) > 1e-9)
    throw std::invalid_argument("exp_boost_closed: direction must be unit");
  return std::cosh(b) * Mat4c::Identity() +
         std::sinh(b) * g.boost_generator(direction);
}

Mat4c exp_rotation_closed(const Vec3& axis, double theta, const GammaBasis& g) {
  if (std::abs(axis.norm() - 1.0) > 1e-9)
    throw std::invalid_argument("exp_rotation_closed: axis must be unit");
  return std::cos(0.5 * theta) * Mat4c::Identity() +
         std::sin(0.5 * theta) * g.rotation_generator(axis);
}

Mat4d vector_rep(const Mat4c& s, const GammaBasis& g, double imag_tol) {
  if (std::abs(s.determinant()) < 1e-12)
    throw std::invalid_argument("vector_rep: singular transform");
  const Mat4c sinv = s.inverse();
  Mat4d lambda;
  double worst_imag = 0.0;
  for (int mu = 0; mu < 4; ++mu)
    for (int nu = 0; nu < 4; ++nu) {
      // gamma_nu = g_{nu nu} gamma^nu (diagonal metric)
      const cplx tr =
          0.25 * GammaBasis::metric(nu, nu) *
          (g.gamma[mu] * s * g.gamma[nu] * sinv).trace();
      worst_imag = std::max(worst_imag, std::abs(tr.imag()));
      lambda(mu, nu) = tr.real();
    }
  if (worst_imag > imag_tol)
    throw std::runtime_error(
        "vector_rep: imaginary residue in trace extraction");
  return lambda;
}

}  // namespace spingroup
