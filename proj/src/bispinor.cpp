#include "spingroup/bispinor.hpp"

#include <stdexcept>

namespace spingroup {

Vec4c rest_bispinor(const RestSpinAxis& axis, const GammaBasis& g) {
  const cplx i(0.0, 1.0);
  const Mat4c sigma_rest = i * g.rotation_generator(axis.axis());
  const Mat4c proj = 0.25 * (Mat4c::Identity() + g.gamma[0]) *
                     (Mat4c::Identity() + sigma_rest);
  for (int seed = 0; seed < 4; ++seed) {
    Vec4c v = proj * Vec4c::Unit(seed);
    const double n = v.norm();
    if (n < 1e-8) continue;
    v /= n;
    // phase gauge: largest-modulus component real and non-negative
    int imax = 0;
    for (int k = 1; k < 4; ++k)
      if (std::abs(v[k]) > std::abs(v[imax])) imax = k;
    v *= std::conj(v[imax]) / std::abs(v[imax]);
    return v;
  }
  throw std::runtime_error("rest_bispinor: projector annihilated every seed");
}

Vec4c boost_bispinor(const Vec4c& psi0, const FourMomentum& p,
                     const GammaBasis& g) {
  return exp_boost_closed(p.direction(), p.half_rapidity(), g) * psi0;
}

double dirac_residual(const Vec4c& psi, const FourMomentum& p,
                      const GammaBasis& g) {
  const Mat4c op = slash(p.four_vector(), g) - p.mass() * Mat4c::Identity();
  return (op * psi).norm();
}

double spin_eigen_residual(const Vec4c& psi, const SpinTensor& s,
                           const GammaBasis& g) {
  return ((spin_operator(s, g) - Mat4c::Identity()) * psi).norm();
}

PhaseResult extract_phase(const Mat4c& w, const Vec4c& psi) {
  const double n2 = psi.squaredNorm();
  if (n2 == 0.0) throw std::invalid_argument("extract_phase: zero bispinor");
  const Vec4c wpsi = w * psi;
  const cplx phase = psi.dot(wpsi) / n2;
  const double residual = (wpsi - phase * psi).norm() / std::sqrt(n2);
  return {phase, residual};
}

}  // namespace spingroup
