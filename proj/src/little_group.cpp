#include "spingroup/little_group.hpp"

#include <numbers>
#include <stdexcept>

namespace spingroup {

namespace {

constexpr double kPi = std::numbers::pi;

Vec3 boost_vector_u(const AxisTensor& axis, const FourMomentum& p, double phi,
                    double sign) {
  const double sh = std::sin(0.5 * phi);
  const double ch = std::cos(0.5 * phi);
  const double w2sq = axis.w2.squaredNorm();
  const double den = ch * ch + w2sq * sh * sh;
  const Vec3 pp = p_perp(p, axis);
  return (axis.w1 * sh * ch +
          sign * (pp / p.energy()) * w2sq * sh * sh) /
         den;
}

}  // namespace

AxisTensor axis_tensor(const FourMomentum& p, const Vec3& unit_axis) {
  const SpinTensor s = boost_spin_axis(p, RestSpinAxis(unit_axis));
  return {s.s1, s.s2, unit_axis, p};
}

LittleGroupElement element(const AxisTensor& axis, double phi,
                           const GammaBasis& g) {
  const Mat4c gen =
      g.boost_generator(axis.w1) + g.rotation_generator(axis.w2);
  if (max_abs(gen * gen + Mat4c::Identity()) > 1e-8)
    throw std::runtime_error("element: generator does not square to -1");
  const Mat4c w = std::cos(0.5 * phi) * Mat4c::Identity() +
                  std::sin(0.5 * phi) * gen;
  return {w, phi, axis};
}

Vec3 p_perp(const FourMomentum& p, const AxisTensor& axis) {
  const Vec3& pv = p.momentum();
  const Vec3& w2 = axis.w2;
  return pv - w2 * (w2.dot(pv) / w2.squaredNorm());
}

double rotation_angle(const AxisTensor& axis, double phi) {
  const double winding = std::floor(phi / (2.0 * kPi));
  const double phi_r = phi - 2.0 * kPi * winding;  // [0, 2 pi)
  const double w2n = axis.w2.norm();
  return 2.0 * kPi * winding +
         2.0 * std::atan2(w2n * std::sin(0.5 * phi_r), std::cos(0.5 * phi_r));
}

double rotation_angle_from_unitary(const Mat4c& u, const Vec3& w2hat,
                                   const GammaBasis& g) {
  const double cos_r = 0.25 * u.trace().real();
  // coefficient of w2hat.sigma^{kl}: Tr(sigma^{kl} sigma^{kl}) = -4
  double sin_r = 0.0;
  const Mat4c comps[3] = {g.sigma(2, 3), g.sigma(3, 1), g.sigma(1, 2)};
  for (int k = 0; k < 3; ++k)
    sin_r += -0.25 * (u * comps[k]).trace().real() * w2hat[k];
  return 2.0 * std::atan2(sin_r, cos_r);
}

BoostSpeed boost_speed(const AxisTensor& axis, const FourMomentum& p,
                       double phi) {
  const double u = boost_vector_u(axis, p, phi, +1.0).norm();
  return {u, 2.0 * u / (1.0 + u * u)};
}

namespace detail {

Factorization factor_with_sign(const LittleGroupElement& el, FactorOrder order,
                               const GammaBasis& g, double sign_scale,
                               bool check_product) {
  const double sh = std::sin(0.5 * el.phi);
  const double ch = std::cos(0.5 * el.phi);
  const double w2sq = el.axis.w2.squaredNorm();
  const double scale = std::sqrt(ch * ch + w2sq * sh * sh);

  const double sign =
      (order == FactorOrder::kBoostThenRotation ? +1.0 : -1.0) * sign_scale;
  const Vec3 u = boost_vector_u(el.axis, el.axis.p, el.phi, sign);

  Factorization f;
  f.order = order;
  f.boost_factor = scale * (Mat4c::Identity() + g.boost_generator(u));
  f.rotation_factor =
      (ch * Mat4c::Identity() + sh * g.rotation_generator(el.axis.w2)) / scale;
  f.rotation_angle_2r = rotation_angle(el.axis, el.phi);
  f.boost_param = u.norm();
  f.boost_beta = 2.0 * f.boost_param / (1.0 + f.boost_param * f.boost_param);
  f.boost_direction =
      f.boost_param > 0.0 ? Vec3(u / f.boost_param) : Vec3::Zero();

  if (check_product) {
    const Mat4c product = order == FactorOrder::kBoostThenRotation
                              ? Mat4c(f.boost_factor * f.rotation_factor)
                              : Mat4c(f.rotation_factor * f.boost_factor);
    if (max_abs(product - el.w) > 1e-8)
      throw std::runtime_error("factor: factors do not reproduce the element");
  }
  return f;
}

}  // namespace detail

Factorization factor(const LittleGroupElement& el, FactorOrder order,
                     const GammaBasis& g) {
  return detail::factor_with_sign(el, order, g, +1.0);
}

Factorization polar_factor(const LittleGroupElement& el, FactorOrder order,
                           const GammaBasis& g) {
  const Mat4c& w = el.w;
  const Mat4c gram = order == FactorOrder::kBoostThenRotation
                         ? Mat4c(w * w.adjoint())
                         : Mat4c(w.adjoint() * w);
  Eigen::SelfAdjointEigenSolver<Mat4c> es(gram);
  if (es.eigenvalues().minCoeff() <= 0.0)
    throw std::runtime_error("polar_factor: W W^dagger not positive definite");
  const Mat4c h = es.operatorSqrt();
  const Mat4c hinv = es.operatorInverseSqrt();

  Factorization f;
  f.order = order;
  f.boost_factor = h;
  f.rotation_factor = order == FactorOrder::kBoostThenRotation
                          ? Mat4c(hinv * w)
                          : Mat4c(w * hinv);

  // |u| and direction from the Hermitian factor: H = k (1 + u.sigma^{0k})
  const double k = 0.25 * h.trace().real();
  Vec3 ku;
  const Mat4c comps[3] = {g.sigma(0, 1), g.sigma(0, 2), g.sigma(0, 3)};
  for (int j = 0; j < 3; ++j)
    ku[j] = 0.25 * (h * comps[j]).trace().real();
  f.boost_param = ku.norm() / k;
  f.boost_beta = 2.0 * f.boost_param / (1.0 + f.boost_param * f.boost_param);
  f.boost_direction =
      ku.norm() > 0.0 ? Vec3(ku / ku.norm()) : Vec3::Zero();

  const Vec3 w2hat = el.axis.w2.normalized();
  f.rotation_angle_2r = rotation_angle_from_unitary(f.rotation_factor, w2hat, g);
  return f;
}

LittleGroupElement spin_group_element(const FourMomentum& p,
                                      const RestSpinAxis& axis, double phi,
                                      const GammaBasis& g) {
  return element(axis_tensor(p, axis.axis()), phi, g);
}

double closure_check(const FourMomentum& p, const RestSpinAxis& axis,
                     double phi1, double phi2, const GammaBasis& g) {
  const AxisTensor at = axis_tensor(p, axis.axis());
  const Mat4c w1 = element(at, phi1, g).w;
  const Mat4c w2 = element(at, phi2, g).w;
  const Mat4c w12 = element(at, phi1 + phi2, g).w;
  return max_abs(w1 * w2 - w12);
}

}  // namespace spingroup
