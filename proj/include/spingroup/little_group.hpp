#pragma once

#include "spingroup/bispinor.hpp"
#include "spingroup/clifford.hpp"
#include "spingroup/spin_tensor.hpp"

namespace spingroup {

// Generator data of a little-group element for momentum p and an arbitrary
// unit pseudovector axis: same algebra as SpinTensor (w1.w2 = 0,
// w2^2 - w1^2 = 1), with the generating inputs kept for provenance.
struct AxisTensor {
  Vec3 w1;
  Vec3 w2;
  Vec3 rest_axis;  // the generating unit pseudovector
  FourMomentum p;
};

AxisTensor axis_tensor(const FourMomentum& p, const Vec3& unit_axis);

// W(phi) = cos(phi/2) + G sin(phi/2) with G = w1.sigma^{0k} + w2.sigma^{kl},
// G^2 = -1. Preserves the momentum p in the vector representation.
struct LittleGroupElement {
  Mat4c w;
  double phi;
  AxisTensor axis;
};

LittleGroupElement element(const AxisTensor& axis, double phi,
                           const GammaBasis& g);

// Component of p perpendicular to w2.
Vec3 p_perp(const FourMomentum& p, const AxisTensor& axis);

enum class FactorOrder {
  kBoostThenRotation,  // W = H * R
  kRotationThenBoost,  // W = R * H
};

struct Factorization {
  Mat4c boost_factor;     // Hermitian
  Mat4c rotation_factor;  // unitary
  FactorOrder order;
  double rotation_angle_2r;
  double boost_param;  // |u| = tanh b of the Hermitian factor
  double boost_beta;   // physical speed, tanh 2b = 2|u|/(1+|u|^2)
  Vec3 boost_direction;
};

// Closed-form factorization, evaluated tan-free in sin(phi/2), cos(phi/2)
// so phi = pi is regular. Boost sign variant: "+" for boost-then-rotation,
// "-" for rotation-then-boost; the rotation factor is shared.
Factorization factor(const LittleGroupElement& el, FactorOrder order,
                     const GammaBasis& g);

// Numeric polar decomposition W = H U (or U H'), the oracle for factor().
Factorization polar_factor(const LittleGroupElement& el, FactorOrder order,
                           const GammaBasis& g);

// Rotation angle 2r = 2 arctan(|w2| tan(phi/2)), continuity-tracked so it
// is monotone in phi and 2r(2 pi) = 2 pi.
double rotation_angle(const AxisTensor& axis, double phi);

// Principal rotation angle of a unitary factor about axis w2hat,
// in (-2 pi, 2 pi].
double rotation_angle_from_unitary(const Mat4c& u, const Vec3& w2hat,
                                   const GammaBasis& g);

struct BoostSpeed {
  double u_mag;  // tanh b
  double beta;   // tanh 2b
};

// Boost magnitude of the Hermitian factor; both sign variants share it.
BoostSpeed boost_speed(const AxisTensor& axis, const FourMomentum& p,
                       double phi);

// Little-group element with the axis taken as the spin axis itself; the
// one-parameter subgroup that also preserves the spin operator.
LittleGroupElement spin_group_element(const FourMomentum& p,
                                      const RestSpinAxis& axis, double phi,
                                      const GammaBasis& g);

// ||W(phi1) W(phi2) - W(phi1 + phi2)||, the one-parameter group law.
double closure_check(const FourMomentum& p, const RestSpinAxis& axis,
                     double phi1, double phi2, const GammaBasis& g);

namespace detail {
// Same as factor() but with an explicit sign for the p_perp term; used by
// the harness fault-injection smoke test. sign_scale = +1 is faithful.
Factorization factor_with_sign(const LittleGroupElement& el, FactorOrder order,
                               const GammaBasis& g, double sign_scale,
                               bool check_product = true);
}  // namespace detail

}  // namespace spingroup
