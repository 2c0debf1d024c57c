#pragma once

#include <Eigen/Dense>
#include <cmath>
#include <stdexcept>

namespace spingroup {

using Vec3 = Eigen::Vector3d;

// Contravariant components (t, x), units with c = 1.
struct FourVector {
  double t = 0.0;
  Vec3 x = Vec3::Zero();

  double dot(const FourVector& o) const { return t * o.t - x.dot(o.x); }
  double norm() const { return std::sqrt(t * t + x.squaredNorm()); }
};

// On-shell timelike momentum. The energy is always derived from (m, p),
// so off-shell states cannot be constructed.
class FourMomentum {
 public:
  FourMomentum(double mass, const Vec3& p) : m_(mass), p_(p) {
    if (!(mass > 0.0))
      throw std::invalid_argument("FourMomentum: mass must be positive");
    if (!p.allFinite())
      throw std::invalid_argument("FourMomentum: non-finite momentum");
    e_ = std::sqrt(m_ * m_ + p_.squaredNorm());
  }

  static FourMomentum at_rest(double mass) {
    return FourMomentum(mass, Vec3::Zero());
  }

  double mass() const { return m_; }
  double energy() const { return e_; }
  const Vec3& momentum() const { return p_; }
  FourVector four_vector() const { return {e_, p_}; }

  // Spinor boost parameter b with tanh(2b) = |p|/p0.
  double half_rapidity() const { return 0.5 * std::atanh(p_.norm() / e_); }

  Vec3 direction() const {
    double n = p_.norm();
    return n > 0.0 ? Vec3(p_ / n) : Vec3(0.0, 0.0, 1.0);
  }

 private:
  double m_, e_;
  Vec3 p_;
};

// Unit 3-pseudovector fixing the rest-frame spin projection direction.
class RestSpinAxis {
 public:
  explicit RestSpinAxis(const Vec3& axis, double tol = 1e-9) : s_(axis) {
    if (std::abs(axis.norm() - 1.0) > tol)
      throw std::invalid_argument("RestSpinAxis: axis must be a unit vector");
  }

  static RestSpinAxis normalized(const Vec3& v) {
    double n = v.norm();
    if (n == 0.0) throw std::invalid_argument("RestSpinAxis: zero vector");
    return RestSpinAxis(Vec3(v / n));
  }

  const Vec3& axis() const { return s_; }

 private:
  Vec3 s_;
};

}  // namespace spingroup
