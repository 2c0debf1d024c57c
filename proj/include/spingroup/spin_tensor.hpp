#pragma once

#include "spingroup/clifford.hpp"
#include "spingroup/kinematics.hpp"

namespace spingroup {

// Antisymmetric spin tensor of a moving fermion, stored as the 3-vector
// part s1 = (s_01, s_02, s_03) and the 3-pseudovector part
// s2 = (s_23, s_31, s_12). Satisfies s1.s2 = 0 and s2^2 - s1^2 = 1.
struct SpinTensor {
  Vec3 s1 = Vec3::Zero();
  Vec3 s2 = Vec3::Zero();
};

// Boost of the rest-frame axis:
//   s1 = (p x s)/m,   s2 = (p0/m) s - p (p.s)/(m (m + p0)).
SpinTensor boost_spin_axis(const FourMomentum& p, const RestSpinAxis& axis);

// Dimensionless spin projection operator
//   Sigma(s) = i (s1.sigma^{0k} + s2.sigma^{kl}),
// with spectrum {+1, +1, -1, -1} and Sigma^2 = 1.
Mat4c spin_operator(const SpinTensor& s, const GammaBasis& g);

// Boosted spin operator built by explicit conjugation of the rest-frame
// operator with the closed-form boost; independent oracle for
// spin_operator(boost_spin_axis(p, axis)).
Mat4c spin_tensor_by_conjugation(const FourMomentum& p,
                                 const RestSpinAxis& axis,
                                 const GammaBasis& g);

// Pauli-Lubanski pseudovector lambda^a = eps^{abmn} p_b s_{mn};
// Minkowski-orthogonal to p.
FourVector pauli_lubanski(const FourMomentum& p, const SpinTensor& s);

// p^a s_{ab} gamma^b; the zero matrix whenever s was built from the same p.
Mat4c momentum_spin_contraction(const FourMomentum& p, const SpinTensor& s,
                                const GammaBasis& g);

}  // namespace spingroup
