#include "spingroup/spin_tensor.hpp"

namespace spingroup {

namespace {

// Full antisymmetric component array with lower indices.
void fill_components(const SpinTensor& s, double out[4][4]) {
  for (int a = 0; a < 4; ++a)
    for (int b = 0; b < 4; ++b) out[a][b] = 0.0;
  for (int k = 0; k < 3; ++k) {
    out[0][k + 1] = s.s1[k];
    out[k + 1][0] = -s.s1[k];
  }
  out[2][3] = s.s2.x(); out[3][2] = -s.s2.x();
  out[3][1] = s.s2.y(); out[1][3] = -s.s2.y();
  out[1][2] = s.s2.z(); out[2][1] = -s.s2.z();
}

}  // namespace

SpinTensor boost_spin_axis(const FourMomentum& p, const RestSpinAxis& axis) {
  const Vec3& s = axis.axis();
  const Vec3& pv = p.momentum();
  const double m = p.mass();
  const double p0 = p.energy();
  SpinTensor out;
  out.s1 = pv.cross(s) / m;
  out.s2 = (p0 / m) * s - pv * (pv.dot(s) / (m * (m + p0)));
  return out;
}

Mat4c spin_operator(const SpinTensor& s, const GammaBasis& g) {
  const cplx i(0.0, 1.0);
  return i * (g.boost_generator(s.s1) + g.rotation_generator(s.s2));
}

Mat4c spin_tensor_by_conjugation(const FourMomentum& p,
                                 const RestSpinAxis& axis,
                                 const GammaBasis& g) {
  const cplx i(0.0, 1.0);
  const Mat4c rest = i * g.rotation_generator(axis.axis());
  const Mat4c boost = exp_boost_closed(p.direction(), p.half_rapidity(), g);
  const Mat4c boost_inv =
      exp_boost_closed(p.direction(), -p.half_rapidity(), g);
  return boost * rest * boost_inv;
}

FourVector pauli_lubanski(const FourMomentum& p, const SpinTensor& s) {
  double comp[4][4];
  fill_components(s, comp);
  const FourVector pv = p.four_vector();
  const double p_cov[4] = {pv.t, -pv.x.x(), -pv.x.y(), -pv.x.z()};
  double lambda[4] = {0, 0, 0, 0};
  for (int a = 0; a < 4; ++a)
    for (int b = 0; b < 4; ++b)
      for (int m = 0; m < 4; ++m)
        for (int n = 0; n < 4; ++n) {
          double eps = GammaBasis::levi_civita(a, b, m, n);
          if (eps != 0.0) lambda[a] += eps * p_cov[b] * comp[m][n];
        }
  return {lambda[0], Vec3(lambda[1], lambda[2], lambda[3])};
}

Mat4c momentum_spin_contraction(const FourMomentum& p, const SpinTensor& s,
                                const GammaBasis& g) {
  double comp[4][4];
  fill_components(s, comp);
  const FourVector pv = p.four_vector();
  const double p_con[4] = {pv.t, pv.x.x(), pv.x.y(), pv.x.z()};
  Mat4c out = Mat4c::Zero();
  for (int a = 0; a < 4; ++a)
    for (int b = 0; b < 4; ++b)
      if (comp[a][b] != 0.0) out += p_con[a] * comp[a][b] * g.gamma[b];
  return out;
}

}  // namespace spingroup
