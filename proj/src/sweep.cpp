#include "spingroup/sweep.hpp"

#include <ostream>
#include <stdexcept>

#include "spingroup/bispinor.hpp"
#include "spingroup/little_group.hpp"

namespace spingroup {

std::vector<SweepRow> sweep_rows(const FourMomentum& p,
                                 const RestSpinAxis& axis, double phi_max,
                                 int steps, const GammaBasis& g) {
  if (steps < 2) throw std::invalid_argument("sweep_rows: steps must be >= 2");
  const AxisTensor at = axis_tensor(p, axis.axis());
  const Vec4c psi = boost_bispinor(rest_bispinor(axis, g), p, g);
  std::vector<SweepRow> rows;
  rows.reserve(steps + 1);
  for (int i = 0; i <= steps; ++i) {
    const double phi = phi_max * static_cast<double>(i) / steps;
    const LittleGroupElement el = element(at, phi, g);
    const Factorization f = factor(el, FactorOrder::kBoostThenRotation, g);
    const PhaseResult ph = extract_phase(el.w, psi);
    rows.push_back({phi, f.rotation_angle_2r, f.boost_param, f.boost_beta,
                    f.boost_direction, ph.phase});
  }
  return rows;
}

void write_sweep_csv(std::ostream& os, const std::vector<SweepRow>& rows) {
  os << "phi,rot2r,u,beta,bdir_x,bdir_y,bdir_z,phase_re,phase_im\n";
  os.precision(17);
  for (const SweepRow& r : rows)
    os << r.phi << ',' << r.rot2r << ',' << r.u << ',' << r.beta << ','
       << r.bdir.x() << ',' << r.bdir.y() << ',' << r.bdir.z() << ','
       << r.phase.real() << ',' << r.phase.imag() << '\n';
}

}  // namespace spingroup
