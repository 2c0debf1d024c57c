#pragma once

#include <complex>
#include <iosfwd>
#include <vector>

#include "spingroup/clifford.hpp"
#include "spingroup/kinematics.hpp"

namespace spingroup {

// One phi grid point of a spin-group parameter sweep.
struct SweepRow {
  double phi;
  double rot2r;
  double u;
  double beta;
  Vec3 bdir;
  cplx phase;
};

// Uniform grid on [0, phi_max], steps + 1 rows including both endpoints.
std::vector<SweepRow> sweep_rows(const FourMomentum& p,
                                 const RestSpinAxis& axis, double phi_max,
                                 int steps, const GammaBasis& g);

// CSV with header phi,rot2r,u,beta,bdir_x,bdir_y,bdir_z,phase_re,phase_im,
// 17 significant digits.
void write_sweep_csv(std::ostream& os, const std::vector<SweepRow>& rows);

}  // namespace spingroup
