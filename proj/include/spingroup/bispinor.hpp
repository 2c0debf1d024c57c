#pragma once

#include "spingroup/clifford.hpp"
#include "spingroup/spin_tensor.hpp"

namespace spingroup {

// Rest-frame eigen-bispinor: gamma^0 psi = psi and Sigma(rest) psi = +psi.
// Built by projecting a fixed canonical seed, so the result is
// deterministic; normalized with the largest-modulus component made real
// and non-negative.
Vec4c rest_bispinor(const RestSpinAxis& axis, const GammaBasis& g);

// Applies the closed-form boost for momentum p. No renormalization: the
// boost factor is physical.
Vec4c boost_bispinor(const Vec4c& psi0, const FourMomentum& p,
                     const GammaBasis& g);

// ||(p_a gamma^a - m) psi||
double dirac_residual(const Vec4c& psi, const FourMomentum& p,
                      const GammaBasis& g);

// ||(Sigma(s) - 1) psi||
double spin_eigen_residual(const Vec4c& psi, const SpinTensor& s,
                           const GammaBasis& g);

struct PhaseResult {
  cplx phase;       // <psi|W|psi> / <psi|psi>
  double residual;  // ||W psi - phase psi|| / ||psi||
};

// Rayleigh-quotient phase extraction; residual ~ 0 certifies psi is an
// eigenvector of W with eigenvalue `phase`.
PhaseResult extract_phase(const Mat4c& w, const Vec4c& psi);

}  // namespace spingroup
