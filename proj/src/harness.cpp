#include "spingroup/harness.hpp"

#include <cmath>
#include <functional>
#include <limits>
#include <numbers>
#include <sstream>

#include "spingroup/bispinor.hpp"
#include "spingroup/clifford.hpp"
#include "spingroup/little_group.hpp"
#include "spingroup/spin_tensor.hpp"

#include <json.hpp>

namespace spingroup {

namespace {

constexpr double kPi = std::numbers::pi;
constexpr const char* kVersion = "spingroup 0.1.0";

std::string describe(const FourMomentum& p, const Vec3& axis, double phi,
                     std::uint64_t index) {
  std::ostringstream os;
  os.precision(17);
  os << "draw=" << index << " p=(" << p.momentum().x() << ","
     << p.momentum().y() << "," << p.momentum().z() << ") m=" << p.mass()
     << " axis=(" << axis.x() << "," << axis.y() << "," << axis.z() << ")"
     << " phi=" << phi;
  return os.str();
}

struct PropertyRunner {
  const SuiteConfig& cfg;
  std::vector<PropertyResult> results;

  using Eval = std::function<double(DrawRng&, std::uint64_t, std::string&)>;

  void add(const std::string& id, const std::string& anchor, double threshold,
           const std::string& mode, int trials, const Eval& eval) {
    PropertyResult r;
    r.id = id;
    r.anchor = anchor;
    r.threshold = threshold;
    r.mode = mode;
    r.trials = trials;
    const std::uint64_t stream = fnv1a(id);
    bool worst_set = false;
    double worst = 0.0;
    for (int i = 0; i < trials; ++i) {
      DrawRng rng(cfg.seed, stream, static_cast<std::uint64_t>(i));
      std::string desc;
      const double res = eval(rng, static_cast<std::uint64_t>(i), desc);
      const bool is_worse =
          !worst_set || (mode == "min_ge" ? res < worst : res > worst);
      if (is_worse) {
        worst_set = true;
        worst = res;
        r.worst_case = desc;
      }
    }
    r.max_residual = worst;
    r.pass = mode == "min_ge" ? worst >= threshold : worst <= threshold;
    results.push_back(r);
  }
};

}  // namespace

Vec3 DrawRng::unit_vector() {
  const double z = uniform(-1.0, 1.0);
  const double a = uniform(0.0, 2.0 * kPi);
  const double r = std::sqrt(std::max(0.0, 1.0 - z * z));
  return {r * std::cos(a), r * std::sin(a), z};
}

std::uint64_t fnv1a(const std::string& s) {
  std::uint64_t h = 0xcbf29ce484222325ULL;
  for (unsigned char c : s) {
    h ^= c;
    h *= 0x100000001b3ULL;
  }
  return h;
}

void SuiteConfig::validate() const {
  if (trials < 1) throw std::invalid_argument("SuiteConfig: trials must be >= 1");
  if (!(tol_strict > 0.0) || !(tol_accum > 0.0))
    throw std::invalid_argument("SuiteConfig: tolerances must be positive");
  if (!(mass > 0.0)) throw std::invalid_argument("SuiteConfig: mass must be positive");
  if (p_max_over_m < 0.0)
    throw std::invalid_argument("SuiteConfig: p_max_over_m must be >= 0");
}

FourMomentum random_momentum(DrawRng& rng, const SuiteConfig& cfg) {
  const double pn = rng.uniform(0.0, cfg.p_max_over_m * cfg.mass);
  return FourMomentum(cfg.mass, pn * rng.unit_vector());
}

SuiteReport run_suite(const SuiteConfig& cfg) {
  cfg.validate();
  const GammaBasis& g = dirac_basis();
  const Mat4c id4 = Mat4c::Identity();
  PropertyRunner run{cfg, {}};
  const int n = cfg.trials;

  // ---- clifford_core ----
  run.add("gamma-anticommutation", "Eq1-2-algebra", 1e-12, "max_le", 1,
          [&](DrawRng&, std::uint64_t, std::string&) {
            double worst = 0.0;
            for (int a = 0; a < 4; ++a)
              for (int b = 0; b < 4; ++b)
                worst = std::max(
                    worst, max_abs(g.gamma[a] * g.gamma[b] +
                                   g.gamma[b] * g.gamma[a] -
                                   2.0 * GammaBasis::metric(a, b) * id4));
            return worst;
          });

  run.add("sigma-definition", "Eq2-sigma", 1e-12, "max_le", 1,
          [&](DrawRng&, std::uint64_t, std::string&) {
            double worst = 0.0;
            for (int a = 0; a < 4; ++a)
              for (int b = 0; b < 4; ++b)
                worst = std::max(
                    worst, max_abs(g.sigma(a, b) -
                                   0.5 * (g.gamma[a] * g.gamma[b] -
                                          g.gamma[b] * g.gamma[a])));
            // hermiticity of the representation
            worst = std::max(worst, max_abs(g.gamma[0].adjoint() - g.gamma[0]));
            for (int k = 1; k < 4; ++k)
              worst = std::max(worst,
                               max_abs(g.gamma[k].adjoint() + g.gamma[k]));
            return worst;
          });

  run.add("exp-boost-closed-vs-series", "Eq7", cfg.tol_accum, "max_le", n,
          [&](DrawRng& rng, std::uint64_t i, std::string& desc) {
            const Vec3 dir = rng.unit_vector();
            const double b = rng.uniform(0.0, 1.5);
            std::ostringstream os;
            os << "draw=" << i << " dir=(" << dir.transpose() << ") b=" << b;
            desc = os.str();
            return max_abs(exp_boost_closed(dir, b, g) -
                           exp_series(b * g.boost_generator(dir)));
          });

  run.add("exp-rotation-closed-vs-series", "Eq30-primitive", cfg.tol_accum,
          "max_le", n, [&](DrawRng& rng, std::uint64_t i, std::string& desc) {
            const Vec3 axis = rng.unit_vector();
            const double th = rng.uniform(0.0, 4.0 * kPi);
            std::ostringstream os;
            os << "draw=" << i << " axis=(" << axis.transpose()
               << ") theta=" << th;
            desc = os.str();
            return max_abs(
                exp_rotation_closed(axis, th, g) -
                exp_series(0.5 * th * g.rotation_generator(axis)));
          });

  run.add("vector-rep-homomorphism", "plumbing", cfg.tol_accum, "max_le", n,
          [&](DrawRng& rng, std::uint64_t i, std::string& desc) {
            const Mat4c s1 =
                exp_boost_closed(rng.unit_vector(), rng.uniform(0.0, 1.0), g);
            const Mat4c s2 = exp_rotation_closed(rng.unit_vector(),
                                                 rng.uniform(0.0, 2.0 * kPi), g);
            desc = "draw=" + std::to_string(i);
            return max_abs(vector_rep(Mat4c(s1 * s2), g) -
                           Mat4d(vector_rep(s1, g) * vector_rep(s2, g)));
          });

  run.add("vector-rep-metric", "plumbing", cfg.tol_accum, "max_le", n,
          [&](DrawRng& rng, std::uint64_t i, std::string& desc) {
            const Mat4c s =
                exp_boost_closed(rng.unit_vector(), rng.uniform(0.0, 1.0), g) *
                exp_rotation_closed(rng.unit_vector(),
                                    rng.uniform(0.0, 2.0 * kPi), g);
            Mat4d metric = Mat4d::Zero();
            metric.diagonal() << 1, -1, -1, -1;
            const Mat4d lam = vector_rep(s, g);
            desc = "draw=" + std::to_string(i);
            return max_abs(Mat4d(lam.transpose() * metric * lam) - metric);
          });

  run.add("boost-speed-tanh-2b", "Eq8", cfg.tol_accum, "max_le", n,
          [&](DrawRng& rng, std::uint64_t i, std::string& desc) {
            const Vec3 dir = rng.unit_vector();
            const double b = rng.uniform(0.0, 1.2);
            const double beta = std::tanh(2.0 * b);
            const double gamma_f = 1.0 / std::sqrt(1.0 - beta * beta);
            const Mat4d lam = vector_rep(exp_boost_closed(dir, b, g), g);
            Eigen::Vector4d rest(cfg.mass, 0, 0, 0);
            Eigen::Vector4d expect;
            expect << gamma_f * cfg.mass, gamma_f * beta * cfg.mass * dir;
            std::ostringstream os;
            os << "draw=" << i << " dir=(" << dir.transpose() << ") b=" << b;
            desc = os.str();
            return (lam * rest - expect).cwiseAbs().maxCoeff();
          });

  // ---- spin_tensor ----
  run.add("spin-tensor-invariants", "Eq15-16", cfg.tol_strict, "max_le", n,
          [&](DrawRng& rng, std::uint64_t i, std::string& desc) {
            const FourMomentum p = random_momentum(rng, cfg);
            const Vec3 ax = rng.unit_vector();
            const SpinTensor s = boost_spin_axis(p, RestSpinAxis(ax));
            desc = describe(p, ax, 0.0, i);
            return std::max(std::abs(s.s1.dot(s.s2)),
                            std::abs(s.s2.squaredNorm() -
                                     s.s1.squaredNorm() - 1.0));
          });

  run.add("spin-operator-square", "Eq12-Eq21-remark", cfg.tol_strict, "max_le",
          n, [&](DrawRng& rng, std::uint64_t i, std::string& desc) {
            const FourMomentum p = random_momentum(rng, cfg);
            const Vec3 ax = rng.unit_vector();
            const Mat4c sig =
                spin_operator(boost_spin_axis(p, RestSpinAxis(ax)), g);
            desc = describe(p, ax, 0.0, i);
            return max_abs(sig * sig - id4);
          });

  run.add("spin-operator-conjugation", "Eq10-vs-Eq12-16", cfg.tol_accum,
          "max_le", n, [&](DrawRng& rng, std::uint64_t i, std::string& desc) {
            const FourMomentum p = random_momentum(rng, cfg);
            const Vec3 ax = rng.unit_vector();
            const RestSpinAxis axis(ax);
            desc = describe(p, ax, 0.0, i);
            return max_abs(spin_operator(boost_spin_axis(p, axis), g) -
                           spin_tensor_by_conjugation(p, axis, g));
          });

  run.add("Eq20-commutator", "Eq20", cfg.tol_strict, "max_le", n,
          [&](DrawRng& rng, std::uint64_t i, std::string& desc) {
            const FourMomentum p = random_momentum(rng, cfg);
            const Vec3 ax = rng.unit_vector();
            const SpinTensor s = boost_spin_axis(p, RestSpinAxis(ax));
            const Mat4c contraction = momentum_spin_contraction(p, s, g);
            const Mat4c pg = slash(p.four_vector(), g);
            // 1/2 s_{mu nu} sigma^{mu nu} = -i Sigma(s)
            const Mat4c half_s = -cplx(0, 1) * spin_operator(s, g);
            desc = describe(p, ax, 0.0, i);
            // the commutator route equals twice the contraction
            return std::max(
                max_abs(contraction),
                max_abs(pg * half_s - half_s * pg - 2.0 * contraction));
          });

  run.add("Eq20-mismatch-control", "Eq20", 1e-2, "min_ge", n,
          [&](DrawRng& rng, std::uint64_t i, std::string& desc) {
            const FourMomentum p = random_momentum(rng, cfg);
            const Vec3 ax = rng.unit_vector();
            const SpinTensor s = boost_spin_axis(p, RestSpinAxis(ax));
            const FourMomentum mismatched(
                p.mass(), p.momentum() + Vec3(p.mass(), 0, 0));
            desc = describe(p, ax, 0.0, i);
            return max_abs(momentum_spin_contraction(mismatched, s, g));
          });

  run.add("pauli-lubanski-orthogonality", "Eq11", cfg.tol_strict, "max_le", n,
          [&](DrawRng& rng, std::uint64_t i, std::string& desc) {
            const FourMomentum p = random_momentum(rng, cfg);
            const Vec3 ax = rng.unit_vector();
            const FourVector lam =
                pauli_lubanski(p, boost_spin_axis(p, RestSpinAxis(ax)));
            desc = describe(p, ax, 0.0, i);
            return std::abs(lam.dot(p.four_vector()));
          });

  run.add("pauli-lubanski-invariant", "Eq11", cfg.tol_accum, "max_le", n,
          [&](DrawRng& rng, std::uint64_t i, std::string& desc) {
            const FourMomentum p = random_momentum(rng, cfg);
            const Vec3 ax = rng.unit_vector();
            const RestSpinAxis axis(ax);
            const FourVector lam = pauli_lubanski(p, boost_spin_axis(p, axis));
            const FourMomentum rest = FourMomentum::at_rest(p.mass());
            const FourVector lam0 =
                pauli_lubanski(rest, boost_spin_axis(rest, axis));
            desc = describe(p, ax, 0.0, i);
            return std::abs(lam.dot(lam) - lam0.dot(lam0));
          });

  // ---- bispinor ----
  run.add("dirac-residual", "Eq5", cfg.tol_strict, "max_le", n,
          [&](DrawRng& rng, std::uint64_t i, std::string& desc) {
            const FourMomentum p = random_momentum(rng, cfg);
            const Vec3 ax = rng.unit_vector();
            const RestSpinAxis axis(ax);
            const Vec4c psi = boost_bispinor(rest_bispinor(axis, g), p, g);
            desc = describe(p, ax, 0.0, i);
            return dirac_residual(psi, p, g);
          });

  run.add("spin-eigen-residual", "Eq6", cfg.tol_strict, "max_le", n,
          [&](DrawRng& rng, std::uint64_t i, std::string& desc) {
            const FourMomentum p = random_momentum(rng, cfg);
            const Vec3 ax = rng.unit_vector();
            const RestSpinAxis axis(ax);
            const Vec4c psi = boost_bispinor(rest_bispinor(axis, g), p, g);
            desc = describe(p, ax, 0.0, i);
            return spin_eigen_residual(psi, boost_spin_axis(p, axis), g);
          });

  run.add("Eq23-phase-value", "Eq23", cfg.tol_accum, "max_le", n,
          [&](DrawRng& rng, std::uint64_t i, std::string& desc) {
            const FourMomentum p = random_momentum(rng, cfg);
            const Vec3 ax = rng.unit_vector();
            const RestSpinAxis axis(ax);
            const Vec4c psi = boost_bispinor(rest_bispinor(axis, g), p, g);
            const double grid[] = {0.0, 0.5 * kPi, kPi, 2.0 * kPi,
                                   3.0 * kPi, 4.0 * kPi};
            double worst = 0.0;
            for (double phi : grid) {
              const Mat4c w = spin_group_element(p, axis, phi, g).w;
              const PhaseResult pr = extract_phase(w, psi);
              const cplx expected = std::exp(cplx(0.0, -0.5 * phi));
              worst = std::max(worst, std::abs(pr.phase - expected));
            }
            desc = describe(p, ax, 0.0, i);
            return worst;
          });

  run.add("Eq23-eigen-residual", "Eq23", cfg.tol_strict, "max_le", n,
          [&](DrawRng& rng, std::uint64_t i, std::string& desc) {
            const FourMomentum p = random_momentum(rng, cfg);
            const Vec3 ax = rng.unit_vector();
            const RestSpinAxis axis(ax);
            const Vec4c psi = boost_bispinor(rest_bispinor(axis, g), p, g);
            const double phi = rng.uniform(0.0, 4.0 * kPi);
            desc = describe(p, ax, phi, i);
            return extract_phase(spin_group_element(p, axis, phi, g).w, psi)
                .residual;
          });

  run.add("rest-bispinor-determinism", "plumbing", 0.0, "max_le", 1,
          [&](DrawRng&, std::uint64_t, std::string&) {
            const RestSpinAxis axis(Vec3(0.36, -0.48, 0.8).normalized());
            const Vec4c a = rest_bispinor(axis, g);
            const Vec4c b = rest_bispinor(axis, g);
            return a == b ? 0.0 : 1.0;
          });

  // ---- little_group ----
  run.add("Eq22-momentum-invariance", "Eq22", cfg.tol_accum, "max_le", n,
          [&](DrawRng& rng, std::uint64_t i, std::string& desc) {
            const FourMomentum p = random_momentum(rng, cfg);
            const Vec3 ax = rng.unit_vector();  // arbitrary axis, not spin
            const double phi = rng.uniform(0.0, 4.0 * kPi);
            const LittleGroupElement el =
                element(axis_tensor(p, ax), phi, g);
            const Mat4d lam = vector_rep(el.w, g);
            Eigen::Vector4d pvec;
            pvec << p.energy(), p.momentum();
            desc = describe(p, ax, phi, i);
            return (lam * pvec - pvec).norm() / pvec.norm();
          });

  run.add("Eq21-spin-invariance", "Eq21", cfg.tol_strict, "max_le", n,
          [&](DrawRng& rng, std::uint64_t i, std::string& desc) {
            const FourMomentum p = random_momentum(rng, cfg);
            const Vec3 ax = rng.unit_vector();
            const RestSpinAxis axis(ax);
            const double phi = rng.uniform(0.0, 4.0 * kPi);
            const Mat4c w = spin_group_element(p, axis, phi, g).w;
            const Mat4c sig = spin_operator(boost_spin_axis(p, axis), g);
            desc = describe(p, ax, phi, i);
            return max_abs(w * sig * w.inverse() - sig);
          });

  run.add("Eq21-spin-control", "Eq21", 1e-2, "min_ge", n,
          [&](DrawRng& rng, std::uint64_t i, std::string& desc) {
            // axis orthogonal to the spin axis, phi = pi/2, |p| >= m/2
            const Vec3 sx = rng.unit_vector();
            Vec3 perp = sx.cross(rng.unit_vector());
            while (perp.norm() < 1e-6) perp = sx.cross(rng.unit_vector());
            perp.normalize();
            const double pn =
                rng.uniform(0.5 * cfg.mass, cfg.p_max_over_m * cfg.mass);
            const FourMomentum p(cfg.mass, pn * rng.unit_vector());
            const Mat4c w = element(axis_tensor(p, perp), 0.5 * kPi, g).w;
            const Mat4c sig =
                spin_operator(boost_spin_axis(p, RestSpinAxis(sx)), g);
            desc = describe(p, perp, 0.5 * kPi, i);
            return max_abs(w * sig * w.inverse() - sig);
          });

  run.add("generator-squares-to-minus-identity", "Eq21-remark",
          cfg.tol_strict, "max_le", n,
          [&](DrawRng& rng, std::uint64_t i, std::string& desc) {
            const FourMomentum p = random_momentum(rng, cfg);
            const Vec3 ax = rng.unit_vector();
            const AxisTensor at = axis_tensor(p, ax);
            const Mat4c gen =
                g.boost_generator(at.w1) + g.rotation_generator(at.w2);
            desc = describe(p, ax, 0.0, i);
            return max_abs(gen * gen + id4);
          });

  const double fault_sign =
      cfg.fault == SuiteConfig::Fault::kFlipFactorSign ? -1.0 : +1.0;

  run.add("Eq26-30-factorization", "Eq26-30", cfg.tol_accum, "max_le", n,
          [&](DrawRng& rng, std::uint64_t i, std::string& desc) {
            const FourMomentum p = random_momentum(rng, cfg);
            const Vec3 ax = rng.unit_vector();
            double phi = rng.uniform(0.0, 4.0 * kPi);
            if (i % 10 == 0) phi = kPi + rng.uniform(-1e-3, 1e-3);
            const LittleGroupElement el = element(axis_tensor(p, ax), phi, g);
            desc = describe(p, ax, phi, i);
            double worst = 0.0;
            for (FactorOrder order : {FactorOrder::kBoostThenRotation,
                                      FactorOrder::kRotationThenBoost}) {
              const Factorization f = detail::factor_with_sign(
                  el, order, g, fault_sign, /*check_product=*/false);
              const Mat4c product =
                  order == FactorOrder::kBoostThenRotation
                      ? Mat4c(f.boost_factor * f.rotation_factor)
                      : Mat4c(f.rotation_factor * f.boost_factor);
              const Factorization o = polar_factor(el, order, g);
              worst = std::max({worst, max_abs(product - el.w),
                                max_abs(f.boost_factor - o.boost_factor),
                                max_abs(f.rotation_factor - o.rotation_factor)});
            }
            return worst;
          });

  run.add("Eq30-rotation-order-independence", "Eq30", 1e-12, "max_le", n,
          [&](DrawRng& rng, std::uint64_t i, std::string& desc) {
            const FourMomentum p = random_momentum(rng, cfg);
            const Vec3 ax = rng.unit_vector();
            const double phi = rng.uniform(0.0, 4.0 * kPi);
            const LittleGroupElement el = element(axis_tensor(p, ax), phi, g);
            const Factorization a =
                factor(el, FactorOrder::kBoostThenRotation, g);
            const Factorization b =
                factor(el, FactorOrder::kRotationThenBoost, g);
            desc = describe(p, ax, phi, i);
            return max_abs(a.rotation_factor - b.rotation_factor);
          });

  run.add("Eq35-boost-speed-symmetry", "Eq35", 1e-12, "max_le", n,
          [&](DrawRng& rng, std::uint64_t i, std::string& desc) {
            const FourMomentum p = random_momentum(rng, cfg);
            const Vec3 ax = rng.unit_vector();
            const double phi = rng.uniform(0.0, 4.0 * kPi);
            const LittleGroupElement el = element(axis_tensor(p, ax), phi, g);
            const Factorization a =
                factor(el, FactorOrder::kBoostThenRotation, g);
            const Factorization b =
                factor(el, FactorOrder::kRotationThenBoost, g);
            desc = describe(p, ax, phi, i);
            return std::abs(a.boost_param - b.boost_param);
          });

  run.add("Eq34-angle-consistency", "Eq34", cfg.tol_accum, "max_le", n,
          [&](DrawRng& rng, std::uint64_t i, std::string& desc) {
            const FourMomentum p = random_momentum(rng, cfg);
            const Vec3 ax = rng.unit_vector();
            double phi = rng.uniform(0.0, 4.0 * kPi);
            // avoid exact branch points of the principal-value comparison
            if (std::abs(std::remainder(phi, kPi)) < 1e-3)
              phi += 2e-3;
            const AxisTensor at = axis_tensor(p, ax);
            const LittleGroupElement el = element(at, phi, g);
            const Factorization f =
                factor(el, FactorOrder::kBoostThenRotation, g);
            const double from_unitary = rotation_angle_from_unitary(
                f.rotation_factor, at.w2.normalized(), g);
            const double closed = rotation_angle(at, phi);
            // compare on the circle of period 4 pi (spinor double cover)
            const double diff =
                std::remainder(closed - from_unitary, 4.0 * kPi);
            desc = describe(p, ax, phi, i);
            return std::abs(diff);
          });

  run.add("subgroup-closure", "subgroup-law", cfg.tol_strict, "max_le", n,
          [&](DrawRng& rng, std::uint64_t i, std::string& desc) {
            const FourMomentum p = random_momentum(rng, cfg);
            const Vec3 ax = rng.unit_vector();
            const double phi1 = rng.uniform(0.0, 4.0 * kPi);
            const double phi2 = rng.uniform(0.0, 4.0 * kPi);
            desc = describe(p, ax, phi1, i) + " phi2=" + std::to_string(phi2);
            return closure_check(p, RestSpinAxis(ax), phi1, phi2, g);
          });

  run.add("double-cover-periods", "Eq23-double-valuedness", cfg.tol_accum,
          "max_le", n, [&](DrawRng& rng, std::uint64_t i, std::string& desc) {
            const FourMomentum p = random_momentum(rng, cfg);
            const Vec3 ax = rng.unit_vector();
            const double phi = rng.uniform(0.0, 2.0 * kPi);
            const AxisTensor at = axis_tensor(p, ax);
            const Mat4c w = element(at, phi, g).w;
            const Mat4c w2pi = element(at, phi + 2.0 * kPi, g).w;
            const Mat4c w4pi = element(at, phi + 4.0 * kPi, g).w;
            desc = describe(p, ax, phi, i);
            return std::max({max_abs(w4pi - w), max_abs(w2pi + w),
                             max_abs(vector_rep(w2pi, g) - vector_rep(w, g))});
          });

  SuiteReport report;
  report.config = cfg;
  report.version = kVersion;
  report.results = std::move(run.results);
  report.pass = true;
  for (const PropertyResult& r : report.results) report.pass &= r.pass;
  return report;
}

std::string SuiteReport::to_json() const {
  nlohmann::json j;
  j["version"] = version;
  j["pass"] = pass;
  j["config"] = {{"seed", config.seed},
                 {"trials", config.trials},
                 {"tol_strict", config.tol_strict},
                 {"tol_accum", config.tol_accum},
                 {"mass", config.mass},
                 {"p_max_over_m", config.p_max_over_m}};
  j["properties"] = nlohmann::json::array();
  for (const PropertyResult& r : results) {
    nlohmann::json p = {{"id", r.id},           {"anchor", r.anchor},
                        {"trials", r.trials},   {"max_residual", r.max_residual},
                        {"threshold", r.threshold}, {"mode", r.mode},
                        {"pass", r.pass}};
    if (!r.pass) p["worst_case"] = r.worst_case;
    j["properties"].push_back(p);
  }
  return j.dump(2);
}

std::string SuiteReport::to_text() const {
  std::ostringstream os;
  os << version << "  seed=" << config.seed << " trials=" << config.trials
     << " tol_strict=" << config.tol_strict
     << " tol_accum=" << config.tol_accum << "\n";
  for (const PropertyResult& r : results) {
    os.setf(std::ios::scientific);
    os.precision(3);
    os << (r.pass ? "PASS" : "FAIL") << "  " << r.id << " [" << r.anchor
       << "]  " << (r.mode == "min_ge" ? "min" : "max") << " residual "
       << r.max_residual << (r.mode == "min_ge" ? " >= " : " <= ")
       << r.threshold << " (" << r.trials << " trials)\n";
    if (!r.pass) os << "      worst case: " << r.worst_case << "\n";
  }
  os << (pass ? "ALL PROPERTIES PASS" : "VERIFICATION FAILED") << "\n";
  return os.str();
}

}  // namespace spingroup
