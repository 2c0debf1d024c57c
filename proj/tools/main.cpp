#include <CLI11.hpp>
#include <json.hpp>

#include <fstream>
#include <iostream>
#include <optional>

#include "spingroup/bispinor.hpp"
#include "spingroup/harness.hpp"
#include "spingroup/little_group.hpp"
#include "spingroup/sweep.hpp"

namespace {

using namespace spingroup;

constexpr int kExitPass = 0;
constexpr int kExitFail = 1;
constexpr int kExitUsage = 2;

nlohmann::json matrix_json(const Mat4c& m) {
  nlohmann::json rows = nlohmann::json::array();
  for (int r = 0; r < 4; ++r) {
    nlohmann::json row = nlohmann::json::array();
    for (int c = 0; c < 4; ++c)
      row.push_back({m(r, c).real(), m(r, c).imag()});
    rows.push_back(row);
  }
  return rows;
}

void print_matrix(std::ostream& os, const std::string& name, const Mat4c& m) {
  os << name << ":\n";
  os.precision(12);
  for (int r = 0; r < 4; ++r) {
    os << "  ";
    for (int c = 0; c < 4; ++c) {
      os << "(" << m(r, c).real() << (m(r, c).imag() < 0 ? "" : "+")
         << m(r, c).imag() << "i) ";
    }
    os << "\n";
  }
}

std::ostream& open_output(std::ofstream& file, const std::string& path) {
  if (path.empty()) return std::cout;
  file.open(path);
  if (!file) throw CLI::ValidationError("--out", "cannot open " + path);
  return file;
}

struct CommonFlags {
  std::vector<double> p{0, 0, 0};
  std::vector<double> spin{0, 0, 1};
  double mass = 1.0;
  bool json = false;
  std::string out;
};

int run_verify(const SuiteConfig& cfg, bool json, const std::string& out) {
  const SuiteReport report = run_suite(cfg);
  std::ofstream file;
  std::ostream& os = open_output(file, out);
  os << (json ? report.to_json() : report.to_text()) << std::flush;
  return report.pass ? kExitPass : kExitFail;
}

int run_factorize(const CommonFlags& flags, double phi,
                  const std::string& order_name) {
  if (Vec3(flags.spin.data()).norm() == 0.0)
    throw CLI::ValidationError("--spin", "spin vector must be nonzero");
  const GammaBasis& g = dirac_basis();
  const FourMomentum p(flags.mass, flags.mass * Vec3(flags.p.data()));
  const RestSpinAxis axis = RestSpinAxis::normalized(Vec3(flags.spin.data()));
  const FactorOrder order = order_name == "rb"
                                ? FactorOrder::kRotationThenBoost
                                : FactorOrder::kBoostThenRotation;

  const LittleGroupElement el = spin_group_element(p, axis, phi, g);
  const Factorization f = factor(el, order, g);
  const Factorization oracle = polar_factor(el, order, g);
  const Vec4c psi = boost_bispinor(rest_bispinor(axis, g), p, g);
  const PhaseResult ph = extract_phase(el.w, psi);

  const Mat4c product = order == FactorOrder::kBoostThenRotation
                            ? Mat4c(f.boost_factor * f.rotation_factor)
                            : Mat4c(f.rotation_factor * f.boost_factor);
  Eigen::Vector4d pvec;
  pvec << p.energy(), p.momentum();
  const double residual_product = max_abs(product - el.w);
  const double residual_polar =
      std::max(max_abs(f.boost_factor - oracle.boost_factor),
               max_abs(f.rotation_factor - oracle.rotation_factor));
  const double residual_momentum =
      (vector_rep(el.w, g) * pvec - pvec).norm() / pvec.norm();
  const Mat4c sig = spin_operator(boost_spin_axis(p, axis), g);
  const double residual_spin = max_abs(el.w * sig * el.w.inverse() - sig);

  std::ofstream file;
  std::ostream& os = open_output(file, flags.out);
  if (flags.json) {
    nlohmann::json j;
    j["phi"] = phi;
    j["order"] = order_name;
    j["mass"] = flags.mass;
    j["spin_axis"] = {axis.axis().x(), axis.axis().y(), axis.axis().z()};
    j["momentum"] = {p.momentum().x(), p.momentum().y(), p.momentum().z()};
    j["W"] = matrix_json(el.w);
    j["boost_factor"] = matrix_json(f.boost_factor);
    j["rotation_factor"] = matrix_json(f.rotation_factor);
    j["rotation_angle_2r"] = f.rotation_angle_2r;
    j["u"] = f.boost_param;
    j["beta"] = f.boost_beta;
    j["boost_direction"] = {f.boost_direction.x(), f.boost_direction.y(),
                            f.boost_direction.z()};
    j["phase"] = {ph.phase.real(), ph.phase.imag()};
    j["residuals"] = {{"product", residual_product},
                      {"polar", residual_polar},
                      {"momentum", residual_momentum},
                      {"spin", residual_spin},
                      {"phase_eigen", ph.residual}};
    os << j.dump(2) << "\n";
  } else {
    os.precision(12);
    os << "spin-group element: phi=" << phi << " order=" << order_name
       << "\n";
    os << "spin axis (normalized): " << axis.axis().transpose() << "\n";
    os << "momentum: " << p.momentum().transpose()
       << "  p0=" << p.energy() << "  m=" << flags.mass << "\n";
    print_matrix(os, "W", el.w);
    print_matrix(os, "boost factor (Hermitian)", f.boost_factor);
    print_matrix(os, "rotation factor (unitary)", f.rotation_factor);
    os << "rotation angle 2r = " << f.rotation_angle_2r << "\n";
    os << "|u| = " << f.boost_param << "   beta = " << f.boost_beta << "\n";
    os << "boost direction = " << f.boost_direction.transpose() << "\n";
    os << "phase <psi|W|psi> = " << ph.phase.real() << " + "
       << ph.phase.imag() << "i\n";
    os << "residuals: product=" << residual_product
       << " polar=" << residual_polar << " momentum=" << residual_momentum
       << " spin=" << residual_spin << " phase_eigen=" << ph.residual
       << "\n";
  }
  return kExitPass;
}

int run_sweep(const CommonFlags& flags, double phi_max, int steps) {
  if (Vec3(flags.spin.data()).norm() == 0.0)
    throw CLI::ValidationError("--spin", "spin vector must be nonzero");
  const GammaBasis& g = dirac_basis();
  const FourMomentum p(flags.mass, flags.mass * Vec3(flags.p.data()));
  const RestSpinAxis axis = RestSpinAxis::normalized(Vec3(flags.spin.data()));
  const std::vector<SweepRow> rows = sweep_rows(p, axis, phi_max, steps, g);
  std::ofstream file;
  std::ostream& os = open_output(file, flags.out);
  write_sweep_csv(os, rows);
  return kExitPass;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Spin-group numerics for spin-1/2 fermions"};
  app.require_subcommand(1);

  SuiteConfig cfg;
  bool verify_json = false;
  std::string verify_out;
  CLI::App* verify = app.add_subcommand(
      "verify", "Run the randomized property suite");
  verify->add_option("--seed", cfg.seed, "RNG seed");
  verify->add_option("--trials", cfg.trials, "Trials per property");
  verify->add_option("--tol-strict", cfg.tol_strict, "Strict tolerance");
  verify->add_option("--tol-accum", cfg.tol_accum, "Accumulated tolerance");
  verify->add_option("--mass", cfg.mass, "Fermion mass (c = 1 units)");
  verify->add_option("--p-max", cfg.p_max_over_m, "Max |p| in units of m");
  verify->add_flag("--json", verify_json, "Emit JSON report");
  verify->add_option("--out", verify_out, "Write report to file");

  CommonFlags fflags;
  double phi = 0.0;
  std::string order = "br";
  CLI::App* factorize = app.add_subcommand(
      "factorize", "Factorize one spin-group element into boost and rotation");
  factorize->add_option("--p", fflags.p, "Momentum p/m, comma separated")
      ->delimiter(',')->expected(3);
  factorize->add_option("--spin", fflags.spin, "Rest spin axis, comma separated")
      ->delimiter(',')->expected(3);
  factorize->add_option("--phi", phi, "Group parameter phi")->required();
  factorize->add_option("--order", order, "br (boost*rotation) or rb")
      ->check(CLI::IsMember({"br", "rb"}));
  factorize->add_option("--mass", fflags.mass, "Fermion mass");
  factorize->add_flag("--json", fflags.json, "Emit JSON");
  factorize->add_option("--out", fflags.out, "Write to file");

  CommonFlags sflags;
  double phi_max = 4.0 * 3.14159265358979323846;
  int steps = 128;
  CLI::App* sweep = app.add_subcommand(
      "sweep", "Emit a CSV sweep of factor parameters over phi");
  sweep->add_option("--p", sflags.p, "Momentum p/m, comma separated")
      ->delimiter(',')->expected(3);
  sweep->add_option("--spin", sflags.spin, "Rest spin axis, comma separated")
      ->delimiter(',')->expected(3);
  sweep->add_option("--phi-max", phi_max, "Upper end of the phi grid");
  sweep->add_option("--steps", steps, "Grid steps (rows = steps + 1)");
  sweep->add_option("--mass", sflags.mass, "Fermion mass");
  sweep->add_option("--out", sflags.out, "Write CSV to file");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    if (e.get_exit_code() == 0) return app.exit(e);
    app.exit(e);
    return kExitUsage;
  }

  try {
    if (verify->parsed()) {
      cfg.validate();
      return run_verify(cfg, verify_json, verify_out);
    }
    if (factorize->parsed()) return run_factorize(fflags, phi, order);
    if (sweep->parsed()) {
      if (steps < 2) throw std::invalid_argument("--steps must be >= 2");
      return run_sweep(sflags, phi_max, steps);
    }
  } catch (const std::invalid_argument& e) {
    std::cerr << "usage error: " << e.what() << "\n";
    return kExitUsage;
  } catch (const CLI::ValidationError& e) {
    std::cerr << "usage error: " << e.what() << "\n";
    return kExitUsage;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitFail;
  }
  return kExitUsage;
}
