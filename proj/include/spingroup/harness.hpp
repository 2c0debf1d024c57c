#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "spingroup/kinematics.hpp"

namespace spingroup {

// splitmix64 keyed by (seed, stream, index): every draw owns its own
// stream, so results do not depend on evaluation order or parallelism.
class DrawRng {
 public:
  DrawRng(std::uint64_t seed, std::uint64_t stream, std::uint64_t index)
      : state_(seed ^ (0x9e3779b97f4a7c15ULL * (stream + 1)) ^
               (0xbf58476d1ce4e5b9ULL * (index + 1))) {
    next();
    next();
  }

  std::uint64_t next() {
    std::uint64_t z = (state_ += 0x9e3779b97f4a7c15ULL);
    z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
    z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
    return z ^ (z >> 31);
  }

  double uniform() { return static_cast<double>(next() >> 11) * 0x1.0p-53; }
  double uniform(double lo, double hi) { return lo + (hi - lo) * uniform(); }
  Vec3 unit_vector();

 private:
  std::uint64_t state_;
};

std::uint64_t fnv1a(const std::string& s);

struct SuiteConfig {
  std::uint64_t seed = 20240901;
  int trials = 100;
  double tol_strict = 1e-10;
  double tol_accum = 1e-9;
  double mass = 1.0;
  double p_max_over_m = 5.0;

  enum class Fault { kNone, kFlipFactorSign };
  Fault fault = Fault::kNone;  // test-only mutation hook

  void validate() const;
};

// Per-property record. mode "max_le": worst residual must stay below the
// threshold; mode "min_ge": every residual must exceed it (positive
// controls).
struct PropertyResult {
  std::string id;
  std::string anchor;
  int trials = 0;
  double max_residual = 0.0;
  double threshold = 0.0;
  std::string mode = "max_le";
  bool pass = false;
  std::string worst_case;  // offending input, replayable by hand
};

struct SuiteReport {
  SuiteConfig config;
  std::string version;
  std::vector<PropertyResult> results;
  bool pass = false;

  std::string to_json() const;
  std::string to_text() const;
};

FourMomentum random_momentum(DrawRng& rng, const SuiteConfig& cfg);

// Runs every library invariant as a residual property; failures are data,
// not errors.
SuiteReport run_suite(const SuiteConfig& cfg);

}  // namespace spingroup
