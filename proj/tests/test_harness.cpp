#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "spingroup/harness.hpp"

using namespace spingroup;

TEST_CASE("random_momentum") {
  SuiteConfig cfg;

  SUBCASE("always on shell") {
    for (int i = 0; i < 100; ++i) {
      DrawRng rng(cfg.seed, 0, i);
      const FourMomentum p = random_momentum(rng, cfg);
      CHECK(std::abs(p.energy() * p.energy() -
                     p.momentum().squaredNorm() - p.mass() * p.mass()) <=
            1e-12);
      CHECK(p.momentum().norm() <= cfg.p_max_over_m * cfg.mass);
    }
  }

  SUBCASE("p_max_over_m = 0 gives rest momenta") {
    cfg.p_max_over_m = 0.0;
    DrawRng rng(cfg.seed, 0, 3);
    CHECK(random_momentum(rng, cfg).momentum().norm() == 0.0);
  }

  SUBCASE("fixed (seed, index) reproduces the draw") {
    DrawRng a(99, 4, 17);
    DrawRng b(99, 4, 17);
    const FourMomentum pa = random_momentum(a, cfg);
    const FourMomentum pb = random_momentum(b, cfg);
    CHECK(pa.momentum() == pb.momentum());
  }

  SUBCASE("different indices give different draws") {
    DrawRng a(99, 4, 17);
    DrawRng b(99, 4, 18);
    CHECK(random_momentum(a, cfg).momentum() !=
          random_momentum(b, cfg).momentum());
  }
}

TEST_CASE("config validation") {
  SuiteConfig cfg;
  cfg.trials = 0;
  CHECK_THROWS(cfg.validate());
  cfg = SuiteConfig{};
  cfg.tol_strict = 0.0;
  CHECK_THROWS(cfg.validate());
  cfg = SuiteConfig{};
  cfg.mass = -1.0;
  CHECK_THROWS(cfg.validate());
}

TEST_CASE("run_suite") {
  SuiteConfig cfg;
  cfg.trials = 20;  // small but full property list

  const SuiteReport report = run_suite(cfg);

  SUBCASE("default configuration passes") {
    for (const PropertyResult& r : report.results) {
      INFO(r.id, " residual ", r.max_residual, " threshold ", r.threshold);
      CHECK(r.pass);
    }
    CHECK(report.pass);
  }

  SUBCASE("every property carries an anchor and a trial count") {
    CHECK(report.results.size() >= 20);
    for (const PropertyResult& r : report.results) {
      CHECK(!r.anchor.empty());
      CHECK(r.trials >= 1);
    }
  }

  SUBCASE("deterministic: identical config gives byte-identical report") {
    const SuiteReport again = run_suite(cfg);
    CHECK(report.to_json() == again.to_json());
  }

  SUBCASE("trials = 1 still runs the full list") {
    SuiteConfig one = cfg;
    one.trials = 1;
    const SuiteReport r1 = run_suite(one);
    CHECK(r1.results.size() == report.results.size());
    for (const PropertyResult& r : r1.results) CHECK(r.trials == 1);
  }
}

TEST_CASE("unattainable tolerance is reported as failure, not error") {
  SuiteConfig cfg;
  cfg.trials = 5;
  cfg.tol_strict = 1e-30;
  cfg.tol_accum = 1e-30;
  const SuiteReport report = run_suite(cfg);
  CHECK(!report.pass);
  bool some_failed = false;
  for (const PropertyResult& r : report.results) some_failed |= !r.pass;
  CHECK(some_failed);
  // counterexamples replayable: failing records carry their inputs
  for (const PropertyResult& r : report.results)
    if (!r.pass && r.trials > 1) CHECK(!r.worst_case.empty());
}

TEST_CASE("fault injection breaks only the factorization property") {
  SuiteConfig cfg;
  cfg.trials = 10;
  cfg.fault = SuiteConfig::Fault::kFlipFactorSign;
  const SuiteReport faulty = run_suite(cfg);
  CHECK(!faulty.pass);
  for (const PropertyResult& r : faulty.results) {
    if (r.id == "Eq26-30-factorization")
      CHECK(!r.pass);
    else
      CHECK(r.pass);
  }
}
