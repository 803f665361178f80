#include <doctest.h>

#include <cmath>

#include "../support/oracles.hpp"
#include "../support/property.hpp"
#include "qaran/error.hpp"
#include "qaran/workload.hpp"

using namespace qaran;

namespace {

CellScenario make(double bw, int antennas, double rate = 0.5) {
  return CellScenario{bw, 6, rate, antennas, 1.0, 1.0};
}

}  // namespace

TEST_CASE("reference workload matches the published reference column") {
  const BbuWorkload ref = reference_workload();
  CHECK(ref[BbuTask::FDnl] == doctest::Approx(0.030));
  CHECK(ref[BbuTask::CPRI] == doctest::Approx(0.720));
  CHECK(ref.total() == doctest::Approx(2.100));
}

TEST_CASE("task order and names are fixed") {
  const char* names[] = {"DPD", "Filter", "FFT", "FDlin", "FDnl", "FEC", "CPRI", "PCP"};
  for (std::size_t i = 0; i < kAllTasks.size(); ++i) {
    CHECK(task_name(kAllTasks[i]) == names[i]);
    CHECK(parse_task(names[i]) == kAllTasks[i]);
  }
  CHECK_FALSE(parse_task("LDPC").has_value());
}

TEST_CASE("scaling exponents") {
  CHECK(scaling_exponents(BbuTask::FDnl).s == std::array<int, 6>{1, 0, 0, 2, 1, 1});
  CHECK(scaling_exponents(BbuTask::FDlin).s == std::array<int, 6>{1, 0, 0, 1, 1, 1});
  CHECK(scaling_exponents(BbuTask::PCP).s == std::array<int, 6>{0, 0, 0, 1, 0, 0});
  CHECK(scaling_exponents(BbuTask::FEC).s == std::array<int, 6>{1, 1, 1, 1, 1, 1});
}

TEST_CASE("scale_task examples") {
  CHECK(scale_task(BbuTask::DPD, make(20, 2)) == doctest::Approx(0.320));
  CHECK(scale_task(BbuTask::FDnl, make(400, 64)) == doctest::Approx(2457.6));
  for (BbuTask t : kAllTasks) {
    CHECK(scale_task(t, CellScenario::reference()) == reference_tops(t));
  }
  // FEC at R = 0.5 with two antennas lands back on the reference value.
  CHECK(scale_task(BbuTask::FEC, make(20, 2)) == doctest::Approx(0.140));
}

TEST_CASE("workload totals") {
  CHECK(workload(make(200, 64)).total() == doctest::Approx(2048.0));
  CHECK(workload(make(20, 8)).total() == doctest::Approx(15.040));
  CHECK(workload(make(400, 128)).total() == doctest::Approx(13056.0));
}

TEST_CASE("invalid scenarios are rejected") {
  CHECK_THROWS_AS(workload(make(0.0, 4)), DomainError);
  CHECK_THROWS_AS(workload(make(-20.0, 4)), DomainError);
  CHECK_THROWS_AS(workload(make(20.0, 0)), DomainError);
  CHECK_THROWS_AS(workload(make(20.0, 4, 0.0)), DomainError);
  CHECK_THROWS_AS(workload(make(20.0, 4, 1.5)), DomainError);
  CellScenario s = make(20, 4);
  s.modulation_bits = 3;
  CHECK_THROWS_AS(s.validate(), DomainError);
  s = make(20, 4);
  s.duty_time = 0.0;
  CHECK_THROWS_AS(scale_task(BbuTask::DPD, s), DomainError);
  s = make(20, 4);
  s.duty_freq = 1.2;
  CHECK_THROWS_AS(scale_task(BbuTask::DPD, s), DomainError);
}

TEST_CASE("property: scale_task agrees with the pow-based oracle") {
  prop::Gen gen(0xA11CE);
  for (int i = 0; i < prop::kCases; ++i) {
    const CellScenario s = gen.scenario();
    for (BbuTask t : kAllTasks) {
      int e[6];
      for (int k = 0; k < 6; ++k) e[k] = scaling_exponents(t).s[k];
      const double want = oracle::scaled_tops(reference_tops(t), e, s.bandwidth_mhz, s.modulation_bits,
                                              s.coding_rate, s.antennas, s.duty_time, s.duty_freq);
      REQUIRE(scale_task(t, s) == doctest::Approx(want).epsilon(1e-12));
    }
  }
}

TEST_CASE("property: total equals the per-task sum") {
  prop::Gen gen(7);
  for (int i = 0; i < prop::kCases; ++i) {
    const BbuWorkload w = workload(gen.scenario());
    double sum = 0.0;
    for (BbuTask t : kAllTasks) sum += w[t];
    REQUIRE(std::fabs(w.total() - sum) <= 1e-9 * sum);
  }
}

TEST_CASE("property: doubling antennas quadruples FDnl and doubles linear tasks") {
  prop::Gen gen(11);
  for (int i = 0; i < prop::kCases; ++i) {
    CellScenario s = gen.scenario();
    s.antennas = gen.integer(1, 128);
    CellScenario d = s;
    d.antennas *= 2;
    REQUIRE(scale_task(BbuTask::FDnl, d) == doctest::Approx(4.0 * scale_task(BbuTask::FDnl, s)));
    for (BbuTask t : {BbuTask::DPD, BbuTask::Filter, BbuTask::FFT, BbuTask::FDlin}) {
      REQUIRE(scale_task(t, d) == doctest::Approx(2.0 * scale_task(t, s)));
    }
  }
}
