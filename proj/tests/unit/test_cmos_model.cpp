#include <doctest.h>

#include "../support/property.hpp"
#include "qaran/cmos_model.hpp"
#include "qaran/error.hpp"

using namespace qaran;

TEST_CASE("Vdd^2 efficiency scaling from the 65 nm anchor") {
  const CmosProfile anchor = CmosProfile::anchor_65nm();
  CHECK(efficiency_from_vdd(anchor, 0.8) == doctest::Approx(0.075625));
  CHECK(efficiency_from_vdd(anchor, 0.4) == doctest::Approx(0.3025));
  CHECK(efficiency_from_vdd(anchor, 1.1) == doctest::Approx(0.04));
  CHECK_THROWS_AS(efficiency_from_vdd(anchor, 0.0), DomainError);
  CHECK_THROWS_AS(efficiency_from_vdd(anchor, -0.8), DomainError);
}

TEST_CASE("built-in profiles in both efficiency modes") {
  CHECK(builtin_cmos_profile("14nm").efficiency == doctest::Approx(0.076));
  CHECK(builtin_cmos_profile("1.5nm").efficiency == doctest::Approx(0.30));
  CHECK(builtin_cmos_profile("14nm", EfficiencyMode::Exact).efficiency == doctest::Approx(0.075625));
  CHECK(builtin_cmos_profile("1.5nm", EfficiencyMode::Exact).efficiency == doctest::Approx(0.3025));
  CHECK(builtin_cmos_profile("65nm").efficiency == doctest::Approx(0.04));
  CHECK_THROWS_AS(builtin_cmos_profile("7nm"), DomainError);
}

TEST_CASE("cmos_power") {
  const CmosProfile anchor = CmosProfile::anchor_65nm();
  CHECK(cmos_power(0.0, anchor) == 0.0);
  // 2.1 / 0.04 * 1.3
  CHECK(cmos_power(2.100, anchor) == doctest::Approx(68.25));
  // 4070.4 / 0.076 * 1.3 = 69625.26 W
  CHECK(cmos_power(4070.4, builtin_cmos_profile("14nm")) == doctest::Approx(69625.263).epsilon(1e-6));
  CHECK_THROWS_AS(cmos_power(-1.0, anchor), DomainError);
}

TEST_CASE("profile validation") {
  CmosProfile p = CmosProfile::anchor_65nm();
  p.leakage_fraction = 1.0;
  CHECK_THROWS_AS(p.validate(), DomainError);
  p.leakage_fraction = 0.3;
  p.efficiency = 0.0;
  CHECK_THROWS_AS(p.validate(), DomainError);
}

TEST_CASE("per-task BBU power books leakage separately") {
  const auto w = workload(CellScenario{400, 6, 0.5, 64, 1, 1});
  const auto p = cmos_bbu_power(w, builtin_cmos_profile("14nm"));
  CHECK(p.leakage_w == doctest::Approx(0.3 * p.dynamic_total()));
  CHECK(p.total() == doctest::Approx(cmos_power(w.total(), builtin_cmos_profile("14nm"))));
  CHECK(p.dynamic_w[index_of(BbuTask::FDnl)] == doctest::Approx(2457.6 / 0.076));
}

TEST_CASE("property: power is linear in TOPS") {
  prop::Gen gen(21);
  const CmosProfile p = builtin_cmos_profile("14nm");
  for (int i = 0; i < prop::kCases; ++i) {
    const double a = gen.log_uniform(1e-3, 1e4);
    const double b = gen.log_uniform(1e-3, 1e4);
    REQUIRE(cmos_power(a + b, p) == doctest::Approx(cmos_power(a, p) + cmos_power(b, p)).epsilon(1e-12));
  }
}

TEST_CASE("property: halving vdd quadruples efficiency") {
  prop::Gen gen(22);
  const CmosProfile anchor = CmosProfile::anchor_65nm();
  for (int i = 0; i < prop::kCases; ++i) {
    const double v = gen.uniform(0.1, 2.0);
    REQUIRE(efficiency_from_vdd(anchor, v / 2.0) ==
            doctest::Approx(4.0 * efficiency_from_vdd(anchor, v)).epsilon(1e-12));
  }
}
