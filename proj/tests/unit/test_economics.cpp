#include <doctest.h>

#include <array>
#include <cmath>

#include "../support/oracles.hpp"
#include "../support/property.hpp"
#include "qaran/economics.hpp"
#include "qaran/error.hpp"

using namespace qaran;

namespace {

const CmosProfile k14 = builtin_cmos_profile("14nm", EfficiencyMode::AsPrinted);
const CmosProfile k15 = builtin_cmos_profile("1.5nm", EfficiencyMode::AsPrinted);

CellScenario cell(double mhz, int ant) { return CellScenario{mhz, 6, 0.5, ant, 1.0, 1.0}; }

}  // namespace

TEST_CASE("cost report") {
  const std::array<double, 2> years{1.0, 10.0};
  const auto r = cost_report(41e3, years);
  REQUIRE(r.rows.size() == 2);
  // 41 kW * 8760 h * 0.143 $/kWh
  CHECK(r.rows[0].opex_savings_usd == doctest::Approx(41.0 * 8760 * 0.143));
  CHECK(r.rows[0].co2_savings_kt == doctest::Approx(41.0 * 8760 * 0.92 / kPoundsPerMetricKiloton));
  CHECK(r.rows[1].opex_savings_usd == doctest::Approx(10 * r.rows[0].opex_savings_usd));
  CHECK(r.rows[0].breakeven_capex_usd == r.rows[0].opex_savings_usd);

  const auto big = cost_report(188e3, years);
  CHECK(oracle::rel_err(big.rows[1].opex_savings_usd, 2.355e6) < 0.01);
  CHECK(oracle::rel_err(big.rows[1].co2_savings_kt, 6.87) < 0.01);

  const auto zero = cost_report(0.0, years);
  CHECK(zero.rows[1].opex_savings_usd == 0.0);
  CHECK(zero.rows[1].co2_savings_kt == 0.0);

  const std::array<double, 1> bad{-1.0};
  CHECK_THROWS_AS(cost_report(1.0, bad), DomainError);
  CostAssumptions neg;
  neg.electricity_usd_per_kwh = -1;
  CHECK_THROWS_AS(cost_report(1.0, years, neg), DomainError);
}

TEST_CASE("property: cost is linear in delta, years and price") {
  prop::Gen gen(61);
  for (int i = 0; i < prop::kCases; ++i) {
    const double d = gen.uniform(-1e6, 1e6);
    const double y = gen.uniform(0.0, 50.0);
    const double k = gen.uniform(0.1, 10.0);
    const std::array<double, 1> ys{y};
    const auto a = cost_report(d, ys);
    const auto b = cost_report(d * k, ys);
    REQUIRE(b.rows[0].opex_savings_usd == doctest::Approx(k * a.rows[0].opex_savings_usd).scale(1e3));
    CostAssumptions c;
    c.electricity_usd_per_kwh *= k;
    const auto p = cost_report(d, ys, c);
    REQUIRE(p.rows[0].opex_savings_usd == doctest::Approx(k * a.rows[0].opex_savings_usd).scale(1e3));
    REQUIRE(p.rows[0].co2_savings_kt == doctest::Approx(a.rows[0].co2_savings_kt));
  }
}

TEST_CASE("base station comparison near the reported values") {
  const auto c = compare(cell(400, 64), k14, QaProfile::projected(), 20);
  CHECK(oracle::rel_err(c.cmos.total_w, 89.9e3) < 0.15);
  CHECK(oracle::rel_err(c.qa.total_w, 49e3) < 0.15);
  CHECK(c.qa_advantage());
  CHECK(c.system_qubits == c.budget.total);
  CHECK(c.qa.qa_w == doctest::Approx(25e3));
}

TEST_CASE("QA loses at narrow bandwidth") {
  const auto c = compare(cell(50, 64), k14, QaProfile::projected(), 20);
  CHECK_FALSE(c.qa_advantage());
  CHECK(c.delta_w() < 0);
  // Refrigeration alone keeps the QA system above 25 kW.
  const auto tiny = compare(cell(0.1, 1), k14, QaProfile::projected(), 20);
  CHECK(tiny.qa.total_w >= 25e3);
}

TEST_CASE("C-RAN comparison") {
  const auto c = compare(cell(400, 64), k14, QaProfile::projected(), 20, Topology::cran(3));
  CHECK(oracle::rel_err(c.cmos.total_w, 290e3) < 0.15);
  CHECK(oracle::rel_err(c.qa.total_w, 131e3) < 0.15);
  CHECK(c.system_qubits == 3 * c.budget.total);
  CHECK(c.cmos.fronthaul_w == doctest::Approx(3 * 7400.0));
  CHECK(c.cmos.rrh_compute_w == doctest::Approx(c.qa.rrh_compute_w));
  CHECK_THROWS_AS(Topology::cran(0), DomainError);
}

TEST_CASE("capacity flag") {
  const auto big = compare(cell(400, 256), k14, QaProfile::projected(), 100, Topology::cran(3));
  CHECK(big.capacity_exceeded == (big.system_qubits > big.capacity.qubits));
}

TEST_CASE("crossover bandwidth") {
  const auto qa = QaProfile::projected();
  CHECK(crossover_bandwidth(128, k14, qa) == doctest::Approx(50.0));
  CHECK(std::abs(*crossover_bandwidth(64, k14, qa) - 160.0) <= 10.0);
  CHECK(crossover_bandwidth(256, k14, qa) == doctest::Approx(20.0));
  CHECK(crossover_bandwidth(256, k15, qa) == doctest::Approx(60.0));
  CHECK(std::abs(*crossover_bandwidth(128, k15, qa) - 190.0) <= 10.0);
  CHECK_FALSE(crossover_bandwidth(1, k14, qa).has_value());
  CrossoverOptions bad;
  bad.grid.step_mhz = 0;
  CHECK_THROWS_AS(crossover_bandwidth(64, k14, qa, bad), DomainError);
}

TEST_CASE("crossover is non-increasing in antennas") {
  const auto qa = QaProfile::projected();
  double prev = 1e9;
  for (int ant : {32, 64, 128, 256}) {
    const auto x = crossover_bandwidth(ant, k14, qa);
    REQUIRE(x.has_value());
    CHECK(*x <= prev);
    prev = *x;
  }
}

TEST_CASE("property: QA advantage is monotone in bandwidth") {
  prop::Gen gen(62);
  const auto qa = QaProfile::projected();
  for (int i = 0; i < prop::kCases; ++i) {
    const int ant = gen.integer(1, 256);
    const double lo = gen.uniform(1, 1000);
    const double hi = lo + gen.uniform(0, 1000);
    const auto a = bbu_comparison(cell(lo, ant), k14, qa);
    const auto b = bbu_comparison(cell(hi, ant), k14, qa);
    if (a.qa_w < a.cmos_w) REQUIRE(b.qa_w < b.cmos_w);
  }
}
