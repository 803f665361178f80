#include <doctest.h>

#include <vector>

#include "../support/oracles.hpp"
#include "../support/property.hpp"
#include "qaran/cmos_model.hpp"
#include "qaran/error.hpp"
#include "qaran/ran_power.hpp"

using namespace qaran;

namespace {
const PowerSystemLosses kNoLoss{0.0, 0.0, 0.0};
}

TEST_CASE("default losses") {
  const PowerSystemLosses l;
  CHECK(l.denominator() == doctest::Approx(0.91 * 0.93 * 0.94));
}

TEST_CASE("bs_power trivial cases") {
  const auto p = bs_power(0.0, 1, kNoLoss);
  CHECK(p.total_w == doctest::Approx(113.4));
  CHECK(p.ru_w == doctest::Approx(10.8));
  CHECK(p.pa_w == doctest::Approx(102.6));
  CHECK(p.power_system_w == doctest::Approx(0.0));

  const auto q = bs_power(1234.5, 4, kNoLoss);
  CHECK(q.total_w == doctest::Approx(1234.5 + 4 * 10.8 + 4 * 102.6));
}

TEST_CASE("4G two-antenna base station is about 0.35 kW") {
  const auto load = workload(CellScenario{20, 6, 0.5, 2, 1, 1});
  const double bbu = cmos_power(load.total(), builtin_cmos_profile("14nm"));
  const auto p = bs_power(bbu, 2);
  CHECK(oracle::rel_err(p.total_w, 350.0) <= 0.15);
}

TEST_CASE("bs_power rejects bad inputs") {
  CHECK_THROWS_AS(bs_power(10.0, 0), DomainError);
  CHECK_THROWS_AS(bs_power(10.0, 2, PowerSystemLosses{1.0, 0.0, 0.0}), DomainError);
  CHECK_THROWS_AS(bs_power(10.0, 2, PowerSystemLosses{0.0, -0.1, 0.0}), DomainError);
  CHECK_THROWS_AS(bs_power(-1.0, 2), DomainError);
}

TEST_CASE("fronthaul power") {
  CHECK(fronthaul_power(FronthaulLink{500e6, 500e6, 37.0}) == doctest::Approx(37.0));
  CHECK(fronthaul_power(FronthaulLink{500e6, 0.0, 37.0}) == 0.0);
  // rho = 37 W / 500 Mb/s carried to a 100 Gb/s link at full load: 7.4 kW.
  CHECK(fronthaul_power(FronthaulLink::at_reference_rate(100e9, 100e9)) == doctest::Approx(7400.0));
  CHECK_THROWS_AS(fronthaul_power(FronthaulLink{500e6, 600e6, 37.0}), DomainError);
  CHECK_THROWS_AS(fronthaul_power(FronthaulLink{0.0, 0.0, 37.0}), DomainError);
}

TEST_CASE("cran_power") {
  const RrhSite zero{0.0, 0.0, 0.0, PowerSystemLosses{}, FronthaulLink{500e6, 0.0, 37.0}};
  CHECK(cran_power(0.0, PowerSystemLosses{}, std::vector<RrhSite>{zero}).total_w == 0.0);
  CHECK_THROWS_AS(cran_power(0.0, PowerSystemLosses{}, std::vector<RrhSite>{}), DomainError);

  const RrhSite site{100.0, 10.8, 102.6, PowerSystemLosses{}, FronthaulLink{500e6, 250e6, 37.0}};
  const auto p = cran_power(1000.0, PowerSystemLosses{}, std::vector<RrhSite>{site});
  const double d = PowerSystemLosses{}.denominator();
  CHECK(p.total_w == doctest::Approx(1000.0 / d + (100.0 + 10.8 + 102.6) / d + 18.5));
  CHECK(p.fronthaul_w == doctest::Approx(18.5));
}

TEST_CASE("QA refrigeration bypasses the loss denominator") {
  const auto p = bs_power(CmosBbuPower{}, 25000.0, 1);
  CHECK(p.total_w == doctest::Approx(113.4 / PowerSystemLosses{}.denominator() + 25000.0));
  CHECK(p.bbu_w() == doctest::Approx(25000.0));
}

TEST_CASE("property: loss identity in base station mode") {
  prop::Gen gen(31);
  for (int i = 0; i < prop::kCases; ++i) {
    const PowerSystemLosses l{gen.uniform(0, 0.5), gen.uniform(0, 0.5), gen.uniform(0, 0.5)};
    const double bbu = gen.log_uniform(1.0, 1e6);
    const int n = gen.integer(1, 256);
    const auto p = bs_power(bbu, n, l);
    const double lhs = p.total_w * (1 - l.active_cooling) * (1 - l.mains_supply) * (1 - l.dc_dc);
    REQUIRE(oracle::rel_err(lhs, bbu + p.ru_w + p.pa_w) <= 1e-9);
    REQUIRE(p.power_system_w >= 0.0);
  }
}

TEST_CASE("property: C-RAN is additive over RRHs") {
  prop::Gen gen(32);
  for (int i = 0; i < 200; ++i) {
    const PowerSystemLosses l{gen.uniform(0, 0.3), gen.uniform(0, 0.3), gen.uniform(0, 0.3)};
    const double pool = gen.log_uniform(1.0, 1e5);
    std::vector<RrhSite> sites;
    const int k = gen.integer(1, 8);
    for (int j = 0; j < k; ++j) {
      const double cap = gen.log_uniform(1e6, 1e11);
      sites.push_back(RrhSite{gen.uniform(0, 1e4), gen.uniform(0, 1e3), gen.uniform(0, 1e4), l,
                              FronthaulLink{cap, gen.uniform(0, cap), gen.uniform(1, 1e4)}});
    }
    const double shared = cran_power(pool, l, std::vector<RrhSite>{sites.front()}).total_w -
                          cran_power(0.0, l, std::vector<RrhSite>{sites.front()}).total_w;
    double sum = 0.0;
    for (const auto& s : sites) sum += cran_power(0.0, l, std::vector<RrhSite>{s}).total_w;
    REQUIRE(oracle::rel_err(cran_power(pool, l, sites).total_w, sum + shared) <= 1e-9);
  }
}

TEST_CASE("property: fronthaul power is linear in load") {
  prop::Gen gen(33);
  for (int i = 0; i < prop::kCases; ++i) {
    const double cap = gen.log_uniform(1e6, 1e11);
    const double a = gen.uniform(0, cap / 2);
    const double b = gen.uniform(0, cap / 2);
    const double pmax = gen.uniform(1, 1e4);
    REQUIRE(fronthaul_power(FronthaulLink{cap, a + b, pmax}) ==
            doctest::Approx(fronthaul_power(FronthaulLink{cap, a, pmax}) +
                            fronthaul_power(FronthaulLink{cap, b, pmax})).epsilon(1e-12));
  }
}
