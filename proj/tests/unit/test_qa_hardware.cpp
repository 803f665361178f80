#include <doctest.h>

#include <cmath>
#include <numbers>

#include "../support/oracles.hpp"
#include "../support/property.hpp"
#include "qaran/error.hpp"
#include "qaran/qa_hardware.hpp"

using namespace qaran;

TEST_CASE("QMI run time is 42 + 3 Ns on the projected device") {
  const QaProfile p = QaProfile::projected();
  CHECK(qmi_runtime_us(p, 20) == doctest::Approx(102.0));
  CHECK(qmi_runtime_us(p, 100) == doctest::Approx(342.0));
  CHECK(qmi_runtime_us(p, 0) == doctest::Approx(42.0));
  CHECK_THROWS_AS(qmi_runtime_us(p, -1), DomainError);
}

TEST_CASE("built-in QA profiles") {
  CHECK(builtin_qa_profile("projected").programming_us == 42.0);
  const QaProfile cur = builtin_qa_profile("current");
  CHECK(cur.programming_us == doctest::Approx(22.0));
  CHECK(cur.readout_us == doctest::Approx(87.5));
  CHECK(qmi_runtime_us(cur, 1) > qmi_runtime_us(QaProfile::projected(), 1));
  CHECK_THROWS_AS(builtin_qa_profile("future"), DomainError);
  QaProfile bad;
  bad.anneal_us = 0.0;
  CHECK_THROWS_AS(bad.validate(), DomainError);
}

TEST_CASE("programming energy and thermalization") {
  const auto small = programming_energy(512, 1472, 55e-6);
  CHECK(small.dac_count == 4544);
  CHECK(oracle::rel_err(small.joules, 66e-15) <= 0.05);
  CHECK(oracle::rel_err(small.thermalization_s, 2.2e-9) <= 0.05);

  const auto large = programming_energy(10'000'000, 75'000'000, 55e-6);
  CHECK(large.dac_count == 135'000'000);
  CHECK(oracle::rel_err(large.joules, 2e-9) <= 0.05);
  CHECK(oracle::rel_err(large.thermalization_s, 66e-6) <= 0.05);

  const auto low_ic = programming_energy(2048, 6016, 1e-6);
  CHECK(oracle::rel_err(low_ic.joules, 5e-15) <= 0.05);
  CHECK(oracle::rel_err(low_ic.thermalization_s, 167e-12) <= 0.05);

  CHECK_THROWS_AS(programming_energy(1, 1, 0.0), DomainError);
}

TEST_CASE("property: programming energy is linear in DAC count and critical current") {
  prop::Gen gen(41);
  const QaProfile p;
  for (int i = 0; i < prop::kCases; ++i) {
    const auto q = gen.u64(1, 10'000'000);
    const auto c = gen.u64(0, 100'000'000);
    const double ic = gen.log_uniform(1e-7, 1e-3);
    const auto e = programming_energy(q, c, ic);
    const double per_dac = 32.0 * 4.0 * ic * kFluxQuantumWb;
    REQUIRE(oracle::rel_err(e.joules, static_cast<double>(6 * q + c) * per_dac) <= 1e-12);
    REQUIRE(oracle::rel_err(programming_energy(q, c, 2.0 * ic).joules, 2.0 * e.joules) <= 1e-12);
    REQUIRE(oracle::rel_err(e.thermalization_s, e.joules / 30e-6) <= 1e-12);
  }
}

TEST_CASE("programming load diagnostic") {
  const auto cur = programming_load(5436, 37440);
  CHECK(cur.bits == 5 * (5436 + 37440));
  CHECK(cur.bytes == doctest::Approx(26797.5));
  CHECK(cur.line_rate_bps == doctest::Approx(214380.0 / 42e-6));
}

TEST_CASE("readout parallelism") {
  CHECK(readout_parallelism(5436, ReadoutScheme::TimeDivision) == 52);
  CHECK(readout_parallelism(512, ReadoutScheme::TimeDivision) == 16);
  CHECK(readout_parallelism(10'000'000, ReadoutScheme::FrequencyMultiplex, 1e6) == 666'666);
  CHECK(readout_parallelism(512, ReadoutScheme::FrequencyMultiplex, 1e6) == 512);
  CHECK(readout_parallelism(2048, ReadoutScheme::FrequencyMultiplex, 1e3) == 666);
  CHECK_THROWS_AS(readout_parallelism(0, ReadoutScheme::TimeDivision), DomainError);
  CHECK_THROWS_AS(readout_parallelism(10, ReadoutScheme::FrequencyMultiplex, 0.0), DomainError);
}

TEST_CASE("property: time-division readout is floor(sqrt(n/2))") {
  prop::Gen gen(42);
  for (int i = 0; i < prop::kCases; ++i) {
    const std::uint64_t n = gen.u64(1, 1ULL << 40);
    const std::uint64_t r = readout_parallelism(n, ReadoutScheme::TimeDivision);
    REQUIRE(r * r * 2 <= n);
    REQUIRE(n < (r + 1) * (r + 1) * 2);
  }
}

TEST_CASE("refrigerator qubit capacity") {
  const auto cap = refrigerator_qubit_capacity();
  CHECK(oracle::rel_err(static_cast<double>(cap.dies), 1.75e6) <= 0.01);
  CHECK(oracle::rel_err(static_cast<double>(cap.qubits), 14e6) <= 0.01);
  CHECK(cap.qubits == cap.dies * 8);

  // The closed form tracks an explicit enumeration of whole dies in the disc.
  CHECK(oracle::rel_err(static_cast<double>(cap.dies),
                        static_cast<double>(oracle::enumerate_dies(250.0, 0.335))) <= 2e-3);

  // Doubling the radius: 4x the area term, 2x the perimeter term.
  const double ratio = 250.0 / 0.335;
  const double area = std::numbers::pi * ratio * ratio;
  const double perimeter = 1.16 * std::numbers::pi * ratio;
  const auto big = refrigerator_qubit_capacity(DeviceGeometry{500.0, 0.335, 8});
  CHECK(std::fabs(static_cast<double>(big.dies) - std::floor(4 * area - 2 * perimeter)) <= 1.0);
  CHECK(std::fabs(static_cast<double>(big.dies) - (4.0 * cap.dies + 2 * perimeter)) <= 5.0);
}

TEST_CASE("capacity clamps to zero when the perimeter term dominates") {
  const auto cap = refrigerator_qubit_capacity(DeviceGeometry{1.16, 1.0, 8});
  CHECK(cap.dies == 0);
  CHECK(cap.qubits == 0);
  CHECK(refrigerator_qubit_capacity(DeviceGeometry{1.1, 1.0, 8}).dies == 0);
  CHECK_THROWS_AS(refrigerator_qubit_capacity(DeviceGeometry{0.3, 0.335, 8}), DomainError);
}

TEST_CASE("property: QMI run time is affine in samples") {
  prop::Gen gen(43);
  for (int i = 0; i < prop::kCases; ++i) {
    QaProfile p;
    p.programming_us = gen.uniform(1, 100);
    p.anneal_us = gen.uniform(0.01, 10);
    p.readout_us = gen.uniform(0.01, 200);
    p.readout_delay_us = gen.uniform(0.01, 1000);
    const int n = gen.integer(0, 10000);
    REQUIRE(qmi_runtime_us(p, n + 1) - qmi_runtime_us(p, n) ==
            doctest::Approx(p.anneal_us + p.readout_us + p.readout_delay_us));
  }
}
