#include "qaran/qa_hardware.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>

#include "qaran/error.hpp"
#include "qaran/format.hpp"

namespace qaran {
namespace {

void require_positive(double v, const char* field) {
  if (!(v > 0.0) || !std::isfinite(v)) {
    throw DomainError(std::string("qa profile: ") + field + " must be positive, got " +
                      format_shortest(v));
  }
}

void require_positive(int v, const char* field) {
  if (v <= 0) {
    throw DomainError(std::string("qa profile: ") + field + " must be positive, got " +
                      std::to_string(v));
  }
}

// floor(sqrt(n)) without trusting the rounding of std::sqrt for large n.
std::uint64_t isqrt(std::uint64_t n) {
  auto r = static_cast<std::uint64_t>(std::sqrt(static_cast<double>(n)));
  while (r * r > n) --r;
  while ((r + 1) * (r + 1) <= n) ++r;
  return r;
}

}  // namespace

void QaProfile::validate() const {
  require_positive(programming_us, "programming_us");
  require_positive(anneal_us, "anneal_us");
  require_positive(readout_us, "readout_us");
  require_positive(readout_delay_us, "readout_delay_us");
  require_positive(refrigeration_kw, "refrigeration_kw");
  require_positive(cooling_power_w, "cooling_power_w");
  require_positive(dac_critical_current_a, "dac_critical_current_a");
  require_positive(energy_kappa, "energy_kappa");
  require_positive(sfq_per_dac, "sfq_per_dac");
  require_positive(couplers_per_qubit, "couplers_per_qubit");
  require_positive(dacs_per_qubit, "dacs_per_qubit");
  require_positive(dacs_per_coupler, "dacs_per_coupler");
  require_positive(bit_precision, "bit_precision");
}

QaProfile QaProfile::projected() { return QaProfile{}; }

QaProfile QaProfile::current() {
  QaProfile p;
  p.name = "current";
  p.programming_us = (4.0 + 40.0) / 2.0;
  p.anneal_us = 1.0;
  p.readout_us = (25.0 + 150.0) / 2.0;
  p.readout_delay_us = 1000.0;
  return p;
}

QaProfile builtin_qa_profile(const std::string& name) {
  if (name == "projected") return QaProfile::projected();
  if (name == "current") return QaProfile::current();
  throw DomainError("unknown built-in QA profile '" + name + "'");
}

double qmi_runtime_us(const QaProfile& profile, std::int64_t samples) {
  profile.validate();
  if (samples < 0) throw DomainError("qmi_runtime: samples must be >= 0");
  return profile.programming_us + static_cast<double>(samples) * profile.sample_us();
}

ProgrammingEnergy programming_energy(std::uint64_t qubits, std::uint64_t couplers,
                                     double critical_current_a, const QaProfile& profile) {
  profile.validate();
  if (!(critical_current_a > 0.0)) {
    throw DomainError("programming_energy: critical current must be positive");
  }
  ProgrammingEnergy out;
  out.dac_count = qubits * static_cast<std::uint64_t>(profile.dacs_per_qubit) +
                  couplers * static_cast<std::uint64_t>(profile.dacs_per_coupler);
  out.joules = static_cast<double>(out.dac_count) * profile.sfq_per_dac * profile.energy_kappa *
               critical_current_a * kFluxQuantumWb;
  out.thermalization_s = out.joules / profile.cooling_power_w;
  return out;
}

ProgrammingLoad programming_load(std::uint64_t qubits, std::uint64_t couplers,
                                 const QaProfile& profile) {
  profile.validate();
  ProgrammingLoad out;
  out.bits = static_cast<std::uint64_t>(profile.bit_precision) * (qubits + couplers);
  out.bytes = static_cast<double>(out.bits) / 8.0;
  out.line_rate_bps = static_cast<double>(out.bits) / (profile.programming_us * 1e-6);
  return out;
}

std::uint64_t readout_parallelism(std::uint64_t qubits, ReadoutScheme scheme,
                                  double quality_factor) {
  if (qubits < 1) throw DomainError("readout_parallelism: qubits must be >= 1");
  switch (scheme) {
    case ReadoutScheme::TimeDivision:
      // sqrt(N/2) flux bias lines, one qubit each at a time.
      return isqrt(qubits / 2);
    case ReadoutScheme::FrequencyMultiplex: {
      if (!(quality_factor >= 1.0)) {
        throw DomainError("readout_parallelism: quality factor must be >= 1");
      }
      // 4 GHz band over 6/Qr GHz line widths.
      const auto channels = static_cast<std::uint64_t>(std::floor(4.0 * quality_factor / 6.0));
      return std::min(qubits, channels);
    }
  }
  throw DomainError("readout_parallelism: unknown scheme");
}

void DeviceGeometry::validate() const {
  if (!(die_edge_mm > 0.0)) throw DomainError("device geometry: die edge must be positive");
  if (!(wafer_radius_mm > die_edge_mm)) {
    throw DomainError("device geometry: wafer radius must exceed die edge");
  }
  if (qubits_per_die < 1) throw DomainError("device geometry: qubits_per_die must be >= 1");
}

RefrigeratorCapacity refrigerator_qubit_capacity(const DeviceGeometry& geometry) {
  geometry.validate();
  const double r = geometry.wafer_radius_mm / geometry.die_edge_mm;
  const double dies = std::numbers::pi * r * r - 1.16 * std::numbers::pi * r;
  RefrigeratorCapacity out;
  out.dies = dies > 0.0 ? static_cast<std::uint64_t>(std::floor(dies)) : 0;
  out.qubits = out.dies * geometry.qubits_per_die;
  return out;
}

}  // namespace qaran
