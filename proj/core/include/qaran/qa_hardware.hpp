#pragma once

#include <cstdint>
#include <string>

namespace qaran {

/// Magnetic flux quantum h/2e in webers.
inline constexpr double kFluxQuantumWb = 2.067833848e-15;

/// Quantum annealer device parameters. Times are microseconds per QMI
/// (programming) or per sample (anneal, readout, readout delay).
struct QaProfile {
  std::string name = "projected";
  double programming_us = 42.0;  // coefficient programming + thermalization + reset
  double anneal_us = 1.0;
  double readout_us = 1.0;
  double readout_delay_us = 1.0;
  double refrigeration_kw = 25.0;
  double cooling_power_w = 30e-6;  // available at the QPU stage
  double dac_critical_current_a = 55e-6;
  double energy_kappa = 4.0;  // dissipation per SFQ in units of Ic * Phi0
  int sfq_per_dac = 32;       // worst case, -16 to +16
  int couplers_per_qubit = 15;
  int dacs_per_qubit = 6;
  int dacs_per_coupler = 1;
  int bit_precision = 5;

  void validate() const;

  double sample_us() const { return anneal_us + readout_us + readout_delay_us; }

  /// Projected device: 42 us programming, 1 us anneal/readout/delay.
  static QaProfile projected();
  /// Status-quo device: mid-range programming (4-40 us) and readout (25-150 us),
  /// 1 ms default readout delay.
  static QaProfile current();
};

/// Looks up "projected" or "current"; throws DomainError otherwise.
QaProfile builtin_qa_profile(const std::string& name);

/// programming + samples * (anneal + readout + readout delay), in microseconds.
double qmi_runtime_us(const QaProfile& profile, std::int64_t samples);

struct ProgrammingEnergy {
  std::uint64_t dac_count = 0;
  double joules = 0.0;
  double thermalization_s = 0.0;
};

/// Worst-case on-chip dissipation of reprogramming every qubit and coupler:
/// n_dac * sfq_per_dac * kappa * Ic * Phi0, cooled at profile.cooling_power_w.
ProgrammingEnergy programming_energy(std::uint64_t qubits, std::uint64_t couplers,
                                     double critical_current_a, const QaProfile& profile = {});

/// Control-line load implied by one worst-case reprogramming.
struct ProgrammingLoad {
  std::uint64_t bits = 0;
  double bytes = 0.0;
  double line_rate_bps = 0.0;  // bits / programming time
};

ProgrammingLoad programming_load(std::uint64_t qubits, std::uint64_t couplers,
                                 const QaProfile& profile = {});

enum class ReadoutScheme { TimeDivision, FrequencyMultiplex };

/// Qubits read out simultaneously. Frequency multiplexing needs the
/// microresonator quality factor.
std::uint64_t readout_parallelism(std::uint64_t qubits, ReadoutScheme scheme,
                                  double quality_factor = 0.0);

/// Wafer-in-refrigerator packing of square dies.
struct DeviceGeometry {
  double wafer_radius_mm = 250.0;
  double die_edge_mm = 0.335;
  std::uint64_t qubits_per_die = 8;

  void validate() const;
};

struct RefrigeratorCapacity {
  std::uint64_t dies = 0;
  std::uint64_t qubits = 0;
};

/// N_d = pi R^2 / L^2 - 1.16 pi R / L, floored and clamped at zero.
RefrigeratorCapacity refrigerator_qubit_capacity(const DeviceGeometry& geometry = {});

}  // namespace qaran
