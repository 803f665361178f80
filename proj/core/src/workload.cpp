#include "qaran/workload.hpp"

#include <cmath>

#include "qaran/error.hpp"
#include "qaran/format.hpp"

namespace qaran {
namespace {

constexpr std::array<std::string_view, kTaskCount> kTaskNames{
    "DPD", "Filter", "FFT", "FDlin", "FDnl", "FEC", "CPRI", "PCP"};

// Reference column of the published BBU target table (TOPS).
constexpr std::array<double, kTaskCount> kReferenceTops{
    0.160, 0.400, 0.160, 0.090, 0.030, 0.140, 0.720, 0.400};

constexpr std::array<ScalingExponents, kTaskCount> kExponents{{
    {{1, 0, 0, 1, 1, 0}},  // DPD
    {{1, 0, 0, 1, 1, 0}},  // Filter
    {{1, 0, 0, 1, 1, 0}},  // FFT
    {{1, 0, 0, 1, 1, 1}},  // FDlin
    {{1, 0, 0, 2, 1, 1}},  // FDnl
    {{1, 1, 1, 1, 1, 1}},  // FEC
    {{1, 1, 1, 1, 1, 1}},  // CPRI
    {{0, 0, 0, 1, 0, 0}},  // PCP
}};

bool is_supported_modulation(int bits) {
  return bits == 1 || bits == 2 || bits == 4 || bits == 6 || bits == 8;
}

}  // namespace

std::string_view task_name(BbuTask task) { return kTaskNames[index_of(task)]; }

std::optional<BbuTask> parse_task(std::string_view name) {
  for (BbuTask t : kAllTasks) {
    if (kTaskNames[index_of(t)] == name) return t;
  }
  return std::nullopt;
}

void CellScenario::validate() const {
  if (!(bandwidth_mhz > 0.0) || !std::isfinite(bandwidth_mhz)) {
    throw DomainError("scenario: bandwidth must be positive, got " + format_shortest(bandwidth_mhz));
  }
  if (!is_supported_modulation(modulation_bits)) {
    throw DomainError("scenario: modulation_bits must be one of {1,2,4,6,8}, got " +
                      std::to_string(modulation_bits));
  }
  if (!(coding_rate > 0.0 && coding_rate <= 1.0)) {
    throw DomainError("scenario: coding_rate must lie in (0,1], got " + format_shortest(coding_rate));
  }
  if (antennas < 1) {
    throw DomainError("scenario: antennas must be >= 1, got " + std::to_string(antennas));
  }
  if (!(duty_time > 0.0 && duty_time <= 1.0)) {
    throw DomainError("scenario: duty_time must lie in (0,1], got " + format_shortest(duty_time));
  }
  if (!(duty_freq > 0.0 && duty_freq <= 1.0)) {
    throw DomainError("scenario: duty_freq must lie in (0,1], got " + format_shortest(duty_freq));
  }
}

CellScenario CellScenario::reference() { return CellScenario{}; }

ScalingExponents scaling_exponents(BbuTask task) { return kExponents[index_of(task)]; }

double reference_tops(BbuTask task) { return kReferenceTops[index_of(task)]; }

BbuWorkload::BbuWorkload(const std::array<double, kTaskCount>& tops) : tops_(tops) {
  for (double v : tops_) total_ += v;
}

BbuWorkload reference_workload() { return BbuWorkload(kReferenceTops); }

double scale_task(BbuTask task, const CellScenario& scenario) {
  scenario.validate();
  const CellScenario ref = CellScenario::reference();
  const std::array<double, 6> ratios{
      scenario.bandwidth_mhz / ref.bandwidth_mhz,
      static_cast<double>(scenario.modulation_bits) / ref.modulation_bits,
      scenario.coding_rate / ref.coding_rate,
      static_cast<double>(scenario.antennas) / ref.antennas,
      scenario.duty_time / ref.duty_time,
      scenario.duty_freq / ref.duty_freq,
  };
  const auto& exps = kExponents[index_of(task)].s;
  double tops = kReferenceTops[index_of(task)];
  for (std::size_t k = 0; k < ratios.size(); ++k) {
    for (int e = 0; e < exps[k]; ++e) tops *= ratios[k];
  }
  return tops;
}

BbuWorkload workload(const CellScenario& scenario) {
  scenario.validate();
  std::array<double, kTaskCount> tops{};
  for (BbuTask t : kAllTasks) tops[index_of(t)] = scale_task(t, scenario);
  return BbuWorkload(tops);
}

std::string scenario_label(const CellScenario& scenario) {
  return format_shortest(scenario.bandwidth_mhz) + "MHz/" + std::to_string(scenario.antennas) + "ant";
}

}  // namespace qaran
