#pragma once

#include <cstdint>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "qaran/qaran.hpp"

namespace qaran::cli {

inline constexpr int kConfigSchemaVersion = 1;

/// Malformed or inconsistent configuration. The message names the file and
/// either a line:column (syntax) or a JSON pointer (field).
class ConfigError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

struct SweepAxes {
  std::vector<double> bandwidth_mhz;
  std::vector<int> antennas;
  std::vector<std::int64_t> samples;

  bool empty() const { return bandwidth_mhz.empty() && antennas.empty() && samples.empty(); }
};

struct RunConfig {
  std::vector<CellScenario> scenarios{CellScenario{400.0, 6, 0.5, 64, 1.0, 1.0}};
  EfficiencyMode efficiency_mode = EfficiencyMode::AsPrinted;
  std::vector<CmosProfile> cmos = builtin_cmos_profiles(EfficiencyMode::AsPrinted);
  QaProfile qa = QaProfile::projected();
  std::vector<std::int64_t> samples{20};
  BudgetOptions budget;
  CostAssumptions costs;
  std::vector<double> horizons_years{1.0, 2.0, 5.0, 10.0};
  Topology topology;
  PowerSystemLosses losses;
  RadioConstants radio;
  DeviceGeometry geometry;
  BandwidthGrid crossover_grid;
  std::vector<int> crossover_antennas{32, 64, 128, 256};
  std::vector<HistoricalPoint> history = default_qubit_history();
  SweepAxes sweep;
  std::optional<std::string> format;

  CompareOptions compare_options() const;
};

/// Parse a config document. `origin` is used in error messages.
RunConfig parse_config(const std::string& text, const std::string& origin = "<config>");
RunConfig load_config(const std::string& path);

/// "bandwidth=50,100,200" or "bandwidth=10:100:10" (inclusive range).
void apply_sweep_flag(SweepAxes& axes, const std::string& flag);

}  // namespace qaran::cli
