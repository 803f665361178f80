#pragma once

#include <cstdint>
#include <optional>
#include <span>
#include <vector>

#include "qaran/cmos_model.hpp"
#include "qaran/qa_hardware.hpp"
#include "qaran/qubit_budget.hpp"
#include "qaran/ran_power.hpp"
#include "qaran/workload.hpp"

namespace qaran {

struct CostAssumptions {
  double electricity_usd_per_kwh = 0.143;
  double co2_lb_per_kwh = 0.92;
  double hours_per_year = 8760.0;

  void validate() const;
};

inline constexpr double kPoundsPerMetricKiloton = 2'204'622.6;

struct CostRow {
  double years = 0.0;
  double opex_savings_usd = 0.0;
  double co2_savings_kt = 0.0;
  double breakeven_capex_usd = 0.0;  // QA CapEx below this pays off within `years`
};

struct CostReport {
  double delta_power_w = 0.0;  // CMOS minus QA
  std::vector<CostRow> rows;
};

CostReport cost_report(double delta_power_w, std::span<const double> horizons_years,
                       const CostAssumptions& assumptions = {});

enum class TopologyKind { BaseStation, CRan };

struct Topology {
  TopologyKind kind = TopologyKind::BaseStation;
  int base_stations = 1;
  FronthaulLink fronthaul = FronthaulLink::at_reference_rate(100e9, 100e9);

  static Topology base_station();
  /// `n` identical base stations sharing one BBU pool; each RRH gets `link`.
  static Topology cran(int n, const FronthaulLink& link = FronthaulLink::at_reference_rate(100e9, 100e9));
  void validate() const;
};

struct CompareOptions {
  PowerSystemLosses losses;
  RadioConstants radio;
  BudgetOptions budget;
  DeviceGeometry geometry;
};

/// Whether a task runs on the annealer in the QA system. PCP and CPRI (control
/// and transfer) always stay on CMOS.
bool runs_on_annealer(BbuTask task);

struct Comparison {
  PowerBreakdown cmos;
  PowerBreakdown qa;
  QubitBudget budget;              // per base station
  std::uint64_t system_qubits = 0; // budget.total times the number of base stations
  RefrigeratorCapacity capacity;
  bool capacity_exceeded = false;

  double delta_w() const { return cmos.total_w - qa.total_w; }
  bool qa_advantage() const { return qa.total_w < cmos.total_w; }
};

/// CMOS and QA processing of the same TOPS target. Exceeding the refrigerator
/// capacity is flagged in the result rather than thrown.
Comparison compare(const CellScenario& scenario, const CmosProfile& cmos, const QaProfile& qa,
                   std::int64_t samples, const Topology& topology = {},
                   const CompareOptions& options = {});

struct BandwidthGrid {
  double start_mhz = 10.0;
  double stop_mhz = 1000.0;
  double step_mhz = 10.0;

  void validate() const;
  std::vector<double> points() const;
};

struct CrossoverOptions {
  BandwidthGrid grid;
  /// Template for modulation, coding rate and duty cycles; bandwidth and
  /// antennas are overwritten.
  CellScenario base{20.0, 6, 0.5, 1, 1.0, 1.0};
};

/// BBU power of the CMOS and QA systems for one base station (no power
/// system, no radio).
struct BbuComparison {
  double cmos_w = 0.0;
  double qa_w = 0.0;
};

BbuComparison bbu_comparison(const CellScenario& scenario, const CmosProfile& cmos, const QaProfile& qa);

/// Smallest grid bandwidth at which the QA BBU draws less than the CMOS BBU.
std::optional<double> crossover_bandwidth(int antennas, const CmosProfile& cmos, const QaProfile& qa,
                                          const CrossoverOptions& options = {});

}  // namespace qaran
