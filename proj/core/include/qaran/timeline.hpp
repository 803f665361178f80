#pragma once

#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "qaran/cmos_model.hpp"
#include "qaran/economics.hpp"
#include "qaran/qa_hardware.hpp"
#include "qaran/workload.hpp"

namespace qaran {

struct HistoricalPoint {
  int year = 0;
  std::uint64_t qubits = 0;
};

/// Shipped annealer sizes from 2011 on plus the announced 2023 device.
const std::vector<HistoricalPoint>& default_qubit_history();

/// Exponential growth: anchor_qubits * factor^((year - anchor_year) / period).
struct GrowthTrend {
  double anchor_year = 2020.0;
  double anchor_qubits = 5436.0;
  double factor = 5436.0 / 2048.0;
  double period_years = 3.0;

  void validate() const;

  /// Trend through two points, anchored at the later one.
  static GrowthTrend through(const HistoricalPoint& earlier, const HistoricalPoint& later);
  /// 2017 -> 2020 growth, anchored at 2020.
  static GrowthTrend best_case(std::span<const HistoricalPoint> history = default_qubit_history());
  /// 2020 -> 2023 growth, anchored at 2023.
  static GrowthTrend worst_case(std::span<const HistoricalPoint> history = default_qubit_history());
};

/// Fractional-year evaluation, not floored.
double qubits_at_fractional(const GrowthTrend& trend, double year);

/// Floored qubit count; throws DomainError for years before the anchor.
std::uint64_t qubits_at(const GrowthTrend& trend, int year);

/// Smallest integer year (>= anchor) with qubits_at(year) >= required.
int year_available(const GrowthTrend& trend, std::uint64_t required_qubits);

struct NodeStatus {
  std::string node_label;
  bool qa_advantage = false;   // QA BBU below CMOS BBU at this scenario
  double cmos_bbu_w = 0.0;
  double qa_bbu_w = 0.0;
  std::optional<double> crossover_mhz;  // at this scenario's antenna count
};

struct TimelineProjection {
  CellScenario scenario;
  std::uint64_t required_qubits = 0;
  int year_best = 0;
  int year_worst = 0;
  std::string milestone_label;
  std::vector<NodeStatus> nodes;
};

struct MilestoneOptions {
  std::int64_t samples = 20;
  BudgetOptions budget;
  CrossoverOptions crossover;
  std::vector<HistoricalPoint> history = default_qubit_history();
};

/// Qubit requirement, availability years under both trends, and power
/// standing against each CMOS node for every scenario. Throws DomainError
/// for an empty grid.
std::vector<TimelineProjection> milestones(std::span<const CellScenario> scenarios,
                                           std::span<const CmosProfile> cmos_profiles, const QaProfile& qa,
                                           const MilestoneOptions& options = {});

}  // namespace qaran
