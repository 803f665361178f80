#include "qaran/timeline.hpp"

#include <algorithm>
#include <cmath>

#include "qaran/error.hpp"
#include "qaran/format.hpp"
#include "qaran/qubit_budget.hpp"

namespace qaran {
namespace {

const HistoricalPoint& point_for(std::span<const HistoricalPoint> history, int year) {
  auto it = std::find_if(history.begin(), history.end(),
                         [year](const HistoricalPoint& p) { return p.year == year; });
  if (it == history.end()) {
    throw DomainError("qubit history has no entry for " + std::to_string(year));
  }
  return *it;
}

std::string status_label(const TimelineProjection& p) {
  std::string label = scenario_label(p.scenario) + ": ";
  bool any_advantage = false;
  bool all_advantage = !p.nodes.empty();
  for (const auto& n : p.nodes) {
    any_advantage = any_advantage || n.qa_advantage;
    all_advantage = all_advantage && n.qa_advantage;
  }
  if (all_advantage) {
    label += "QA power advantage over all CMOS nodes";
  } else if (any_advantage) {
    label += "QA power advantage over";
    for (const auto& n : p.nodes) {
      if (n.qa_advantage) label += " " + n.node_label;
    }
  } else {
    label += "feasible, QA power-disadvantaged";
  }
  return label;
}

}  // namespace

const std::vector<HistoricalPoint>& default_qubit_history() {
  static const std::vector<HistoricalPoint> history{
      {2011, 128}, {2013, 512}, {2015, 1152}, {2017, 2048}, {2020, 5436}, {2023, 7440}};
  return history;
}

void GrowthTrend::validate() const {
  if (!(factor > 1.0)) throw DomainError("growth trend: factor must exceed 1");
  if (!(anchor_qubits >= 1.0)) throw DomainError("growth trend: anchor qubits must be >= 1");
  if (!(period_years > 0.0)) throw DomainError("growth trend: period must be positive");
}

GrowthTrend GrowthTrend::through(const HistoricalPoint& earlier, const HistoricalPoint& later) {
  if (later.year <= earlier.year || earlier.qubits == 0) {
    throw DomainError("growth trend: need two increasing years with non-zero qubit counts");
  }
  GrowthTrend t{static_cast<double>(later.year), static_cast<double>(later.qubits),
                static_cast<double>(later.qubits) / static_cast<double>(earlier.qubits),
                static_cast<double>(later.year - earlier.year)};
  t.validate();
  return t;
}

GrowthTrend GrowthTrend::best_case(std::span<const HistoricalPoint> history) {
  return through(point_for(history, 2017), point_for(history, 2020));
}

GrowthTrend GrowthTrend::worst_case(std::span<const HistoricalPoint> history) {
  return through(point_for(history, 2020), point_for(history, 2023));
}

double qubits_at_fractional(const GrowthTrend& trend, double year) {
  trend.validate();
  if (year < trend.anchor_year) {
    throw DomainError("qubits_at: year " + format_shortest(year) + " precedes trend anchor " +
                      format_shortest(trend.anchor_year));
  }
  return trend.anchor_qubits * std::pow(trend.factor, (year - trend.anchor_year) / trend.period_years);
}

std::uint64_t qubits_at(const GrowthTrend& trend, int year) {
  const double q = std::floor(qubits_at_fractional(trend, year));
  // 2^64 is exactly representable; anything at or above it does not fit.
  if (!(q < 18446744073709551616.0)) throw DomainError("qubits_at: count overflows a 64-bit integer");
  return static_cast<std::uint64_t>(q);
}

int year_available(const GrowthTrend& trend, std::uint64_t required_qubits) {
  trend.validate();
  if (required_qubits < 1) throw DomainError("year_available: required qubits must be >= 1");
  const int anchor = static_cast<int>(std::ceil(trend.anchor_year));
  const double periods = std::log(static_cast<double>(required_qubits) / trend.anchor_qubits) /
                         std::log(trend.factor);
  int year = std::max(anchor, static_cast<int>(std::ceil(trend.anchor_year + periods * trend.period_years)));
  // Settle against the floored count so the answer is consistent with qubits_at.
  while (year > anchor && qubits_at(trend, year - 1) >= required_qubits) --year;
  while (qubits_at(trend, year) < required_qubits) ++year;
  return year;
}

std::vector<TimelineProjection> milestones(std::span<const CellScenario> scenarios,
                                           std::span<const CmosProfile> cmos_profiles, const QaProfile& qa,
                                           const MilestoneOptions& options) {
  if (scenarios.empty()) throw DomainError("milestones: scenario grid is empty");
  const GrowthTrend best = GrowthTrend::best_case(options.history);
  const GrowthTrend worst = GrowthTrend::worst_case(options.history);

  std::vector<TimelineProjection> out;
  out.reserve(scenarios.size());
  for (const CellScenario& s : scenarios) {
    TimelineProjection p;
    p.scenario = s;
    p.required_qubits = total_budget(s, qa, options.samples, options.budget).total;
    p.year_best = year_available(best, std::max<std::uint64_t>(p.required_qubits, 1));
    p.year_worst = year_available(worst, std::max<std::uint64_t>(p.required_qubits, 1));
    for (const CmosProfile& cmos : cmos_profiles) {
      const BbuComparison c = bbu_comparison(s, cmos, qa);
      CrossoverOptions xo = options.crossover;
      xo.base = s;
      p.nodes.push_back(NodeStatus{cmos.node_label, c.qa_w < c.cmos_w, c.cmos_w, c.qa_w,
                                   crossover_bandwidth(s.antennas, cmos, qa, xo)});
    }
    p.milestone_label = status_label(p);
    out.push_back(std::move(p));
  }
  return out;
}

}  // namespace qaran
