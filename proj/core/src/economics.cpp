#include "qaran/economics.hpp"

#include <cmath>
#include <vector>

#include "qaran/error.hpp"
#include "qaran/format.hpp"

namespace qaran {
namespace {

std::array<bool, kTaskCount> task_mask(bool (*pred)(BbuTask)) {
  std::array<bool, kTaskCount> mask{};
  for (BbuTask t : kAllTasks) mask[index_of(t)] = pred(t);
  return mask;
}

bool on_cmos_in_qa_system(BbuTask t) { return !runs_on_annealer(t); }
bool any_task(BbuTask) { return true; }
bool not_fft(BbuTask t) { return t != BbuTask::FFT; }
bool fft_only(BbuTask t) { return t == BbuTask::FFT; }
bool qa_pool_cmos(BbuTask t) { return !runs_on_annealer(t) && t != BbuTask::FFT; }

CmosBbuPower scaled(CmosBbuPower p, double factor) {
  for (double& w : p.dynamic_w) w *= factor;
  p.leakage_w *= factor;
  return p;
}

PowerBreakdown cran_breakdown(const CmosBbuPower& pool_per_bs, double qa_w, const CmosBbuPower& rrh_compute,
                              int antennas, const Topology& topology, const CompareOptions& options) {
  const RrhSite site{rrh_compute.total(), antennas * options.radio.ru_per_chain_w,
                     antennas * options.radio.pa_per_antenna_w, options.losses, topology.fronthaul};
  const std::vector<RrhSite> sites(static_cast<std::size_t>(topology.base_stations), site);
  return cran_power(scaled(pool_per_bs, topology.base_stations), qa_w, options.losses, sites);
}

}  // namespace

void CostAssumptions::validate() const {
  if (!(electricity_usd_per_kwh > 0.0) || !(co2_lb_per_kwh > 0.0) || !(hours_per_year > 0.0)) {
    throw DomainError("cost assumptions: price, CO2 factor and hours per year must be positive");
  }
}

CostReport cost_report(double delta_power_w, std::span<const double> horizons_years,
                       const CostAssumptions& assumptions) {
  assumptions.validate();
  if (horizons_years.empty()) throw DomainError("cost_report: at least one horizon is required");
  CostReport report;
  report.delta_power_w = delta_power_w;
  for (double years : horizons_years) {
    if (!(years >= 0.0)) throw DomainError("cost_report: horizons must be non-negative");
    const double kwh = delta_power_w / 1000.0 * assumptions.hours_per_year * years;
    CostRow row;
    row.years = years;
    row.opex_savings_usd = kwh * assumptions.electricity_usd_per_kwh;
    row.co2_savings_kt = kwh * assumptions.co2_lb_per_kwh / kPoundsPerMetricKiloton;
    row.breakeven_capex_usd = row.opex_savings_usd;
    report.rows.push_back(row);
  }
  return report;
}

Topology Topology::base_station() { return Topology{}; }

Topology Topology::cran(int n, const FronthaulLink& link) {
  Topology t{TopologyKind::CRan, n, link};
  t.validate();
  return t;
}

void Topology::validate() const {
  if (base_stations < 1) throw DomainError("topology: at least one base station is required");
  if (kind == TopologyKind::CRan) fronthaul.validate();
}

bool runs_on_annealer(BbuTask task) { return task != BbuTask::PCP && task != BbuTask::CPRI; }

Comparison compare(const CellScenario& scenario, const CmosProfile& cmos, const QaProfile& qa,
                   std::int64_t samples, const Topology& topology, const CompareOptions& options) {
  topology.validate();
  qa.validate();
  const BbuWorkload load = workload(scenario);
  const double refrigeration_w = qa.refrigeration_kw * 1000.0;

  Comparison out;
  switch (topology.kind) {
    case TopologyKind::BaseStation:
      out.cmos = bs_power(cmos_bbu_power(load, cmos, task_mask(any_task)), 0.0, scenario.antennas,
                          options.losses, options.radio);
      out.qa = bs_power(cmos_bbu_power(load, cmos, task_mask(on_cmos_in_qa_system)), refrigeration_w,
                        scenario.antennas, options.losses, options.radio);
      break;
    case TopologyKind::CRan: {
      // Low layer-1 (FFT) stays at the RRH sites on CMOS in both systems.
      const CmosBbuPower rrh = cmos_bbu_power(load, cmos, task_mask(fft_only));
      out.cmos = cran_breakdown(cmos_bbu_power(load, cmos, task_mask(not_fft)), 0.0, rrh,
                                scenario.antennas, topology, options);
      out.qa = cran_breakdown(cmos_bbu_power(load, cmos, task_mask(qa_pool_cmos)), refrigeration_w, rrh,
                              scenario.antennas, topology, options);
      break;
    }
  }

  out.budget = total_budget(scenario, qa, samples, options.budget);
  out.system_qubits = out.budget.total * static_cast<std::uint64_t>(topology.base_stations);
  out.capacity = refrigerator_qubit_capacity(options.geometry);
  out.capacity_exceeded = out.system_qubits > out.capacity.qubits;
  return out;
}

void BandwidthGrid::validate() const {
  if (!(start_mhz > 0.0) || !(step_mhz > 0.0) || !(stop_mhz >= start_mhz)) {
    throw DomainError("bandwidth grid: need 0 < start <= stop and a positive step");
  }
}

std::vector<double> BandwidthGrid::points() const {
  validate();
  std::vector<double> out;
  // Index-based so accumulated rounding never drops the last point.
  const auto n = static_cast<std::size_t>(std::floor((stop_mhz - start_mhz) / step_mhz + 1e-9)) + 1;
  out.reserve(n);
  for (std::size_t i = 0; i < n; ++i) out.push_back(start_mhz + static_cast<double>(i) * step_mhz);
  return out;
}

BbuComparison bbu_comparison(const CellScenario& scenario, const CmosProfile& cmos, const QaProfile& qa) {
  qa.validate();
  const BbuWorkload load = workload(scenario);
  BbuComparison out;
  out.cmos_w = cmos_bbu_power(load, cmos, task_mask(any_task)).total();
  out.qa_w = cmos_bbu_power(load, cmos, task_mask(on_cmos_in_qa_system)).total() +
             qa.refrigeration_kw * 1000.0;
  return out;
}

std::optional<double> crossover_bandwidth(int antennas, const CmosProfile& cmos, const QaProfile& qa,
                                          const CrossoverOptions& options) {
  if (antennas < 1) throw DomainError("crossover_bandwidth: antennas must be >= 1");
  CellScenario scenario = options.base;
  scenario.antennas = antennas;
  for (double bw : options.grid.points()) {
    scenario.bandwidth_mhz = bw;
    const BbuComparison c = bbu_comparison(scenario, cmos, qa);
    if (c.qa_w < c.cmos_w) return bw;
  }
  return std::nullopt;
}

}  // namespace qaran
