#include "commands.hpp"

#include <algorithm>
#include <future>
#include <thread>

#include <json.hpp>

namespace qaran::cli {

// Defined in reference_tables.cpp.
Report reference_table(const std::string& name, const RunConfig& config, std::vector<Warning>& warnings);

namespace {

struct EvalPoint {
  CellScenario scenario;
  std::int64_t samples = 0;
};

struct Rows {
  std::vector<std::vector<Cell>> rows;
  std::vector<Warning> warnings;
};

std::string topology_name(const Topology& t) { return t.kind == TopologyKind::CRan ? "cran" : "bs"; }

Cell yes_no(bool b) { return Cell::str(b ? "yes" : "no"); }

std::vector<CellScenario> expand_scenarios(const RunConfig& cfg, std::vector<Warning>& warnings) {
  std::vector<CellScenario> out;
  for (const CellScenario& base : cfg.scenarios) {
    const std::vector<double> bws = cfg.sweep.bandwidth_mhz.empty() ? std::vector<double>{base.bandwidth_mhz}
                                                                    : cfg.sweep.bandwidth_mhz;
    const std::vector<int> ants =
        cfg.sweep.antennas.empty() ? std::vector<int>{base.antennas} : cfg.sweep.antennas;
    for (double bw : bws) {
      for (int ant : ants) {
        CellScenario s = base;
        s.bandwidth_mhz = bw;
        s.antennas = ant;
        try {
          s.validate();
          out.push_back(s);
        } catch (const DomainError& e) {
          warnings.push_back({"invalid_sweep_point", "skipped bandwidth_mhz=" + format_shortest(bw) +
                                                         " antennas=" + std::to_string(ant) + ": " + e.what()});
        }
      }
    }
  }
  return out;
}

std::vector<std::int64_t> expand_samples(const RunConfig& cfg, std::vector<Warning>& warnings) {
  std::vector<std::int64_t> out;
  for (auto ns : cfg.sweep.samples.empty() ? cfg.samples : cfg.sweep.samples) {
    if (ns < 0) {
      warnings.push_back({"invalid_sweep_point", "skipped samples=" + std::to_string(ns) + ": must be >= 0"});
    } else {
      out.push_back(ns);
    }
  }
  return out;
}

std::vector<EvalPoint> expand(const RunConfig& cfg, std::vector<Warning>& warnings) {
  const auto scenarios = expand_scenarios(cfg, warnings);
  const auto samples = expand_samples(cfg, warnings);
  std::vector<EvalPoint> out;
  for (const auto& s : scenarios) {
    for (auto ns : samples) out.push_back({s, ns});
  }
  return out;
}

// Evaluates points concurrently in fixed-size waves; results come back in
// input order so emission stays deterministic.
template <typename F>
std::vector<Rows> parallel_eval(const std::vector<EvalPoint>& points, unsigned threads, F eval) {
  if (threads == 0) threads = std::max(1u, std::thread::hardware_concurrency());
  std::vector<Rows> out(points.size());
  for (std::size_t begin = 0; begin < points.size(); begin += threads) {
    const std::size_t end = std::min(points.size(), begin + threads);
    std::vector<std::future<Rows>> wave;
    for (std::size_t i = begin; i < end; ++i) {
      wave.push_back(std::async(threads > 1 ? std::launch::async : std::launch::deferred,
                                [&eval, &p = points[i]] { return eval(p); }));
    }
    for (std::size_t i = begin; i < end; ++i) out[i] = wave[i - begin].get();
  }
  return out;
}

void collect(Table& table, std::vector<Rows>&& parts, std::vector<Warning>& warnings) {
  for (auto& p : parts) {
    for (auto& r : p.rows) table.add_row(std::move(r));
    for (auto& w : p.warnings) warnings.push_back(std::move(w));
  }
}

Warning capacity_warning(const CellScenario& s, std::int64_t ns, const Comparison& c) {
  return {"capacity_exceeded", scenario_label(s) + " Ns=" + std::to_string(ns) + ": " +
                                   std::to_string(c.system_qubits) + " qubits exceed the refrigerator capacity of " +
                                   std::to_string(c.capacity.qubits)};
}

RunResult cmd_targets(const RunConfig& cfg, const RunOptions&) {
  RunResult res;
  res.report.command = "targets";
  const auto scenarios = expand_scenarios(cfg, res.warnings);
  Table t{"targets", {"task"}, {}, {"values in TOPS"}};
  std::vector<BbuWorkload> loads;
  for (const auto& s : scenarios) {
    t.columns.push_back(scenario_label(s));
    loads.push_back(workload(s));
  }
  for (BbuTask task : kAllTasks) {
    std::vector<Cell> row{Cell::str(std::string(task_name(task)))};
    for (const auto& l : loads) row.push_back(Cell::num(l[task]));
    t.add_row(std::move(row));
  }
  std::vector<Cell> total{Cell::str("Total")};
  for (const auto& l : loads) total.push_back(Cell::num(l.total()));
  t.add_row(std::move(total));
  res.report.tables.push_back(std::move(t));
  return res;
}

RunResult cmd_power(const RunConfig& cfg, const RunOptions& opt) {
  RunResult res;
  res.report.command = "power";
  Table t{"power",
          {"scenario", "topology", "base_stations", "samples", "cmos_node", "cmos_bbu_w", "cmos_power_system_w",
           "cmos_fronthaul_w", "cmos_total_w", "qa_cmos_w", "qa_refrigeration_w", "qa_power_system_w",
           "qa_total_w", "delta_w", "qa_advantage", "system_qubits", "capacity_qubits", "capacity_exceeded"},
          {},
          {"powers in watts; delta_w is CMOS minus QA"}};
  const auto points = expand(cfg, res.warnings);
  auto parts = parallel_eval(points, opt.threads, [&](const EvalPoint& p) {
    Rows r;
    for (const CmosProfile& node : cfg.cmos) {
      const Comparison c = compare(p.scenario, node, cfg.qa, p.samples, cfg.topology, cfg.compare_options());
      r.rows.push_back({Cell::str(scenario_label(p.scenario)), Cell::str(topology_name(cfg.topology)),
                        Cell::integer(cfg.topology.base_stations), Cell::integer(p.samples),
                        Cell::str(node.node_label), Cell::num(c.cmos.bbu_cmos_w + c.cmos.rrh_compute_w),
                        Cell::num(c.cmos.power_system_w), Cell::num(c.cmos.fronthaul_w), Cell::num(c.cmos.total_w),
                        Cell::num(c.qa.bbu_cmos_w + c.qa.rrh_compute_w), Cell::num(c.qa.qa_w),
                        Cell::num(c.qa.power_system_w), Cell::num(c.qa.total_w), Cell::num(c.delta_w()),
                        yes_no(c.qa_advantage()), Cell::uinteger(c.system_qubits),
                        Cell::uinteger(c.capacity.qubits), yes_no(c.capacity_exceeded)});
      if (c.capacity_exceeded && &node == &cfg.cmos.front()) r.warnings.push_back(capacity_warning(p.scenario, p.samples, c));
    }
    return r;
  });
  collect(t, std::move(parts), res.warnings);
  res.report.tables.push_back(std::move(t));
  return res;
}

RunResult cmd_qubits(const RunConfig& cfg, const RunOptions& opt) {
  RunResult res;
  res.report.command = "qubits";
  Table t{"qubits",
          {"scenario", "samples", "qmi_runtime_us", "fdnl_qubits", "fec_qubits", "covered_sum", "covered_fraction",
           "total_qubits", "base_stations", "system_qubits", "capacity_qubits", "capacity_exceeded"},
          {},
          {}};
  const auto points = expand(cfg, res.warnings);
  const RefrigeratorCapacity cap = refrigerator_qubit_capacity(cfg.geometry);
  auto parts = parallel_eval(points, opt.threads, [&](const EvalPoint& p) {
    Rows r;
    const QubitBudget b = total_budget(p.scenario, cfg.qa, p.samples, cfg.budget);
    const auto n = static_cast<std::uint64_t>(cfg.topology.base_stations);
    const std::uint64_t system = b.total * n;
    const bool exceeded = system > cap.qubits;
    auto opt_cell = [](const std::optional<std::uint64_t>& v) { return v ? Cell::uinteger(*v) : Cell::empty(); };
    r.rows.push_back({Cell::str(scenario_label(p.scenario)), Cell::integer(p.samples),
                      Cell::num(qmi_runtime_us(cfg.qa, p.samples)), opt_cell(b.per_task[index_of(BbuTask::FDnl)]),
                      opt_cell(b.per_task[index_of(BbuTask::FEC)]), Cell::uinteger(b.covered_sum()),
                      Cell::num(b.covered_fraction), Cell::uinteger(b.total), Cell::uinteger(n),
                      Cell::uinteger(system), Cell::uinteger(cap.qubits), yes_no(exceeded)});
    if (exceeded) {
      r.warnings.push_back({"capacity_exceeded", scenario_label(p.scenario) + " Ns=" + std::to_string(p.samples) +
                                                     ": " + std::to_string(system) +
                                                     " qubits exceed the refrigerator capacity of " +
                                                     std::to_string(cap.qubits)});
    }
    return r;
  });
  collect(t, std::move(parts), res.warnings);
  res.report.tables.push_back(std::move(t));
  return res;
}

RunResult cmd_economics(const RunConfig& cfg, const RunOptions& opt) {
  RunResult res;
  res.report.command = "economics";
  Table t{"economics",
          {"scenario", "topology", "base_stations", "samples", "cmos_node", "delta_w", "years", "opex_savings_usd",
           "co2_savings_kt", "breakeven_capex_usd"},
          {},
          {"positive savings favour the annealer; breakeven_capex_usd is the QA capital cost recovered within the "
           "horizon"}};
  const auto points = expand(cfg, res.warnings);
  auto parts = parallel_eval(points, opt.threads, [&](const EvalPoint& p) {
    Rows r;
    for (const CmosProfile& node : cfg.cmos) {
      const Comparison c = compare(p.scenario, node, cfg.qa, p.samples, cfg.topology, cfg.compare_options());
      const CostReport cost = cost_report(c.delta_w(), cfg.horizons_years, cfg.costs);
      for (const CostRow& row : cost.rows) {
        r.rows.push_back({Cell::str(scenario_label(p.scenario)), Cell::str(topology_name(cfg.topology)),
                          Cell::integer(cfg.topology.base_stations), Cell::integer(p.samples),
                          Cell::str(node.node_label), Cell::num(c.delta_w()), Cell::num(row.years),
                          Cell::num(row.opex_savings_usd), Cell::num(row.co2_savings_kt),
                          Cell::num(row.breakeven_capex_usd)});
      }
      if (c.capacity_exceeded && &node == &cfg.cmos.front()) r.warnings.push_back(capacity_warning(p.scenario, p.samples, c));
    }
    return r;
  });
  collect(t, std::move(parts), res.warnings);
  res.report.tables.push_back(std::move(t));
  return res;
}

RunResult cmd_timeline(const RunConfig& cfg, const RunOptions& opt) {
  RunResult res;
  res.report.command = "timeline";
  Table t{"milestones", {"scenario", "samples", "required_qubits", "year_best", "year_worst"}, {}, {}};
  for (const auto& node : cfg.cmos) {
    t.columns.push_back(node.node_label + "_qa_advantage");
    t.columns.push_back(node.node_label + "_crossover_mhz");
  }
  t.columns.push_back("status");
  const auto points = expand(cfg, res.warnings);
  auto parts = parallel_eval(points, opt.threads, [&](const EvalPoint& p) {
    MilestoneOptions mo;
    mo.samples = p.samples;
    mo.budget = cfg.budget;
    mo.crossover.grid = cfg.crossover_grid;
    mo.history = cfg.history;
    const auto m = milestones(std::span<const CellScenario>(&p.scenario, 1), cfg.cmos, cfg.qa, mo).front();
    std::vector<Cell> row{Cell::str(scenario_label(p.scenario)), Cell::integer(p.samples),
                          Cell::uinteger(m.required_qubits), Cell::integer(m.year_best), Cell::integer(m.year_worst)};
    for (const auto& n : m.nodes) {
      row.push_back(yes_no(n.qa_advantage));
      row.push_back(n.crossover_mhz ? Cell::num(*n.crossover_mhz) : Cell::empty());
    }
    row.push_back(Cell::str(m.milestone_label));
    return Rows{{std::move(row)}, {}};
  });
  collect(t, std::move(parts), res.warnings);

  const GrowthTrend best = GrowthTrend::best_case(cfg.history);
  const GrowthTrend worst = GrowthTrend::worst_case(cfg.history);
  Table g{"growth", {"year", "best_case_qubits", "worst_case_qubits"}, {}, {}};
  const int first = static_cast<int>(std::max(best.anchor_year, worst.anchor_year));
  for (int y = first; y <= first + 20; ++y) {
    g.add_row({Cell::integer(y), Cell::uinteger(qubits_at(best, y)), Cell::uinteger(qubits_at(worst, y))});
  }
  res.report.tables.push_back(std::move(t));
  res.report.tables.push_back(std::move(g));
  return res;
}

RunResult cmd_hardware(const RunConfig& cfg, const RunOptions&) {
  RunResult res;
  res.report.command = "hardware";
  const QaProfile& qa = cfg.qa;
  Table rt{"qmi_runtime", {"samples", "runtime_us"}, {}, {}};
  for (auto ns : expand_samples(cfg, res.warnings)) rt.add_row({Cell::integer(ns), Cell::num(qmi_runtime_us(qa, ns))});

  Table dev{"devices",
            {"qubits", "couplers", "dacs", "energy_j", "thermalization_s", "program_bits", "line_rate_bps",
             "readout_time_division", "readout_fm_q1e3", "readout_fm_q1e6"},
            {},
            {"couplers assume each qubit joins couplers_per_qubit couplers, each shared by two qubits"}};
  for (const auto& h : cfg.history) {
    const std::uint64_t couplers = h.qubits * static_cast<std::uint64_t>(qa.couplers_per_qubit) / 2;
    const auto e = programming_energy(h.qubits, couplers, qa.dac_critical_current_a, qa);
    const auto l = programming_load(h.qubits, couplers, qa);
    dev.add_row({Cell::uinteger(h.qubits), Cell::uinteger(couplers), Cell::uinteger(e.dac_count),
                 Cell::num(e.joules), Cell::num(e.thermalization_s), Cell::uinteger(l.bits),
                 Cell::num(l.line_rate_bps),
                 Cell::uinteger(readout_parallelism(h.qubits, ReadoutScheme::TimeDivision)),
                 Cell::uinteger(readout_parallelism(h.qubits, ReadoutScheme::FrequencyMultiplex, 1e3)),
                 Cell::uinteger(readout_parallelism(h.qubits, ReadoutScheme::FrequencyMultiplex, 1e6))});
  }
  const auto cap = refrigerator_qubit_capacity(cfg.geometry);
  Table fr{"refrigerator", {"wafer_radius_mm", "die_edge_mm", "qubits_per_die", "dies", "qubits"}, {}, {}};
  fr.add_row({Cell::num(cfg.geometry.wafer_radius_mm), Cell::num(cfg.geometry.die_edge_mm),
              Cell::uinteger(cfg.geometry.qubits_per_die), Cell::uinteger(cap.dies), Cell::uinteger(cap.qubits)});
  res.report.tables.push_back(std::move(rt));
  res.report.tables.push_back(std::move(dev));
  res.report.tables.push_back(std::move(fr));
  return res;
}

RunResult cmd_crossover(const RunConfig& cfg, const RunOptions&) {
  RunResult res;
  res.report.command = "crossover";
  Table t{"crossover", {"antennas", "cmos_node", "efficiency_tops_per_w", "crossover_mhz"}, {}, {}};
  t.notes.push_back("smallest grid bandwidth where the annealer BBU draws less than the CMOS BBU; empty when none");
  const std::vector<int> ants = cfg.sweep.antennas.empty() ? cfg.crossover_antennas : cfg.sweep.antennas;
  CrossoverOptions xo;
  xo.grid = cfg.crossover_grid;
  xo.base = cfg.scenarios.front();
  for (int a : ants) {
    if (a < 1) {
      res.warnings.push_back({"invalid_sweep_point", "skipped antennas=" + std::to_string(a) + ": must be >= 1"});
      continue;
    }
    for (const auto& node : cfg.cmos) {
      const auto x = crossover_bandwidth(a, node, cfg.qa, xo);
      t.add_row({Cell::integer(a), Cell::str(node.node_label), Cell::num(node.efficiency),
                 x ? Cell::num(*x) : Cell::empty()});
    }
  }
  res.report.tables.push_back(std::move(t));
  return res;
}

}  // namespace

std::string warning_json(const Warning& w) {
  nlohmann::ordered_json j;
  j["level"] = "warning";
  j["code"] = w.code;
  j["message"] = w.message;
  return j.dump();
}

const std::vector<std::string>& command_names() {
  static const std::vector<std::string> names{"targets", "power",    "qubits",   "economics",
                                              "timeline", "hardware", "crossover"};
  return names;
}

const std::vector<std::pair<std::string, std::string>>& paper_table_names() {
  static const std::vector<std::pair<std::string, std::string>> names{
      {"targets", "targets"},       {"energy", "hardware"},           {"readout", "hardware"},
      {"qubits-time", "qubits"},    {"powerbenefit", "power"},        {"costsavings", "economics"},
      {"milestones", "timeline"}};
  return names;
}

RunResult run_command(const RunConfig& config, const RunOptions& options) {
  if (options.paper_table) {
    const auto& names = paper_table_names();
    auto it = std::find_if(names.begin(), names.end(), [&](const auto& p) { return p.first == *options.paper_table; });
    if (it == names.end()) throw ConfigError("--paper-table: unknown table '" + *options.paper_table + "'");
    if (it->second != options.command) {
      throw ConfigError("--paper-table " + it->first + " belongs to the '" + it->second + "' command");
    }
    RunResult res;
    res.report = reference_table(it->first, config, res.warnings);
    return res;
  }
  const std::string& c = options.command;
  if (c == "targets") return cmd_targets(config, options);
  if (c == "power") return cmd_power(config, options);
  if (c == "qubits") return cmd_qubits(config, options);
  if (c == "economics") return cmd_economics(config, options);
  if (c == "timeline") return cmd_timeline(config, options);
  if (c == "hardware") return cmd_hardware(config, options);
  if (c == "crossover") return cmd_crossover(config, options);
  throw ConfigError("unknown command '" + c + "'");
}

}  // namespace qaran::cli
