#include "config.hpp"

#include <cmath>
#include <fstream>
#include <limits>
#include <set>
#include <sstream>

#include <json.hpp>

namespace qaran::cli {
namespace {

using json = nlohmann::json;

// Walks a parsed document while tracking the JSON pointer for diagnostics
// and rejecting keys nobody asked for.
class Node {
 public:
  Node(const json& j, std::string pointer, const std::string& origin)
      : j_(j), ptr_(std::move(pointer)), origin_(origin) {}

  [[noreturn]] void fail(const std::string& what) const {
    throw ConfigError(origin_ + ": " + (ptr_.empty() ? "/" : ptr_) + ": " + what);
  }

  const json& raw() const { return j_; }
  const std::string& pointer() const { return ptr_; }

  Node child(const std::string& key) const {
    return Node(j_.at(key), (json::json_pointer(ptr_) / key).to_string(), origin_);
  }
  Node at(std::size_t i) const { return Node(j_.at(i), ptr_ + "/" + std::to_string(i), origin_); }

  bool has(const std::string& key) const { return j_.is_object() && j_.contains(key); }

  void expect_object(std::initializer_list<const char*> allowed) const {
    if (!j_.is_object()) fail("expected an object");
    std::set<std::string> ok(allowed.begin(), allowed.end());
    for (auto it = j_.begin(); it != j_.end(); ++it) {
      if (!ok.count(it.key())) fail("unknown key '" + it.key() + "'");
    }
  }

  std::size_t array_size() const {
    if (!j_.is_array()) fail("expected an array");
    return j_.size();
  }

  double number() const {
    if (!j_.is_number()) fail("expected a number");
    const double v = j_.get<double>();
    if (!std::isfinite(v)) fail("expected a finite number");
    return v;
  }

  std::int64_t integer() const {
    if (!j_.is_number_integer()) fail("expected an integer");
    return j_.get<std::int64_t>();
  }

  int int32() const {
    const auto v = integer();
    if (v < std::numeric_limits<int>::min() || v > std::numeric_limits<int>::max()) fail("integer out of range");
    return static_cast<int>(v);
  }

  std::string string() const {
    if (!j_.is_string()) fail("expected a string");
    return j_.get<std::string>();
  }

 private:
  const json& j_;
  std::string ptr_;
  const std::string& origin_;
};

void set_num(const Node& obj, const char* key, double& dst) {
  if (obj.has(key)) dst = obj.child(key).number();
}

void set_int(const Node& obj, const char* key, int& dst) {
  if (obj.has(key)) dst = obj.child(key).int32();
}

template <typename T, typename F>
std::vector<T> list(const Node& arr, F each) {
  std::vector<T> out;
  const std::size_t n = arr.array_size();
  for (std::size_t i = 0; i < n; ++i) out.push_back(each(arr.at(i)));
  return out;
}

// Runs a validate() and rethrows its complaint against the right field.
template <typename F>
void checked(const Node& n, F validate) {
  try {
    validate();
  } catch (const DomainError& e) {
    n.fail(e.what());
  }
}

CellScenario parse_scenario(const Node& n) {
  n.expect_object({"bandwidth_mhz", "modulation_bits", "coding_rate", "antennas", "duty_time", "duty_freq"});
  CellScenario s{20.0, 6, 0.5, 1, 1.0, 1.0};
  set_num(n, "bandwidth_mhz", s.bandwidth_mhz);
  set_int(n, "modulation_bits", s.modulation_bits);
  set_num(n, "coding_rate", s.coding_rate);
  set_int(n, "antennas", s.antennas);
  set_num(n, "duty_time", s.duty_time);
  set_num(n, "duty_freq", s.duty_freq);
  checked(n, [&] { s.validate(); });
  return s;
}

CmosProfile parse_cmos(const Node& n, EfficiencyMode mode) {
  if (n.raw().is_string()) {
    try {
      return builtin_cmos_profile(n.string(), mode);
    } catch (const DomainError& e) {
      n.fail(e.what());
    }
  }
  n.expect_object({"label", "vdd", "efficiency", "leakage_fraction"});
  if (!n.has("label")) n.fail("custom CMOS profile needs a label");
  if (!n.has("vdd") && !n.has("efficiency")) n.fail("custom CMOS profile needs vdd or efficiency");
  CmosProfile p;
  const std::string label = n.child("label").string();
  if (n.has("efficiency")) {
    p.node_label = label;
    p.efficiency = n.child("efficiency").number();
    set_num(n, "vdd", p.vdd);
  } else {
    const double vdd = n.child("vdd").number();
    checked(n, [&] { p = derive_profile(CmosProfile::anchor_65nm(), label, vdd, mode); });
  }
  set_num(n, "leakage_fraction", p.leakage_fraction);
  checked(n, [&] { p.validate(); });
  return p;
}

QaProfile parse_qa(const Node& n) {
  if (n.raw().is_string()) {
    try {
      return builtin_qa_profile(n.string());
    } catch (const DomainError& e) {
      n.fail(e.what());
    }
  }
  n.expect_object({"base", "programming_us", "anneal_us", "readout_us", "readout_delay_us", "refrigeration_kw",
                   "cooling_power_w", "dac_critical_current_a", "energy_kappa", "sfq_per_dac",
                   "couplers_per_qubit", "dacs_per_qubit", "dacs_per_coupler", "bit_precision"});
  QaProfile q = QaProfile::projected();
  if (n.has("base")) {
    const Node b = n.child("base");
    try {
      q = builtin_qa_profile(b.string());
    } catch (const DomainError& e) {
      b.fail(e.what());
    }
  }
  set_num(n, "programming_us", q.programming_us);
  set_num(n, "anneal_us", q.anneal_us);
  set_num(n, "readout_us", q.readout_us);
  set_num(n, "readout_delay_us", q.readout_delay_us);
  set_num(n, "refrigeration_kw", q.refrigeration_kw);
  set_num(n, "cooling_power_w", q.cooling_power_w);
  set_num(n, "dac_critical_current_a", q.dac_critical_current_a);
  set_num(n, "energy_kappa", q.energy_kappa);
  set_int(n, "sfq_per_dac", q.sfq_per_dac);
  set_int(n, "couplers_per_qubit", q.couplers_per_qubit);
  set_int(n, "dacs_per_qubit", q.dacs_per_qubit);
  set_int(n, "dacs_per_coupler", q.dacs_per_coupler);
  set_int(n, "bit_precision", q.bit_precision);
  if (n.raw().size() > (n.has("base") ? 1u : 0u)) q.name = "custom";
  checked(n, [&] { q.validate(); });
  return q;
}

BudgetOptions parse_budget(const Node& n) {
  n.expect_object({"coverage", "covered_fraction", "fec_convention", "fec_headline_ops", "ldpc_iterations",
                   "fdnl_programming_us", "fec_programming_us"});
  BudgetOptions b;
  if (n.has("coverage")) {
    const Node c = n.child("coverage");
    const std::string v = c.string();
    if (v == "fixed") {
      b.coverage = CoverageMode::Fixed;
    } else if (v == "workload") {
      b.coverage = CoverageMode::Workload;
    } else {
      c.fail("expected 'fixed' or 'workload'");
    }
  }
  set_num(n, "covered_fraction", b.covered_fraction_fixed);
  if (!(b.covered_fraction_fixed > 0.0 && b.covered_fraction_fixed <= 1.0)) {
    n.child("covered_fraction").fail("must lie in (0, 1]");
  }
  if (n.has("fec_convention")) {
    const Node c = n.child("fec_convention");
    const std::string v = c.string();
    if (v == "headline") {
      b.fec.convention = FecOpsConvention::Headline;
    } else if (v == "analytic") {
      b.fec.convention = FecOpsConvention::Analytic;
    } else {
      c.fail("expected 'headline' or 'analytic'");
    }
  }
  set_num(n, "fec_headline_ops", b.fec.headline_ops);
  set_int(n, "ldpc_iterations", b.fec.iterations);
  if (n.has("fdnl_programming_us")) b.fdnl_programming_us = n.child("fdnl_programming_us").number();
  if (n.has("fec_programming_us")) b.fec_programming_us = n.child("fec_programming_us").number();
  return b;
}

FronthaulLink parse_link(const Node& n) {
  n.expect_object({"capacity_gbps", "load_gbps", "p_max_w"});
  double cap = 100.0, load = 100.0;
  set_num(n, "capacity_gbps", cap);
  set_num(n, "load_gbps", load);
  FronthaulLink link = FronthaulLink::at_reference_rate(cap * 1e9, load * 1e9);
  set_num(n, "p_max_w", link.p_max_w);
  checked(n, [&] { link.validate(); });
  return link;
}

Topology parse_topology(const Node& n) {
  n.expect_object({"kind", "base_stations", "fronthaul"});
  Topology t;
  if (n.has("kind")) {
    const Node k = n.child("kind");
    const std::string v = k.string();
    if (v == "bs") {
      t.kind = TopologyKind::BaseStation;
    } else if (v == "cran") {
      t.kind = TopologyKind::CRan;
    } else {
      k.fail("expected 'bs' or 'cran'");
    }
  }
  set_int(n, "base_stations", t.base_stations);
  if (n.has("fronthaul")) t.fronthaul = parse_link(n.child("fronthaul"));
  checked(n, [&] { t.validate(); });
  return t;
}

std::vector<std::int64_t> parse_samples(const Node& n) {
  auto v = list<std::int64_t>(n, [](const Node& e) {
    const auto s = e.integer();
    if (s < 0) e.fail("sample count must be >= 0");
    return s;
  });
  if (v.empty()) n.fail("expected at least one sample count");
  return v;
}

RunConfig parse_root(const Node& root) {
  root.expect_object({"schema_version", "scenarios", "efficiency_mode", "cmos_profiles", "qa_profile", "samples",
                      "budget", "costs", "topology", "losses", "radio", "geometry", "crossover", "history",
                      "sweep", "format"});
  if (!root.has("schema_version")) root.fail("missing schema_version");
  if (root.child("schema_version").integer() != kConfigSchemaVersion) {
    root.child("schema_version").fail("unsupported schema_version (expected " +
                                      std::to_string(kConfigSchemaVersion) + ")");
  }
  RunConfig cfg;
  if (root.has("scenarios")) {
    cfg.scenarios = list<CellScenario>(root.child("scenarios"), parse_scenario);
    if (cfg.scenarios.empty()) root.child("scenarios").fail("at least one scenario is required");
  }
  if (root.has("efficiency_mode")) {
    const Node m = root.child("efficiency_mode");
    const std::string v = m.string();
    if (v == "as-printed") {
      cfg.efficiency_mode = EfficiencyMode::AsPrinted;
    } else if (v == "exact") {
      cfg.efficiency_mode = EfficiencyMode::Exact;
    } else {
      m.fail("expected 'as-printed' or 'exact'");
    }
    cfg.cmos = builtin_cmos_profiles(cfg.efficiency_mode);
  }
  if (root.has("cmos_profiles")) {
    cfg.cmos = list<CmosProfile>(root.child("cmos_profiles"),
                                 [&](const Node& e) { return parse_cmos(e, cfg.efficiency_mode); });
    if (cfg.cmos.empty()) root.child("cmos_profiles").fail("at least one CMOS profile is required");
  }
  if (root.has("qa_profile")) cfg.qa = parse_qa(root.child("qa_profile"));
  if (root.has("samples")) cfg.samples = parse_samples(root.child("samples"));
  if (root.has("budget")) cfg.budget = parse_budget(root.child("budget"));
  if (root.has("costs")) {
    const Node c = root.child("costs");
    c.expect_object({"electricity_usd_per_kwh", "co2_lb_per_kwh", "hours_per_year", "horizons_years"});
    set_num(c, "electricity_usd_per_kwh", cfg.costs.electricity_usd_per_kwh);
    set_num(c, "co2_lb_per_kwh", cfg.costs.co2_lb_per_kwh);
    set_num(c, "hours_per_year", cfg.costs.hours_per_year);
    checked(c, [&] { cfg.costs.validate(); });
    if (c.has("horizons_years")) {
      cfg.horizons_years = list<double>(c.child("horizons_years"), [](const Node& e) {
        const double y = e.number();
        if (y < 0) e.fail("horizon must be >= 0");
        return y;
      });
    }
  }
  if (root.has("topology")) cfg.topology = parse_topology(root.child("topology"));
  if (root.has("losses")) {
    const Node l = root.child("losses");
    l.expect_object({"active_cooling", "mains_supply", "dc_dc"});
    set_num(l, "active_cooling", cfg.losses.active_cooling);
    set_num(l, "mains_supply", cfg.losses.mains_supply);
    set_num(l, "dc_dc", cfg.losses.dc_dc);
    checked(l, [&] { cfg.losses.validate(); });
  }
  if (root.has("radio")) {
    const Node r = root.child("radio");
    r.expect_object({"ru_per_chain_w", "pa_per_antenna_w"});
    set_num(r, "ru_per_chain_w", cfg.radio.ru_per_chain_w);
    set_num(r, "pa_per_antenna_w", cfg.radio.pa_per_antenna_w);
    checked(r, [&] { cfg.radio.validate(); });
  }
  if (root.has("geometry")) {
    const Node g = root.child("geometry");
    g.expect_object({"wafer_radius_mm", "die_edge_mm", "qubits_per_die"});
    set_num(g, "wafer_radius_mm", cfg.geometry.wafer_radius_mm);
    set_num(g, "die_edge_mm", cfg.geometry.die_edge_mm);
    if (g.has("qubits_per_die")) {
      const auto q = g.child("qubits_per_die").integer();
      if (q < 1) g.child("qubits_per_die").fail("must be >= 1");
      cfg.geometry.qubits_per_die = static_cast<std::uint64_t>(q);
    }
    checked(g, [&] { cfg.geometry.validate(); });
  }
  if (root.has("crossover")) {
    const Node x = root.child("crossover");
    x.expect_object({"start_mhz", "stop_mhz", "step_mhz", "antennas"});
    set_num(x, "start_mhz", cfg.crossover_grid.start_mhz);
    set_num(x, "stop_mhz", cfg.crossover_grid.stop_mhz);
    set_num(x, "step_mhz", cfg.crossover_grid.step_mhz);
    checked(x, [&] { cfg.crossover_grid.validate(); });
    if (x.has("antennas")) {
      cfg.crossover_antennas = list<int>(x.child("antennas"), [](const Node& e) {
        const int a = e.int32();
        if (a < 1) e.fail("antenna count must be >= 1");
        return a;
      });
    }
  }
  if (root.has("history")) {
    cfg.history = list<HistoricalPoint>(root.child("history"), [](const Node& e) {
      e.expect_object({"year", "qubits"});
      if (!e.has("year") || !e.has("qubits")) e.fail("history entries need year and qubits");
      const auto q = e.child("qubits").integer();
      if (q < 1) e.child("qubits").fail("must be >= 1");
      return HistoricalPoint{e.child("year").int32(), static_cast<std::uint64_t>(q)};
    });
  }
  if (root.has("sweep")) {
    const Node s = root.child("sweep");
    s.expect_object({"bandwidth_mhz", "antennas", "samples"});
    if (s.has("bandwidth_mhz")) {
      cfg.sweep.bandwidth_mhz = list<double>(s.child("bandwidth_mhz"), [](const Node& e) { return e.number(); });
    }
    if (s.has("antennas")) {
      cfg.sweep.antennas = list<int>(s.child("antennas"), [](const Node& e) { return e.int32(); });
    }
    if (s.has("samples")) {
      cfg.sweep.samples = list<std::int64_t>(s.child("samples"), [](const Node& e) { return e.integer(); });
    }
  }
  if (root.has("format")) {
    const Node f = root.child("format");
    const std::string v = f.string();
    if (v != "csv" && v != "json" && v != "table") f.fail("expected 'csv', 'json' or 'table'");
    cfg.format = v;
  }
  return cfg;
}

std::vector<std::string> split(const std::string& s, char sep) {
  std::vector<std::string> out;
  std::string cur;
  std::istringstream in(s);
  while (std::getline(in, cur, sep)) out.push_back(cur);
  if (!s.empty() && s.back() == sep) out.emplace_back();
  return out;
}

double parse_double(const std::string& s, const std::string& flag) {
  std::size_t used = 0;
  double v = 0.0;
  try {
    v = std::stod(s, &used);
  } catch (const std::exception&) {
    used = 0;
  }
  if (used == 0 || used != s.size() || !std::isfinite(v)) {
    throw ConfigError("--sweep " + flag + ": '" + s + "' is not a number");
  }
  return v;
}

std::vector<double> parse_values(const std::string& spec, const std::string& flag) {
  const auto range = split(spec, ':');
  if (range.size() == 3) {
    const double a = parse_double(range[0], flag);
    const double b = parse_double(range[1], flag);
    const double step = parse_double(range[2], flag);
    if (!(step > 0.0) || b < a) throw ConfigError("--sweep " + flag + ": range needs start <= stop and step > 0");
    const auto n = static_cast<std::size_t>(std::floor((b - a) / step + 1e-9));
    if (n > 1'000'000) throw ConfigError("--sweep " + flag + ": range has too many points");
    std::vector<double> out;
    for (std::size_t i = 0; i <= n; ++i) out.push_back(a + static_cast<double>(i) * step);
    return out;
  }
  if (range.size() != 1) throw ConfigError("--sweep " + flag + ": expected a list or start:stop:step");
  std::vector<double> out;
  for (const auto& v : split(spec, ',')) out.push_back(parse_double(v, flag));
  if (out.empty()) throw ConfigError("--sweep " + flag + ": no values");
  return out;
}

template <typename T>
T whole(double v, const std::string& flag) {
  if (v != std::floor(v) || v < static_cast<double>(std::numeric_limits<T>::min()) ||
      v > static_cast<double>(std::numeric_limits<T>::max())) {
    throw ConfigError("--sweep " + flag + ": '" + format_shortest(v) + "' is not an integer");
  }
  return static_cast<T>(v);
}

}  // namespace

CompareOptions RunConfig::compare_options() const { return CompareOptions{losses, radio, budget, geometry}; }

RunConfig parse_config(const std::string& text, const std::string& origin) {
  json doc;
  try {
    doc = json::parse(text);
  } catch (const json::parse_error& e) {
    // Translate the byte offset into line:column.
    std::size_t line = 1, col = 1;
    for (std::size_t i = 0; i + 1 < e.byte && i < text.size(); ++i) {
      if (text[i] == '\n') {
        ++line;
        col = 1;
      } else {
        ++col;
      }
    }
    std::string what = e.what();
    const auto pos = what.find("syntax error");
    if (pos != std::string::npos) what = what.substr(pos);
    throw ConfigError(origin + ":" + std::to_string(line) + ":" + std::to_string(col) + ": " + what);
  }
  try {
    return parse_root(Node(doc, "", origin));
  } catch (const json::exception& e) {
    throw ConfigError(origin + ": " + e.what());
  }
}

RunConfig load_config(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw ConfigError(path + ": cannot open config file");
  std::ostringstream buf;
  buf << in.rdbuf();
  return parse_config(buf.str(), path);
}

void apply_sweep_flag(SweepAxes& axes, const std::string& flag) {
  const auto eq = flag.find('=');
  if (eq == std::string::npos) throw ConfigError("--sweep '" + flag + "': expected axis=values");
  const std::string axis = flag.substr(0, eq);
  const auto values = parse_values(flag.substr(eq + 1), axis);
  if (axis == "bandwidth" || axis == "bandwidth_mhz") {
    axes.bandwidth_mhz = values;
  } else if (axis == "antennas") {
    axes.antennas.clear();
    for (double v : values) axes.antennas.push_back(whole<int>(v, axis));
  } else if (axis == "samples") {
    axes.samples.clear();
    for (double v : values) axes.samples.push_back(whole<std::int64_t>(v, axis));
  } else {
    throw ConfigError("--sweep: unknown axis '" + axis + "' (bandwidth, antennas, samples)");
  }
}

}  // namespace qaran::cli
