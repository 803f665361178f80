#include "app.hpp"

#include <cstdlib>
#include <fstream>
#include <iostream>

#include <CLI11.hpp>

#include "commands.hpp"

namespace qaran::cli {

int run_app(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Power, qubit and cost feasibility of annealer-based cellular baseband processing", "qaran"};
  std::string command;
  std::string config_path;
  std::string format;
  std::string ref_table;
  std::string out_path;
  std::vector<std::string> sweeps;
  unsigned threads = 0;

  app.add_option("command", command, "Subcommand")->required()->check(CLI::IsMember(command_names()));
  app.add_option("--config", config_path, std::string("JSON config file (default: $") + kConfigEnvVar + ")");
  app.add_option("--format", format, "Output format")->check(CLI::IsMember({"csv", "json", "table"}));
  std::vector<std::string> tables;
  for (const auto& p : paper_table_names()) tables.push_back(p.first);
  app.add_option("--paper-table", ref_table, "Reproduce a reference table at its printed precision")
      ->check(CLI::IsMember(tables));
  app.add_option("--out", out_path, "Write the report here instead of stdout");
  app.add_option("--sweep", sweeps, "axis=v1,v2,... or axis=start:stop:step; axes: bandwidth, antennas, samples")
      ->take_first()
      ->multi_option_policy(CLI::MultiOptionPolicy::TakeAll);
  app.add_option("--threads", threads, "Sweep worker threads (0 = all cores)");

  std::vector<std::string> rev(args.rbegin(), args.rend() - (args.empty() ? 0 : 1));
  try {
    app.parse(rev);
  } catch (const CLI::CallForHelp& e) {
    out << app.help();
    return kOk;
  } catch (const CLI::ParseError& e) {
    err << "qaran: " << e.what() << '\n';
    return kConfigError;
  }

  RunOptions opts{command, ref_table.empty() ? std::nullopt : std::optional<std::string>(ref_table), threads};
  RunResult result;
  Format fmt = Format::Text;
  try {
    if (config_path.empty()) {
      if (const char* env = std::getenv(kConfigEnvVar); env && *env) config_path = env;
    }
    RunConfig cfg = config_path.empty() ? RunConfig{} : load_config(config_path);
    for (const auto& s : sweeps) apply_sweep_flag(cfg.sweep, s);
    if (!format.empty()) {
      fmt = parse_format(format);
    } else if (cfg.format) {
      fmt = parse_format(*cfg.format);
    }
    result = run_command(cfg, opts);
  } catch (const ConfigError& e) {
    err << "qaran: config error: " << e.what() << '\n';
    return kConfigError;
  } catch (const DomainError& e) {
    err << "qaran: domain error: " << e.what() << '\n';
    return kDomainError;
  }

  const std::string text = render(result.report, fmt);
  if (out_path.empty()) {
    out << text;
  } else {
    std::ofstream f(out_path, std::ios::binary);
    if (!(f << text)) {
      err << "qaran: cannot write " << out_path << '\n';
      return kConfigError;
    }
  }
  for (const auto& w : result.warnings) err << warning_json(w) << '\n';
  return result.warnings.empty() ? kOk : kWarnings;
}

}  // namespace qaran::cli
