#pragma once

#include <array>
#include <cstdint>
#include <optional>
#include <string>

#include "qaran/qa_hardware.hpp"
#include "qaran/workload.hpp"

namespace qaran {

/// How one baseband problem maps onto the annealer.
struct TaskProblemModel {
  double ops_per_problem = 0.0;     // classical operations
  double qubits_per_problem = 0.0;
  double runtime_us = 0.0;          // QMI run time per problem

  void validate() const;
};

/// MIMO detection for a Z x Z system: 80e6 (Z/64)^2 classical operations,
/// N_bps * Z qubits.
TaskProblemModel fdnl_problem_model(int users_antennas, int modulation_bits, std::int64_t samples,
                                    const QaProfile& profile = {});

/// Belief-propagation cost of one LDPC decoding iteration.
double ldpc_ops_per_iteration(double rows, double cols, double row_weight, double col_weight);

/// Smallest n with 2^(n+1) - 2 >= w_r - (w_r mod 2).
int ldpc_aux_depth(double row_weight);

struct LdpcCode {
  std::string name;
  double rows = 0.0;
  double cols = 0.0;
  double row_weight = 0.0;
  double col_weight = 0.0;

  /// Longest 5G NR code, base graph 1.
  static LdpcCode nr_base_graph_1();
  std::uint64_t qubits_per_problem() const;
};

/// Headline uses a fixed per-problem cost (150M ops at 20 iterations);
/// Analytic multiplies ldpc_ops_per_iteration by the iteration count.
enum class FecOpsConvention { Headline, Analytic };

struct FecModelOptions {
  FecOpsConvention convention = FecOpsConvention::Headline;
  double headline_ops = 150e6;
  int iterations = 20;
};

TaskProblemModel fec_problem_model(const LdpcCode& code, std::int64_t samples,
                                   const QaProfile& profile = {}, const FecModelOptions& options = {});

/// ceil(tops / ops_per_problem * qubits_per_problem * runtime)
std::uint64_t task_qubits(double tops, const TaskProblemModel& model);

/// Fixed forces the FDnl+FEC share of the load to a fixed fraction (0.75);
/// Workload recomputes it from the scenario's task mix.
enum class CoverageMode { Fixed, Workload };

struct BudgetOptions {
  CoverageMode coverage = CoverageMode::Fixed;
  double covered_fraction_fixed = 0.75;
  LdpcCode code = LdpcCode::nr_base_graph_1();
  FecModelOptions fec;
  // Per-task programming time overrides (us); unset means the profile value.
  std::optional<double> fdnl_programming_us;
  std::optional<double> fec_programming_us;
};

struct QubitBudget {
  std::array<std::optional<std::uint64_t>, kTaskCount> per_task{};
  double covered_fraction = 1.0;
  std::uint64_t total = 0;

  std::uint64_t covered_sum() const;
};

/// FDnl and FEC qubits for the scenario, scaled up by 1 / covered_fraction to
/// account for the remaining baseband load.
QubitBudget total_budget(const CellScenario& scenario, const QaProfile& profile, std::int64_t samples,
                         const BudgetOptions& options = {});

}  // namespace qaran
