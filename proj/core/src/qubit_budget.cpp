#include "qaran/qubit_budget.hpp"

#include <cmath>

#include "qaran/error.hpp"
#include "qaran/format.hpp"

namespace qaran {
namespace {

constexpr double kSphereDecodingOps64 = 80e6;

QaProfile with_programming(QaProfile profile, const std::optional<double>& programming_us) {
  if (programming_us) profile.programming_us = *programming_us;
  return profile;
}

}  // namespace

void TaskProblemModel::validate() const {
  if (!(ops_per_problem > 0.0) || !(qubits_per_problem > 0.0) || !(runtime_us > 0.0)) {
    throw DomainError("task problem model: ops, qubits and runtime must all be positive");
  }
}

TaskProblemModel fdnl_problem_model(int users_antennas, int modulation_bits, std::int64_t samples,
                                    const QaProfile& profile) {
  if (users_antennas < 1) throw DomainError("fdnl_problem_model: Z must be >= 1");
  if (modulation_bits < 1) throw DomainError("fdnl_problem_model: bits per symbol must be >= 1");
  const double z = users_antennas / 64.0;
  return TaskProblemModel{kSphereDecodingOps64 * z * z,
                          static_cast<double>(modulation_bits) * users_antennas,
                          qmi_runtime_us(profile, samples)};
}

double ldpc_ops_per_iteration(double rows, double cols, double row_weight, double col_weight) {
  if (!(rows >= 1.0) || !(cols >= 1.0)) throw DomainError("ldpc: M and N must be >= 1");
  if (!(row_weight > 0.0) || !(col_weight > 0.0)) throw DomainError("ldpc: weights must be positive");
  return cols + 3.0 * row_weight * row_weight * rows - row_weight * rows +
         2.0 * col_weight * col_weight * cols + 4.0 * col_weight * cols;
}

int ldpc_aux_depth(double row_weight) {
  if (!(row_weight > 0.0)) throw DomainError("ldpc_aux_depth: row weight must be positive");
  const double target = row_weight - std::fmod(row_weight, 2.0);
  int n = 0;
  while (std::ldexp(1.0, n + 1) - 2.0 < target) ++n;
  return n;
}

LdpcCode LdpcCode::nr_base_graph_1() { return LdpcCode{"5G-BG1", 4224.0, 8448.0, 8.64, 20.0}; }

std::uint64_t LdpcCode::qubits_per_problem() const {
  return static_cast<std::uint64_t>(cols + rows * ldpc_aux_depth(row_weight));
}

TaskProblemModel fec_problem_model(const LdpcCode& code, std::int64_t samples,
                                   const QaProfile& profile, const FecModelOptions& options) {
  double ops = 0.0;
  switch (options.convention) {
    case FecOpsConvention::Headline:
      ops = options.headline_ops;
      break;
    case FecOpsConvention::Analytic:
      if (options.iterations < 1) throw DomainError("fec model: iterations must be >= 1");
      ops = ldpc_ops_per_iteration(code.rows, code.cols, code.row_weight, code.col_weight) *
            options.iterations;
      break;
  }
  TaskProblemModel model{ops, static_cast<double>(code.qubits_per_problem()),
                         qmi_runtime_us(profile, samples)};
  model.validate();
  return model;
}

std::uint64_t task_qubits(double tops, const TaskProblemModel& model) {
  model.validate();
  if (!(tops >= 0.0)) throw DomainError("task_qubits: tops must be non-negative");
  const double problems_per_s = tops * 1e12 / model.ops_per_problem;
  const double qubits = problems_per_s * model.qubits_per_problem * model.runtime_us * 1e-6;
  return static_cast<std::uint64_t>(std::ceil(qubits));
}

std::uint64_t QubitBudget::covered_sum() const {
  std::uint64_t acc = 0;
  for (const auto& q : per_task) acc += q.value_or(0);
  return acc;
}

QubitBudget total_budget(const CellScenario& scenario, const QaProfile& profile, std::int64_t samples,
                         const BudgetOptions& options) {
  const BbuWorkload load = workload(scenario);

  const auto fdnl = fdnl_problem_model(scenario.antennas, scenario.modulation_bits, samples,
                                       with_programming(profile, options.fdnl_programming_us));
  const auto fec = fec_problem_model(options.code, samples,
                                     with_programming(profile, options.fec_programming_us), options.fec);

  QubitBudget budget;
  budget.per_task[index_of(BbuTask::FDnl)] = task_qubits(load[BbuTask::FDnl], fdnl);
  budget.per_task[index_of(BbuTask::FEC)] = task_qubits(load[BbuTask::FEC], fec);

  switch (options.coverage) {
    case CoverageMode::Fixed:
      budget.covered_fraction = options.covered_fraction_fixed;
      break;
    case CoverageMode::Workload:
      budget.covered_fraction = (load[BbuTask::FDnl] + load[BbuTask::FEC]) / load.total();
      break;
  }
  if (!(budget.covered_fraction > 0.0 && budget.covered_fraction <= 1.0)) {
    throw DomainError("qubit budget: covered fraction must lie in (0,1], got " +
                      format_shortest(budget.covered_fraction));
  }
  budget.total = static_cast<std::uint64_t>(
      std::ceil(static_cast<double>(budget.covered_sum()) / budget.covered_fraction));
  return budget;
}

}  // namespace qaran
