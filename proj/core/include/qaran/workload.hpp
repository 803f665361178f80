#pragma once

#include <array>
#include <cstddef>
#include <optional>
#include <string>
#include <string_view>

namespace qaran {

/// Baseband tasks in the fixed reporting order used by every table.
enum class BbuTask : std::size_t { DPD, Filter, FFT, FDlin, FDnl, FEC, CPRI, PCP };

inline constexpr std::size_t kTaskCount = 8;

inline constexpr std::array<BbuTask, kTaskCount> kAllTasks{
    BbuTask::DPD,  BbuTask::Filter, BbuTask::FFT,  BbuTask::FDlin,
    BbuTask::FDnl, BbuTask::FEC,    BbuTask::CPRI, BbuTask::PCP};

constexpr std::size_t index_of(BbuTask task) { return static_cast<std::size_t>(task); }

std::string_view task_name(BbuTask task);
std::optional<BbuTask> parse_task(std::string_view name);

/// One radio configuration. Values are absolute; scaling ratios against the
/// reference point are formed internally.
struct CellScenario {
  double bandwidth_mhz = 20.0;
  int modulation_bits = 6;
  double coding_rate = 1.0;
  int antennas = 1;
  double duty_time = 1.0;
  double duty_freq = 1.0;

  /// Throws DomainError when any invariant is violated.
  void validate() const;

  /// 20 MHz, 64-QAM, R = 1, one antenna, full duty cycles.
  static CellScenario reference();

  friend bool operator==(const CellScenario&, const CellScenario&) = default;
};

/// Exponents over {bandwidth, modulation, coding rate, antennas, dt, df}.
struct ScalingExponents {
  std::array<int, 6> s{};
};

ScalingExponents scaling_exponents(BbuTask task);

/// Reference-point TOPS for one task.
double reference_tops(BbuTask task);

class BbuWorkload {
 public:
  BbuWorkload() = default;
  explicit BbuWorkload(const std::array<double, kTaskCount>& tops);

  double operator[](BbuTask task) const { return tops_[index_of(task)]; }
  const std::array<double, kTaskCount>& per_task() const { return tops_; }
  double total() const { return total_; }

  /// Sum over a subset of tasks.
  template <typename Pred>
  double sum_if(Pred pred) const {
    double acc = 0.0;
    for (BbuTask t : kAllTasks) {
      if (pred(t)) acc += tops_[index_of(t)];
    }
    return acc;
  }

 private:
  std::array<double, kTaskCount> tops_{};
  double total_ = 0.0;
};

BbuWorkload reference_workload();

/// TOPS demand of one task for a scenario. Throws DomainError for an invalid
/// scenario.
double scale_task(BbuTask task, const CellScenario& scenario);

BbuWorkload workload(const CellScenario& scenario);

/// Short label such as "400MHz/64ant".
std::string scenario_label(const CellScenario& scenario);

}  // namespace qaran
