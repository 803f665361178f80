#pragma once

#include <array>
#include <span>

#include "qaran/cmos_model.hpp"
#include "qaran/workload.hpp"

namespace qaran {

/// Fractional losses of active cooling, mains supply and DC-DC conversion.
struct PowerSystemLosses {
  double active_cooling = 0.09;
  double mains_supply = 0.07;
  double dc_dc = 0.06;

  void validate() const;
  /// (1 - ac)(1 - ms)(1 - dc)
  double denominator() const;
};

/// Per-chain radio unit and per-antenna power amplifier draw.
struct RadioConstants {
  double ru_per_chain_w = 10.8;
  double pa_per_antenna_w = 102.6;

  void validate() const;
};

inline constexpr double kFronthaulReferenceCapacityBps = 500e6;
inline constexpr double kFronthaulReferenceMaxW = 37.0;

struct FronthaulLink {
  double capacity_bps = kFronthaulReferenceCapacityBps;
  double load_bps = kFronthaulReferenceCapacityBps;
  double p_max_w = kFronthaulReferenceMaxW;

  void validate() const;

  /// A link whose p_max follows the 37 W per 500 Mb/s reference rate.
  static FronthaulLink at_reference_rate(double capacity_bps, double load_bps);
};

/// P = (p_max / capacity) * load
double fronthaul_power(const FronthaulLink& link);

/// Extra draw of the power system feeding `watts` of equipment.
double power_system_overhead(double watts, const PowerSystemLosses& losses);

struct PowerBreakdown {
  // BBU (the pool in C-RAN mode).
  std::array<double, kTaskCount> bbu_task_w{};
  double bbu_leakage_w = 0.0;
  double bbu_cmos_w = 0.0;
  double qa_w = 0.0;  // refrigeration; not fed through the power system

  double rrh_compute_w = 0.0;  // low layer-1 work at RRH sites (C-RAN only)
  double ru_w = 0.0;
  double pa_w = 0.0;
  double power_system_w = 0.0;
  double fronthaul_w = 0.0;
  double total_w = 0.0;

  double bbu_w() const { return bbu_cmos_w + qa_w; }
};

/// Base station total: (BBU + RU + PA) / loss denominator, with any QA
/// refrigeration added after the denominator.
PowerBreakdown bs_power(double bbu_watts, int antennas, const PowerSystemLosses& losses = {},
                        const RadioConstants& radio = {});

PowerBreakdown bs_power(const CmosBbuPower& bbu, double qa_w, int antennas,
                        const PowerSystemLosses& losses = {}, const RadioConstants& radio = {});

struct RrhSite {
  double compute_w = 0.0;
  double ru_w = 0.0;
  double pa_w = 0.0;
  PowerSystemLosses losses;
  FronthaulLink link;

  double equipment_w() const { return compute_w + ru_w + pa_w; }
};

/// C-RAN total: pool + PS(pool) + sum over RRHs of (rrh + PS(rrh) + fronthaul).
PowerBreakdown cran_power(const CmosBbuPower& pool, double qa_w, const PowerSystemLosses& pool_losses,
                          std::span<const RrhSite> rrhs);

PowerBreakdown cran_power(double bbu_watts, const PowerSystemLosses& pool_losses,
                          std::span<const RrhSite> rrhs);

}  // namespace qaran
