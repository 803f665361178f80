#pragma once

#include <array>
#include <string>
#include <vector>

#include "qaran/workload.hpp"

namespace qaran {

/// Exact keeps the Vdd^2-scaled efficiency at full precision; AsPrinted rounds
/// it to two significant figures (0.075625 -> 0.076).
enum class EfficiencyMode { Exact, AsPrinted };

struct CmosProfile {
  std::string node_label;
  double vdd = 1.1;            // volts
  double efficiency = 0.04;    // TOPS per watt
  double leakage_fraction = 0.30;

  void validate() const;

  /// 65 nm, 1.1 V, 0.04 TOPS/W: the node every other built-in is scaled from.
  static CmosProfile anchor_65nm();
};

/// eff = base.efficiency * (base.vdd / vdd_target)^2
double efficiency_from_vdd(const CmosProfile& base, double vdd_target);

/// Derives a profile for another node from `base` by supply-voltage scaling.
CmosProfile derive_profile(const CmosProfile& base, std::string label, double vdd_target,
                           EfficiencyMode mode = EfficiencyMode::AsPrinted);

/// "65nm", "14nm" (0.8 V) and "1.5nm" (0.4 V).
std::vector<CmosProfile> builtin_cmos_profiles(EfficiencyMode mode = EfficiencyMode::AsPrinted);

/// Looks up a built-in by label; throws DomainError when unknown.
CmosProfile builtin_cmos_profile(const std::string& label,
                                 EfficiencyMode mode = EfficiencyMode::AsPrinted);

/// Dynamic plus leakage watts for a TOPS load.
double cmos_power(double tops, const CmosProfile& profile);

/// Per-task dynamic watts with leakage booked as its own term.
struct CmosBbuPower {
  std::array<double, kTaskCount> dynamic_w{};
  double leakage_w = 0.0;

  double dynamic_total() const;
  double total() const { return dynamic_total() + leakage_w; }
};

/// Power for the tasks selected by `mask`; unselected tasks report 0 W.
CmosBbuPower cmos_bbu_power(const BbuWorkload& load, const CmosProfile& profile,
                            const std::array<bool, kTaskCount>& mask);

CmosBbuPower cmos_bbu_power(const BbuWorkload& load, const CmosProfile& profile);

}  // namespace qaran
