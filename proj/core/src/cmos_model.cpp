#include "qaran/cmos_model.hpp"

#include <cmath>

#include "qaran/error.hpp"
#include "qaran/format.hpp"

namespace qaran {

void CmosProfile::validate() const {
  if (!(vdd > 0.0)) throw DomainError("cmos profile '" + node_label + "': vdd must be positive");
  if (!(efficiency > 0.0)) {
    throw DomainError("cmos profile '" + node_label + "': efficiency must be positive");
  }
  if (!(leakage_fraction >= 0.0 && leakage_fraction < 1.0)) {
    throw DomainError("cmos profile '" + node_label + "': leakage_fraction must lie in [0,1)");
  }
}

CmosProfile CmosProfile::anchor_65nm() { return CmosProfile{"65nm", 1.1, 0.04, 0.30}; }

double efficiency_from_vdd(const CmosProfile& base, double vdd_target) {
  base.validate();
  if (!(vdd_target > 0.0)) {
    throw DomainError("efficiency_from_vdd: target vdd must be positive, got " +
                      format_shortest(vdd_target));
  }
  const double ratio = base.vdd / vdd_target;
  return base.efficiency * ratio * ratio;
}

CmosProfile derive_profile(const CmosProfile& base, std::string label, double vdd_target,
                           EfficiencyMode mode) {
  double eff = efficiency_from_vdd(base, vdd_target);
  if (mode == EfficiencyMode::AsPrinted) eff = round_significant(eff, 2);
  return CmosProfile{std::move(label), vdd_target, eff, base.leakage_fraction};
}

std::vector<CmosProfile> builtin_cmos_profiles(EfficiencyMode mode) {
  const CmosProfile anchor = CmosProfile::anchor_65nm();
  return {anchor, derive_profile(anchor, "14nm", 0.8, mode),
          derive_profile(anchor, "1.5nm", 0.4, mode)};
}

CmosProfile builtin_cmos_profile(const std::string& label, EfficiencyMode mode) {
  for (auto& p : builtin_cmos_profiles(mode)) {
    if (p.node_label == label) return p;
  }
  throw DomainError("unknown built-in CMOS profile '" + label + "'");
}

double cmos_power(double tops, const CmosProfile& profile) {
  profile.validate();
  if (!(tops >= 0.0)) throw DomainError("cmos_power: tops must be non-negative");
  return tops / profile.efficiency * (1.0 + profile.leakage_fraction);
}

double CmosBbuPower::dynamic_total() const {
  double acc = 0.0;
  for (double w : dynamic_w) acc += w;
  return acc;
}

CmosBbuPower cmos_bbu_power(const BbuWorkload& load, const CmosProfile& profile,
                            const std::array<bool, kTaskCount>& mask) {
  profile.validate();
  CmosBbuPower out;
  for (BbuTask t : kAllTasks) {
    const auto i = index_of(t);
    if (mask[i]) out.dynamic_w[i] = load[t] / profile.efficiency;
  }
  out.leakage_w = out.dynamic_total() * profile.leakage_fraction;
  return out;
}

CmosBbuPower cmos_bbu_power(const BbuWorkload& load, const CmosProfile& profile) {
  std::array<bool, kTaskCount> all{};
  all.fill(true);
  return cmos_bbu_power(load, profile, all);
}

}  // namespace qaran
