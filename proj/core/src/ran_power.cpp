#include "qaran/ran_power.hpp"

#include <cmath>

#include "qaran/error.hpp"
#include "qaran/format.hpp"

namespace qaran {
namespace {

void check_fraction(double v, const char* name) {
  if (!(v >= 0.0 && v < 1.0)) {
    throw DomainError(std::string("power system loss '") + name + "' must lie in [0,1), got " +
                      format_shortest(v));
  }
}

void check_nonnegative(double v, const char* what) {
  if (!(v >= 0.0) || !std::isfinite(v)) {
    throw DomainError(std::string(what) + " must be non-negative, got " + format_shortest(v));
  }
}

}  // namespace

void PowerSystemLosses::validate() const {
  check_fraction(active_cooling, "active_cooling");
  check_fraction(mains_supply, "mains_supply");
  check_fraction(dc_dc, "dc_dc");
}

double PowerSystemLosses::denominator() const {
  return (1.0 - active_cooling) * (1.0 - mains_supply) * (1.0 - dc_dc);
}

void RadioConstants::validate() const {
  check_nonnegative(ru_per_chain_w, "ru_per_chain_w");
  check_nonnegative(pa_per_antenna_w, "pa_per_antenna_w");
}

void FronthaulLink::validate() const {
  if (!(capacity_bps > 0.0)) throw DomainError("fronthaul: capacity must be positive");
  if (!(p_max_w > 0.0)) throw DomainError("fronthaul: p_max must be positive");
  if (!(load_bps >= 0.0)) throw DomainError("fronthaul: load must be non-negative");
  if (load_bps > capacity_bps) {
    throw DomainError("fronthaul: load " + format_shortest(load_bps) + " b/s exceeds capacity " +
                      format_shortest(capacity_bps) + " b/s");
  }
}

FronthaulLink FronthaulLink::at_reference_rate(double capacity_bps, double load_bps) {
  return FronthaulLink{capacity_bps, load_bps,
                       kFronthaulReferenceMaxW / kFronthaulReferenceCapacityBps * capacity_bps};
}

double fronthaul_power(const FronthaulLink& link) {
  link.validate();
  return link.p_max_w / link.capacity_bps * link.load_bps;
}

double power_system_overhead(double watts, const PowerSystemLosses& losses) {
  losses.validate();
  return watts / losses.denominator() - watts;
}

PowerBreakdown bs_power(double bbu_watts, int antennas, const PowerSystemLosses& losses,
                        const RadioConstants& radio) {
  check_nonnegative(bbu_watts, "bs_power: bbu_watts");
  CmosBbuPower bbu;
  PowerBreakdown out = bs_power(bbu, 0.0, antennas, losses, radio);
  out.bbu_cmos_w = bbu_watts;
  const double equipment = bbu_watts + out.ru_w + out.pa_w;
  out.total_w = equipment / losses.denominator();
  out.power_system_w = out.total_w - equipment;
  return out;
}

PowerBreakdown bs_power(const CmosBbuPower& bbu, double qa_w, int antennas,
                        const PowerSystemLosses& losses, const RadioConstants& radio) {
  if (antennas < 1) throw DomainError("bs_power: antennas must be >= 1");
  losses.validate();
  radio.validate();
  check_nonnegative(qa_w, "bs_power: qa_w");

  PowerBreakdown out;
  out.bbu_task_w = bbu.dynamic_w;
  out.bbu_leakage_w = bbu.leakage_w;
  out.bbu_cmos_w = bbu.total();
  out.qa_w = qa_w;
  out.ru_w = antennas * radio.ru_per_chain_w;
  out.pa_w = antennas * radio.pa_per_antenna_w;

  const double equipment = out.bbu_cmos_w + out.ru_w + out.pa_w;
  const double fed = equipment / losses.denominator();
  out.power_system_w = fed - equipment;
  out.total_w = fed + qa_w;
  return out;
}

PowerBreakdown cran_power(const CmosBbuPower& pool, double qa_w, const PowerSystemLosses& pool_losses,
                          std::span<const RrhSite> rrhs) {
  if (rrhs.empty()) throw DomainError("cran_power: at least one RRH is required");
  pool_losses.validate();
  check_nonnegative(qa_w, "cran_power: qa_w");

  PowerBreakdown out;
  out.bbu_task_w = pool.dynamic_w;
  out.bbu_leakage_w = pool.leakage_w;
  out.bbu_cmos_w = pool.total();
  out.qa_w = qa_w;
  out.power_system_w = power_system_overhead(out.bbu_cmos_w, pool_losses);

  for (const RrhSite& rrh : rrhs) {
    check_nonnegative(rrh.compute_w, "cran_power: rrh compute_w");
    check_nonnegative(rrh.ru_w, "cran_power: rrh ru_w");
    check_nonnegative(rrh.pa_w, "cran_power: rrh pa_w");
    out.rrh_compute_w += rrh.compute_w;
    out.ru_w += rrh.ru_w;
    out.pa_w += rrh.pa_w;
    out.power_system_w += power_system_overhead(rrh.equipment_w(), rrh.losses);
    out.fronthaul_w += fronthaul_power(rrh.link);
  }

  out.total_w = out.bbu_cmos_w + out.qa_w + out.rrh_compute_w + out.ru_w + out.pa_w +
                out.power_system_w + out.fronthaul_w;
  return out;
}

PowerBreakdown cran_power(double bbu_watts, const PowerSystemLosses& pool_losses,
                          std::span<const RrhSite> rrhs) {
  check_nonnegative(bbu_watts, "cran_power: bbu_watts");
  PowerBreakdown out = cran_power(CmosBbuPower{}, 0.0, pool_losses, rrhs);
  out.bbu_cmos_w = bbu_watts;
  const double ps = power_system_overhead(bbu_watts, pool_losses);
  out.power_system_w += ps;
  out.total_w += bbu_watts + ps;
  return out;
}

}  // namespace qaran
