#pragma once

// Test-only reference computations. Each one re-derives a model quantity by a
// route that does not share code with the library.

#include <cmath>
#include <cstdint>
#include <map>
#include <numbers>
#include <string>

namespace qaran::oracle {

// Direct transcription of the ratio-power scaling law with std::pow.
inline double scaled_tops(double ref_tops, const int (&s)[6], double bw, double m, double r, double na,
                          double dt, double df) {
  const double x[6] = {bw / 20.0, m / 6.0, r / 1.0, na / 1.0, dt / 1.0, df / 1.0};
  double out = ref_tops;
  for (int k = 0; k < 6; ++k) out *= std::pow(x[k], s[k]);
  return out;
}

// Counting squares of edge L whose four corners all lie in a disc of radius
// R, on an axis-aligned grid anchored at the centre. The classical die-count
// formula approximates this enumeration.
inline std::uint64_t enumerate_dies(double radius, double edge) {
  const auto half = static_cast<long long>(std::ceil(radius / edge));
  std::uint64_t count = 0;
  for (long long i = -half; i < half; ++i) {
    const double x0 = i * edge;
    const double x1 = x0 + edge;
    const double xm = std::max(std::fabs(x0), std::fabs(x1));
    if (xm > radius) continue;
    const double ymax = std::sqrt(radius * radius - xm * xm);
    count += 2 * static_cast<std::uint64_t>(std::floor(ymax / edge));
  }
  return count;
}

// Linear scan for the smallest integer n >= 0 with 2^(n+1) - 2 >= target.
inline int aux_depth_scan(double row_weight) {
  const double target = row_weight - std::fmod(row_weight, 2.0);
  for (int n = 0; n < 64; ++n) {
    double p = 1.0;
    for (int i = 0; i < n + 1; ++i) p *= 2.0;
    if (p - 2.0 >= target) return n;
  }
  return -1;
}

// Plain year-by-year walk, no closed-form inversion.
inline int first_year_reaching(double anchor_year, double anchor_qubits, double factor, double period,
                               double required) {
  for (int year = static_cast<int>(anchor_year);; ++year) {
    const double q = anchor_qubits * std::exp((year - anchor_year) / period * std::log(factor));
    if (std::floor(q) >= required) return year;
  }
}

inline double rel_err(double got, double want) {
  return want == 0.0 ? std::fabs(got) : std::fabs(got - want) / std::fabs(want);
}

}  // namespace qaran::oracle
