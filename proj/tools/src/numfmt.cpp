#include <cmath>
#include <string>

#include "commands.hpp"
#include "qaran/format.hpp"

namespace qaran::cli {
namespace {

// Rounds to `significant` digits and prints without exponent, trimming
// nothing so that "1.20" keeps its trailing zero.
std::string sig_text(double v, int significant) {
  if (v == 0.0) return "0";
  const int mag = static_cast<int>(std::floor(std::log10(std::fabs(v))));
  int decimals = significant - 1 - mag;
  double r = round_significant(v, significant);
  // Rounding can carry into the next decade (9.996 -> 10.0).
  if (std::floor(std::log10(std::fabs(r))) > mag) --decimals;
  return format_fixed(r, std::max(decimals, 0));
}

}  // namespace

std::string group_thousands(const std::string& number) {
  std::size_t start = (!number.empty() && number[0] == '-') ? 1 : 0;
  std::size_t end = number.find('.');
  if (end == std::string::npos) end = number.size();
  std::string out = number.substr(0, start);
  for (std::size_t i = start; i < end; ++i) {
    out += number[i];
    const std::size_t left = end - i - 1;
    if (left > 0 && left % 3 == 0) out += ',';
  }
  return out + number.substr(end);
}

std::string abbreviate(double value, int significant) {
  const double a = std::fabs(value);
  if (a >= 1e6) return sig_text(value / 1e6, significant) + "M";
  if (a >= 1e3) {
    std::string k = sig_text(value / 1e3, significant);
    if (std::fabs(std::stod(k)) >= 1000.0) return sig_text(value / 1e6, significant) + "M";
    return k + "K";
  }
  return sig_text(value, significant);
}

std::string si_format(double value, const std::string& unit, int significant) {
  static const struct {
    double scale;
    const char* prefix;
  } kPrefixes[] = {{1e9, "G"}, {1e6, "M"}, {1e3, "k"}, {1.0, ""},   {1e-3, "m"},
                   {1e-6, "u"}, {1e-9, "n"}, {1e-12, "p"}, {1e-15, "f"}, {1e-18, "a"}};
  if (value == 0.0) return "0 " + unit;
  const double r = round_significant(value, significant);
  for (const auto& p : kPrefixes) {
    if (std::fabs(r) >= p.scale) return sig_text(r / p.scale, significant) + " " + p.prefix + unit;
  }
  return format_shortest(value) + " " + unit;
}

}  // namespace qaran::cli
