#pragma once

#include <string>

namespace qaran {

/// Shortest decimal text that parses back to exactly `value`.
std::string format_shortest(double value);

/// Fixed-point text with `decimals` digits after the point ("-0.000" is
/// normalized to "0.000").
std::string format_fixed(double value, int decimals);

/// Rounds to `digits` significant figures.
double round_significant(double value, int digits);

}  // namespace qaran
