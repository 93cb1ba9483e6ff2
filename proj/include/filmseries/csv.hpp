#pragma once

#include <string>
#include <string_view>
#include <vector>

namespace filmseries {

/// 17 significant digits, enough to round-trip any double.
std::string format_full(double value);

/// 10 significant digits, for captions.
std::string format_short(double value);

/// Fixed-point with the given number of decimals (table layout).
std::string format_fixed(double value, int decimals);

/// Splits one CSV record on commas. Fields carry no quoting in our files.
std::vector<std::string> split_csv_line(std::string_view line);

/// Parses a decimal literal, rejecting trailing garbage.
double parse_real(std::string_view text);

}  // namespace filmseries
