#pragma once

#include <ostream>
#include <span>
#include <string>
#include <vector>

namespace ulb::cli::detail {

/// %.{digits}g; "inf"/"nan" for non-finite values.
std::string number(double x, int digits);

/// Text mode prints 6 significant digits, CSV and JSON 12.
inline constexpr int kTextDigits = 6;
inline constexpr int kDataDigits = 12;

std::string join(std::span<const double> xs, int digits, const std::string& sep = " ");
std::string join(std::span<const int> xs, const std::string& sep = " ");

/// Quotes a CSV field when it contains a comma, quote or line break.
std::string csv_field(const std::string& s);

void csv_row(std::ostream& out, const std::vector<std::string>& fields);

}  // namespace ulb::cli::detail
