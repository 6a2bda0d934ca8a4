#pragma once

#include <string>
#include <string_view>
#include <vector>

namespace rtlbench::util {

std::vector<std::string> Split(std::string_view s, char sep);
std::string Join(const std::vector<std::string>& parts, std::string_view sep);
std::string Trim(std::string_view s);
bool StartsWith(std::string_view s, std::string_view prefix);

// Canonical text form for a temperature / rate so that config parsing,
// archive keys, and report cells all agree ("0.1", not "0.100000").
std::string FormatReal(double v);

// Fixed three-decimal form used in report tables ("0.725", "1.000").
std::string FormatRate(double v);

}  // namespace rtlbench::util
