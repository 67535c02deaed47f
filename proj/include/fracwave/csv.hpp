#pragma once

#include <span>
#include <string>
#include <vector>

namespace fracwave {

// Shortest text that round-trips the double exactly is not required here; the
// contract is 17 significant digits, fixed formatting, LF line endings.
std::string format_full(double v);

// Writes header + rows to `path`; numbers through format_full.
void write_csv(const std::string& path, std::span<const std::string> columns,
               std::span<const std::vector<double>> rows);

}  // namespace fracwave
