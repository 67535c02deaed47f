#pragma once

#include <span>
#include <string>

namespace fracwave {

// Minimal deterministic log-log line plot; positive data only (nonpositive
// samples are dropped).
void write_loglog_svg(const std::string& path, const std::string& title,
                      const std::string& x_label, const std::string& y_label,
                      std::span<const double> x, std::span<const double> y);

}  // namespace fracwave
