#pragma once

#include <string>
#include <vector>

namespace gasfold::cli {

/// Shortest locale-independent representation that round-trips the double.
std::string fmt_double(double v);

/// CSV text with '\n' line endings. Cells are written verbatim.
std::string csv_text(const std::string& header, const std::vector<std::vector<std::string>>& rows);

void write_file(const std::string& path, const std::string& content);

} // namespace gasfold::cli
