#pragma once

#include <string>
#include <vector>

namespace qhd::cli {

/// 17 significant digits; "nan", "inf", "-inf" for non-finite values.
std::string format_number(double value);

struct Table {
    std::vector<std::string> header;
    std::vector<std::vector<std::string>> rows;
};

/// Comma-separated, header first, '\n' line endings.
std::string to_csv(const Table& table);

}  // namespace qhd::cli
