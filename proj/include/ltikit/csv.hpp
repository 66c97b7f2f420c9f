#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace ltikit {

/// Locale-independent shortest round-trip formatting (std::to_chars).
std::string format_double(double v);

/// Comma-separated table, '.' decimal, LF line endings, mandatory header row.
std::string write_csv(const std::vector<std::string>& header,
                      const std::vector<std::vector<double>>& rows);

struct CsvTable {
    std::vector<std::string> header;
    std::vector<std::vector<double>> rows;
};

CsvTable read_csv(std::istream& in);
CsvTable read_csv_string(const std::string& text);

}  // namespace ltikit
