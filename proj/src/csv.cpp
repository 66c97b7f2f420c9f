#include "ltikit/csv.hpp"

#include <charconv>
#include <sstream>
#include <stdexcept>

namespace ltikit {

std::string format_double(double v) {
    char buf[32];
    const auto res = std::to_chars(buf, buf + sizeof(buf), v);
    return std::string(buf, res.ptr);
}

std::string write_csv(const std::vector<std::string>& header,
                      const std::vector<std::vector<double>>& rows) {
    std::string out;
    for (std::size_t c = 0; c < header.size(); ++c) {
        if (c) out += ',';
        out += header[c];
    }
    out += '\n';
    for (const auto& row : rows) {
        for (std::size_t c = 0; c < row.size(); ++c) {
            if (c) out += ',';
            out += format_double(row[c]);
        }
        out += '\n';
    }
    return out;
}

CsvTable read_csv(std::istream& in) {
    CsvTable table;
    std::string line;
    bool first = true;
    while (std::getline(in, line)) {
        if (line.empty()) continue;
        std::vector<std::string> cells;
        std::size_t start = 0;
        while (true) {
            const std::size_t comma = line.find(',', start);
            cells.push_back(line.substr(start, comma == std::string::npos ? comma : comma - start));
            if (comma == std::string::npos) break;
            start = comma + 1;
        }
        if (first) {
            table.header = std::move(cells);
            first = false;
            continue;
        }
        std::vector<double> row(cells.size());
        for (std::size_t c = 0; c < cells.size(); ++c) {
            double v = 0.0;
            const auto res = std::from_chars(cells[c].data(), cells[c].data() + cells[c].size(), v);
            if (res.ec != std::errc{}) throw std::runtime_error("bad numeric cell: " + cells[c]);
            row[c] = v;
        }
        table.rows.push_back(std::move(row));
    }
    return table;
}

CsvTable read_csv_string(const std::string& text) {
    std::istringstream in(text);
    return read_csv(in);
}

}  // namespace ltikit
