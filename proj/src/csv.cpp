#include "rydnet/csv.hpp"

#include <cstdio>
#include <fstream>
#include <stdexcept>
#include <utility>

namespace rydnet {

CsvWriter::CsvWriter(std::vector<std::string> header) : header_(std::move(header)) {}

void CsvWriter::add_row(std::vector<Cell> cells) {
    if (cells.size() != header_.size()) {
        throw std::invalid_argument("CsvWriter: row width does not match header");
    }
    rows_.push_back(std::move(cells));
}

std::string CsvWriter::format_double(double v) {
    char buf[64];
    std::snprintf(buf, sizeof(buf), "%.12g", v);
    return buf;
}

std::string CsvWriter::to_string() const {
    std::string out;
    for (std::size_t i = 0; i < header_.size(); ++i) {
        if (i > 0) out += ',';
        out += header_[i];
    }
    out += '\n';
    for (const auto& row : rows_) {
        for (std::size_t i = 0; i < row.size(); ++i) {
            if (i > 0) out += ',';
            if (const auto* d = std::get_if<double>(&row[i])) {
                out += format_double(*d);
            } else if (const auto* n = std::get_if<long long>(&row[i])) {
                out += std::to_string(*n);
            } else {
                out += std::get<std::string>(row[i]);
            }
        }
        out += '\n';
    }
    return out;
}

void CsvWriter::write(const std::filesystem::path& path) const {
    std::error_code ec;
    if (path.has_parent_path()) {
        std::filesystem::create_directories(path.parent_path(), ec);
        if (ec) {
            throw std::runtime_error("CsvWriter: cannot create directory " +
                                     path.parent_path().string() + ": " + ec.message());
        }
    }
    std::ofstream out(path, std::ios::binary | std::ios::trunc);
    if (!out) {
        throw std::runtime_error("CsvWriter: cannot open " + path.string() + " for writing");
    }
    out << to_string();
    if (!out) {
        throw std::runtime_error("CsvWriter: write failed for " + path.string());
    }
}

} // namespace rydnet
