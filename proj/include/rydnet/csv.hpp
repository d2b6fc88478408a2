#pragma once

#include <filesystem>
#include <string>
#include <variant>
#include <vector>

namespace rydnet {

/// Deterministic CSV output: the same rows always serialize to the same
/// bytes (doubles via "%.12g", '\n' line endings), which is what makes
/// repeated runs with a fixed seed byte-comparable.
class CsvWriter {
public:
    using Cell = std::variant<double, long long, std::string>;

    explicit CsvWriter(std::vector<std::string> header);

    void add_row(std::vector<Cell> cells);

    std::string to_string() const;

    /// Writes the file, creating parent directories. Throws std::runtime_error
    /// on I/O failure.
    void write(const std::filesystem::path& path) const;

    static std::string format_double(double v);

private:
    std::vector<std::string> header_;
    std::vector<std::vector<Cell>> rows_;
};

} // namespace rydnet
