#include "ringshift/csv.hpp"

#include <cstdio>
#include <fstream>
#include <ostream>

namespace ringshift {

namespace {

bool needs_quoting(const std::string& field) {
    return field.find_first_of(",\"\r\n") != std::string::npos;
}

std::string escape(const std::string& field) {
    if (!needs_quoting(field)) {
        return field;
    }
    std::string out = "\"";
    for (char ch : field) {
        if (ch == '"') {
            out += "\"\"";
        } else {
            out += ch;
        }
    }
    out += '"';
    return out;
}

std::string render(const CsvCell& cell) {
    if (const auto* i = std::get_if<std::int64_t>(&cell)) {
        return std::to_string(*i);
    }
    if (const auto* d = std::get_if<double>(&cell)) {
        return format_real(*d);
    }
    return escape(std::get<std::string>(cell));
}

}  // namespace

std::string format_real(double value) {
    char buf[64];
    std::snprintf(buf, sizeof buf, "%.12g", value);
    return buf;
}

void emit_csv(const CsvTable& table, std::ostream& out) {
    if (table.header.empty()) {
        throw DomainError("CSV table needs a header");
    }
    for (const auto& row : table.rows) {
        if (row.size() != table.header.size()) {
            throw DomainError("CSV row arity " + std::to_string(row.size()) +
                              " does not match header arity " +
                              std::to_string(table.header.size()));
        }
    }
    for (std::size_t i = 0; i < table.header.size(); ++i) {
        out << (i ? "," : "") << escape(table.header[i]);
    }
    out << '\n';
    for (const auto& row : table.rows) {
        for (std::size_t i = 0; i < row.size(); ++i) {
            out << (i ? "," : "") << render(row[i]);
        }
        out << '\n';
    }
}

void emit_csv(const CsvTable& table, const std::filesystem::path& path) {
    std::ofstream out(path, std::ios::binary | std::ios::trunc);
    if (!out) {
        throw IoError("cannot open '" + path.string() + "' for writing");
    }
    emit_csv(table, out);
    if (!out) {
        throw IoError("write failure on '" + path.string() + "'");
    }
}

CsvTable histogram_table(const Histogram& h) {
    CsvTable table;
    table.header = {"level", "count"};
    for (int level = 0; level < h.modulus; ++level) {
        const std::int64_t count = h.counts[static_cast<std::size_t>(level)];
        if (count > 0) {
            table.rows.push_back({static_cast<std::int64_t>(level), count});
        }
    }
    return table;
}

CsvTable trace_table(const ConvergenceTrace& trace) {
    CsvTable table;
    table.header = {"iteration", "criterion_value", "entropy"};
    for (const TraceRecord& rec : trace.records) {
        table.rows.push_back(
            {static_cast<std::int64_t>(rec.iteration), rec.criterion_value, rec.entropy_bits});
    }
    return table;
}

CsvTable profile_table(const ProfileLine& line) {
    CsvTable table;
    table.header = {"column", "value"};
    for (std::size_t c = 0; c < line.values.size(); ++c) {
        table.rows.push_back(
            {static_cast<std::int64_t>(c), static_cast<std::int64_t>(line.values[c])});
    }
    return table;
}

}  // namespace ringshift
