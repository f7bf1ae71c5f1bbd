/**
 * @file csv.hpp
 * @brief CSV emission (RFC-4180 style) and the tables the CLI writes.
 */
#pragma once

#include <cstdint>
#include <filesystem>
#include <iosfwd>
#include <string>
#include <variant>
#include <vector>

#include "ringshift/entropy.hpp"
#include "ringshift/mshi.hpp"
#include "ringshift/profile.hpp"

namespace ringshift {

using CsvCell = std::variant<std::int64_t, double, std::string>;

struct CsvTable {
    std::vector<std::string> header;
    std::vector<std::vector<CsvCell>> rows;
};

/// Reals formatted with 12 significant digits.
std::string format_real(double value);

/// Header line first, LF line endings, fields quoted only when needed.
/// Every row must match the header arity; mismatches throw DomainError.
void emit_csv(const CsvTable& table, std::ostream& out);
void emit_csv(const CsvTable& table, const std::filesystem::path& path);

/// level,count over the levels with nonzero count.
CsvTable histogram_table(const Histogram& h);

/// iteration,criterion_value,entropy per outer iteration.
CsvTable trace_table(const ConvergenceTrace& trace);

/// column,value along one image row.
CsvTable profile_table(const ProfileLine& line);

}  // namespace ringshift
