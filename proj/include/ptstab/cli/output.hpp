#pragma once

#include <cstdint>
#include <ostream>
#include <string>
#include <variant>
#include <vector>

#include "ptstab/cli/config.hpp"

namespace ptstab::cli {

// std::monostate is an explicitly empty cell: "" in CSV, null in JSON.
using Cell = std::variant<std::monostate, double, std::int64_t, bool, std::string>;

struct Table {
    std::vector<std::string> columns;
    std::vector<std::vector<Cell>> rows;

    void add(std::vector<Cell> row);
};

/// Shortest text that is stable across platforms: 17 significant digits,
/// '.' separator, "nan" / "inf" / "-inf" for non-finite values.
std::string format_double(double v);

void write_csv(std::ostream& os, const Table& t);

/// {"meta": {...config echo...}, "data": [{column: value, ...}, ...]}
void write_json(std::ostream& os, const Table& t, const RunConfig& cfg);

/// Writes to cfg.out (or stdout when empty) in cfg.format.
void emit(const Table& t, const RunConfig& cfg);

}  // namespace ptstab::cli
