#include "ptstab/cli/output.hpp"

#include <charconv>
#include <cmath>
#include <fstream>
#include <iostream>

#include <json.hpp>

#ifndef PTSTAB_VERSION
#define PTSTAB_VERSION "0.0.0"
#endif

namespace ptstab::cli {

namespace {

std::string csv_escape(const std::string& s) {
    if (s.find_first_of(",\"\n") == std::string::npos) return s;
    std::string out = "\"";
    for (char ch : s) {
        if (ch == '"') out += '"';
        out += ch;
    }
    return out + "\"";
}

std::string csv_cell(const Cell& c) {
    struct Visitor {
        std::string operator()(std::monostate) const { return ""; }
        std::string operator()(double v) const { return format_double(v); }
        std::string operator()(std::int64_t v) const { return std::to_string(v); }
        std::string operator()(bool v) const { return v ? "1" : "0"; }
        std::string operator()(const std::string& v) const { return csv_escape(v); }
    };
    return std::visit(Visitor{}, c);
}

nlohmann::ordered_json json_cell(const Cell& c) {
    struct Visitor {
        nlohmann::ordered_json operator()(std::monostate) const { return nullptr; }
        nlohmann::ordered_json operator()(double v) const {
            if (std::isfinite(v)) return v;
            return nullptr;
        }
        nlohmann::ordered_json operator()(std::int64_t v) const { return v; }
        nlohmann::ordered_json operator()(bool v) const { return v; }
        nlohmann::ordered_json operator()(const std::string& v) const { return v; }
    };
    return std::visit(Visitor{}, c);
}

}  // namespace

void Table::add(std::vector<Cell> row) {
    row.resize(columns.size());
    rows.push_back(std::move(row));
}

std::string format_double(double v) {
    if (std::isnan(v)) return "nan";
    if (std::isinf(v)) return v > 0 ? "inf" : "-inf";
    char buf[64];
    const auto res = std::to_chars(buf, buf + sizeof buf, v, std::chars_format::general, 17);
    return std::string(buf, res.ptr);
}

void write_csv(std::ostream& os, const Table& t) {
    for (std::size_t i = 0; i < t.columns.size(); ++i) os << (i ? "," : "") << csv_escape(t.columns[i]);
    os << '\n';
    for (const auto& row : t.rows) {
        for (std::size_t i = 0; i < row.size(); ++i) os << (i ? "," : "") << csv_cell(row[i]);
        os << '\n';
    }
}

void write_json(std::ostream& os, const Table& t, const RunConfig& cfg) {
    nlohmann::ordered_json meta;
    meta["tool"] = "ptstab";
    meta["version"] = PTSTAB_VERSION;
    meta["subcommand"] = to_string(cfg.subcommand);
    meta["family"] = cfg.family;
    meta["preset"] = cfg.preset.empty() ? nlohmann::ordered_json(nullptr) : nlohmann::ordered_json(cfg.preset);
    nlohmann::ordered_json params = nlohmann::ordered_json::object();
    for (const auto& [k, v] : cfg.params) params[k] = v;
    meta["params"] = params;
    nlohmann::ordered_json grids = nlohmann::ordered_json::array();
    for (const auto& g : cfg.grids) grids.push_back({{"axis", g.name}, {"min", g.min}, {"max", g.max}, {"count", g.count}});
    meta["grids"] = grids;
    nlohmann::ordered_json tols = nlohmann::ordered_json::object();
    for (const auto& [k, v] : cfg.tolerances) tols[k] = v;
    meta["tolerances"] = tols;
    meta["columns"] = t.columns;

    nlohmann::ordered_json data = nlohmann::ordered_json::array();
    for (const auto& row : t.rows) {
        nlohmann::ordered_json obj = nlohmann::ordered_json::object();
        for (std::size_t i = 0; i < t.columns.size(); ++i) obj[t.columns[i]] = json_cell(row[i]);
        data.push_back(std::move(obj));
    }
    nlohmann::ordered_json doc;
    doc["meta"] = std::move(meta);
    doc["data"] = std::move(data);
    os << doc.dump(2) << '\n';
}

void emit(const Table& t, const RunConfig& cfg) {
    auto write = [&](std::ostream& os) {
        if (cfg.format == Format::Json)
            write_json(os, t, cfg);
        else
            write_csv(os, t);
    };
    if (cfg.out.empty()) {
        write(std::cout);
        std::cout.flush();
        return;
    }
    std::ofstream f(cfg.out, std::ios::binary);
    if (!f) throw ConfigError("cannot open output file '" + cfg.out + "'");
    write(f);
    if (!f) throw ConfigError("failed writing output file '" + cfg.out + "'");
}

}  // namespace ptstab::cli
