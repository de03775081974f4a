#pragma once

#include <cstddef>
#include <map>
#include <stdexcept>
#include <string>
#include <vector>

namespace ptstab::cli {

/// Raised for malformed or inconsistent command-line configuration (exit code 2).
class ConfigError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

enum class Subcommand { Eigensweep, Boundary, Thresholds };
enum class Format { Csv, Json };

std::string to_string(Subcommand s);
Subcommand parse_subcommand(const std::string& s);

struct GridAxis {
    std::string name;
    double min = 0.0;
    double max = 0.0;
    std::size_t count = 0;
};

/// "axis:min:max:count". count >= 2, or count == 1 with min == max.
GridAxis parse_grid(const std::string& spec);

struct RunConfig {
    Subcommand subcommand = Subcommand::Eigensweep;
    std::string preset;
    std::string family;
    std::map<std::string, double> params;
    std::vector<GridAxis> grids;
    std::map<std::string, double> tolerances;
    std::string out;  // empty = stdout
    Format format = Format::Csv;

    const GridAxis* grid(const std::string& name) const;
    double param(const std::string& name) const;
    double tolerance(const std::string& name, double fallback) const;
};

/// Raw command-line options before preset expansion.
struct CommandLine {
    Subcommand subcommand = Subcommand::Eigensweep;
    std::string preset;
    std::string family;
    std::vector<std::string> sets;
    std::vector<std::string> grids;
    std::vector<std::string> tols;
    std::string format;  // empty: json for thresholds, csv otherwise
    std::string out;
};

/// Expands the preset (if any), overlays --set/--grid/--tol, fills family
/// defaults and validates: known family, no unknown parameter names, finite
/// values, required grids present. Throws ConfigError.
RunConfig resolve(const CommandLine& cl);

/// Parameter defaults for (subcommand, family); throws ConfigError for an unknown family.
const std::map<std::string, double>& family_defaults(Subcommand sub, const std::string& family);

std::vector<std::string> families(Subcommand sub);

}  // namespace ptstab::cli
