#pragma once

#include <string>
#include <utility>
#include <vector>

#include "ptstab/cli/config.hpp"

namespace ptstab::cli {

struct Preset {
    std::string name;
    Subcommand subcommand;
    std::string family;
    std::vector<std::pair<std::string, double>> params;
    std::vector<GridAxis> grids;
    std::string description;
};

const std::vector<Preset>& presets();
const Preset* find_preset(const std::string& name);

}  // namespace ptstab::cli
