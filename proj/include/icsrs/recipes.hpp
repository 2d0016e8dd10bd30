#pragma once

#include "icsrs/config.hpp"

#include <string>
#include <vector>

namespace icsrs {

struct Recipe {
    std::string name;
    std::string summary;
    std::string config_text;  // full scenario config, parsed by load_config
};

/// Prebaked sweep scenarios reproducing the standard coexistence curves
/// (noise vs. attenuation, coupling, length, launch power; key rate vs.
/// length; ICSRS vs. single-core SRS). Each is ordinary config text, so
/// `validate` and file-based runs treat them identically.
const std::vector<Recipe>& recipes();

/// Throws std::out_of_range listing the known names.
const Recipe& find_recipe(const std::string& name);

} // namespace icsrs
