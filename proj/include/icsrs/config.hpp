#pragma once

#include "icsrs/dwdm.hpp"
#include "icsrs/fiber.hpp"
#include "icsrs/qkd.hpp"

#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

namespace icsrs {

enum class SweepVariable { Length, Coupling, AlphaC, AlphaQ, LaunchPower };

/// Abscissa units: length km, coupling (h_ij) 1/m, attenuations 1/km,
/// launch power mW (applied to every classical channel).
struct SweepSpec {
    SweepVariable variable = SweepVariable::Length;
    double lo = 0.0;
    double hi = 0.0;
    int points = 2;           // >= 2
    bool log_spacing = false;

    std::vector<double> grid() const;
};

std::string to_string(SweepVariable v);

struct ScenarioConfig {
    FiberLink link{50.0, AttenuationCoeff{0.046}, AttenuationCoeff{0.046},
                   CouplingCoeff::from_per_m(1e-6)};
    QuantumReceiver receiver;
    ChannelPlan plan;
    std::string profile_name = "flat";  // builtin name or file path
    SweepSpec sweep;
};

struct LoadResult {
    std::optional<ScenarioConfig> config;  // set only when errors is empty
    std::vector<std::string> errors;       // each prefixed "name:line:"
    std::vector<std::string> warnings;
};

/// INI-style scenario text. Sections [link], [receiver], [plan], [sweep];
/// 'key = value' lines; '#' comments. All problems are collected rather than
/// stopping at the first. In strict mode unknown keys and sections are
/// errors; in lenient mode they are warnings.
LoadResult load_config(std::istream& in, const std::string& name = "<stream>",
                       bool strict = true);
LoadResult load_config_string(const std::string& text,
                              const std::string& name = "<string>",
                              bool strict = true);
LoadResult load_config_file(const std::string& path, bool strict = true);

/// Resolves profile_name against the builtins, then the filesystem.
RamanProfile resolve_profile(const std::string& name);

} // namespace icsrs
