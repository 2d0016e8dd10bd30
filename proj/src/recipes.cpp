#include "icsrs/recipes.hpp"

#include <stdexcept>

namespace icsrs {

namespace {

// Shared single-channel C-band scenario: quantum at 1550 nm, one classical
// channel 2 nm below it, flat efficiency profile.

const char* kFig2 =
    "# ICSRS noise density vs quantum-core attenuation\n"
    "[link]\n"
    "length_km = 50\n"
    "alpha_c_per_km = 0.046\n"
    "alpha_q_per_km = 0.046\n"
    "h_per_m = 1e-6\n"
    "[plan]\n"
    "quantum_wavelength_nm = 1550\n"
    "profile = flat\n"
    "channel = 1548 0 co\n"
    "[sweep]\n"
    "variable = alpha_q\n"
    "lo = 0.046\n"
    "hi = 0.07\n"
    "points = 49\n"
    "spacing = linear\n";

const char* kFig3 =
    "# ICSRS noise density vs intercore coupling coefficient\n"
    "[link]\n"
    "length_km = 50\n"
    "alpha_c_db_per_km = 0.22\n"
    "alpha_q_db_per_km = 0.21\n"
    "h_per_m = 1e-6\n"
    "[plan]\n"
    "quantum_wavelength_nm = 1550\n"
    "profile = flat\n"
    "channel = 1548 0 co\n"
    "[sweep]\n"
    "variable = h_ij\n"
    "lo = 0\n"
    "hi = 1e-6\n"
    "points = 101\n"
    "spacing = linear\n";

const char* kFig4 =
    "# ICSRS noise density vs span length\n"
    "[link]\n"
    "length_km = 50\n"
    "alpha_c_db_per_km = 0.22\n"
    "alpha_q_db_per_km = 0.21\n"
    "h_per_m = 1e-6\n"
    "[plan]\n"
    "quantum_wavelength_nm = 1550\n"
    "profile = flat\n"
    "channel = 1548 0 co\n"
    "[sweep]\n"
    "variable = length\n"
    "lo = 1\n"
    "hi = 100\n"
    "points = 100\n"
    "spacing = linear\n";

const char* kFig5 =
    "# Secure key rate vs span length, 10 dBm co-propagating channel\n"
    "[link]\n"
    "length_km = 50\n"
    "alpha_c_db_per_km = 0.22\n"
    "alpha_q_db_per_km = 0.21\n"
    "h_per_m = 1e-6\n"
    "[receiver]\n"
    "det_efficiency = 0.10\n"
    "dark_count_prob = 1e-6\n"
    "gate_width_ns = 1\n"
    "rx_bandwidth_ghz = 100\n"
    "[plan]\n"
    "quantum_wavelength_nm = 1550\n"
    "profile = flat\n"
    "channel = 1548 10 co\n"
    "[sweep]\n"
    "variable = length\n"
    "lo = 1\n"
    "hi = 250\n"
    "points = 250\n"
    "spacing = linear\n";

const char* kFig6 =
    "# Secure key rate vs per-channel launch power, 16-channel 200 GHz grid\n"
    "[link]\n"
    "length_km = 40\n"
    "alpha_c_db_per_km = 0.22\n"
    "alpha_q_db_per_km = 0.21\n"
    "h_per_m = 1e-6\n"
    "[plan]\n"
    "quantum_frequency_thz = 193.5\n"
    "profile = flat\n"
    "grid = 200 8 8 0 co\n"
    "[sweep]\n"
    "variable = launch_power\n"
    "lo = 0.001\n"
    "hi = 1000\n"
    "points = 121\n"
    "spacing = log\n";

const char* kFig7 =
    "# Intercore vs single-core Raman noise along the span\n"
    "[link]\n"
    "length_km = 50\n"
    "alpha_c_db_per_km = 0.22\n"
    "alpha_q_db_per_km = 0.21\n"
    "h_per_m = 1e-6\n"
    "[plan]\n"
    "quantum_wavelength_nm = 1550\n"
    "profile = flat\n"
    "channel = 1548 0 co\n"
    "[sweep]\n"
    "variable = length\n"
    "lo = 1\n"
    "hi = 100\n"
    "points = 100\n"
    "spacing = linear\n";

} // namespace

const std::vector<Recipe>& recipes() {
    static const std::vector<Recipe> all = {
        {"fig2", "ICSRS noise vs quantum-core attenuation (0.046-0.07 /km, 50 km)", kFig2},
        {"fig3", "ICSRS noise vs intercore coupling (0..1e-6 /m, 50 km)", kFig3},
        {"fig4", "ICSRS noise vs span length (1-100 km, 0 dBm)", kFig4},
        {"fig5", "secure key rate vs span length (10 dBm classical channel)", kFig5},
        {"fig6", "secure key rate vs per-channel power (16-channel 200 GHz grid, 40 km)",
         kFig6},
        {"fig7", "intercore vs single-core Raman noise along the span", kFig7},
    };
    return all;
}

const Recipe& find_recipe(const std::string& name) {
    for (const auto& r : recipes())
        if (r.name == name) return r;
    std::string known;
    for (const auto& r : recipes()) {
        if (!known.empty()) known += ", ";
        known += r.name;
    }
    throw std::out_of_range("unknown recipe '" + name + "' (available: " + known + ")");
}

} // namespace icsrs
