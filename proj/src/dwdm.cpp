#include "icsrs/dwdm.hpp"

#include "icsrs/errors.hpp"

#include <algorithm>
#include <cmath>
#include <fstream>
#include <istream>
#include <sstream>
#include <stdexcept>
#include <utility>

namespace icsrs {

namespace {

std::string fmt(double v) {
    std::ostringstream os;
    os << v;
    return os.str();
}

// Builtin profile tables; the bundled data/ files carry the same text.
constexpr const char* kFlatProfileText =
    "# Constant Raman efficiency, (km nm)^-1, vs detuning lambda_q - lambda_c (nm).\n"
    "detuning_nm eta_per_km_nm\n"
    "-40 6e-9\n"
    "-20 6e-9\n"
    "0 6e-9\n"
    "20 6e-9\n"
    "40 6e-9\n";

// Illustrative Stokes/anti-Stokes asymmetric shape for demo runs; not a
// measured dataset.
constexpr const char* kCbandProfileText =
    "# Illustrative C-band Raman efficiency vs detuning lambda_q - lambda_c (nm).\n"
    "# Positive detuning = Stokes side. Demo shape only, not calibrated data.\n"
    "detuning_nm eta_per_km_nm\n"
    "-40 2.0e-9\n"
    "-30 2.6e-9\n"
    "-20 3.2e-9\n"
    "-10 3.9e-9\n"
    "0 4.5e-9\n"
    "10 5.4e-9\n"
    "20 6.3e-9\n"
    "30 7.0e-9\n"
    "40 7.5e-9\n";

bool parse_two_doubles(const std::string& line, double& a, double& b) {
    std::istringstream is(line);
    if (!(is >> a >> b)) return false;
    std::string rest;
    if (is >> rest) return false;  // trailing garbage
    return true;
}

} // namespace

RamanProfile::RamanProfile(std::vector<Point> points) : points_(std::move(points)) {
    if (points_.size() < 2)
        throw std::invalid_argument("Raman profile needs at least two nodes");
    for (std::size_t i = 0; i < points_.size(); ++i) {
        if (!(points_[i].eta_per_km_nm >= 0.0))
            throw std::invalid_argument("Raman efficiency must be nonnegative at node " +
                                        std::to_string(i));
        if (i > 0 && !(points_[i].detuning_nm > points_[i - 1].detuning_nm))
            throw std::invalid_argument("profile detunings must be strictly increasing");
    }
}

RamanEfficiency RamanProfile::eta(double detuning_nm) const {
    if (!(detuning_nm >= points_.front().detuning_nm &&
          detuning_nm <= points_.back().detuning_nm))
        throw std::out_of_range("detuning " + fmt(detuning_nm) +
                                " nm outside the tabulated span [" +
                                fmt(points_.front().detuning_nm) + ", " +
                                fmt(points_.back().detuning_nm) + "]");
    auto hi = std::upper_bound(points_.begin(), points_.end(), detuning_nm,
                               [](double v, const Point& p) { return v < p.detuning_nm; });
    if (hi == points_.end()) return RamanEfficiency(points_.back().eta_per_km_nm);
    if (hi == points_.begin()) return RamanEfficiency(points_.front().eta_per_km_nm);
    const Point& a = *(hi - 1);
    const Point& b = *hi;
    const double t = (detuning_nm - a.detuning_nm) / (b.detuning_nm - a.detuning_nm);
    return RamanEfficiency(a.eta_per_km_nm + t * (b.eta_per_km_nm - a.eta_per_km_nm));
}

RamanProfile load_profile(std::istream& in, const std::string& name) {
    std::vector<RamanProfile::Point> points;
    std::vector<std::string> problems;
    std::string line;
    int line_no = 0;
    bool seen_data = false;

    while (std::getline(in, line)) {
        ++line_no;
        if (auto pos = line.find('#'); pos != std::string::npos) line.erase(pos);
        std::istringstream probe(line);
        std::string first;
        if (!(probe >> first)) continue;  // blank / comment-only

        double detuning = 0.0, eta = 0.0;
        if (!parse_two_doubles(line, detuning, eta)) {
            if (!seen_data && points.empty()) continue;  // optional header line
            problems.push_back(name + ":" + std::to_string(line_no) +
                               ": expected two numeric columns");
            continue;
        }
        seen_data = true;
        if (!(eta >= 0.0)) {
            problems.push_back(name + ":" + std::to_string(line_no) +
                               ": negative Raman efficiency");
            continue;
        }
        if (!points.empty() && !(detuning > points.back().detuning_nm)) {
            problems.push_back(name + ":" + std::to_string(line_no) +
                               ": detuning not strictly increasing");
            continue;
        }
        points.push_back({detuning, eta});
    }

    if (points.size() < 2)
        problems.push_back(name + ": profile needs at least two data rows");
    if (!problems.empty()) {
        std::string msg;
        for (const auto& p : problems) {
            if (!msg.empty()) msg += "\n";
            msg += p;
        }
        throw ParseError(msg);
    }
    return RamanProfile(std::move(points));
}

RamanProfile load_profile_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw ParseError(path + ": cannot open profile file");
    return load_profile(in, path);
}

RamanProfile builtin_profile(const std::string& name) {
    const char* text = nullptr;
    if (name == "flat")
        text = kFlatProfileText;
    else if (name == "cband")
        text = kCbandProfileText;
    else
        throw std::out_of_range("unknown builtin profile '" + name +
                                "' (available: cband, flat)");
    std::istringstream in(text);
    return load_profile(in, "builtin:" + name);
}

std::vector<std::string> builtin_profile_names() { return {"cband", "flat"}; }

ChannelPlan dwdm_grid_plan(double center_thz, double spacing_ghz, int num_below,
                           int num_above, Power per_channel_power, Direction direction) {
    if (!(spacing_ghz > 0.0)) throw std::invalid_argument("grid spacing must be positive");
    if (num_below < 0 || num_above < 0)
        throw std::invalid_argument("channel counts must be nonnegative");
    ChannelPlan plan;
    plan.quantum_wavelength = Wavelength::from_thz(center_thz);
    const double spacing_thz = spacing_ghz * 1e-3;
    for (int k = -num_below; k <= num_above; ++k) {
        if (k == 0) continue;  // quantum channel occupies the center slot
        ClassicalChannel ch;
        ch.wavelength = Wavelength::from_thz(center_thz + k * spacing_thz);
        ch.launch_power = per_channel_power;
        ch.direction = direction;
        plan.channels.push_back(ch);
    }
    return plan;
}

ChannelPlan dwdm_16ch_plan(double center_thz, double spacing_ghz, Power per_channel_power,
                           Direction direction) {
    return dwdm_grid_plan(center_thz, spacing_ghz, 8, 8, per_channel_power, direction);
}

AggregateNoise aggregate_icsrs(const ChannelPlan& plan, const FiberLink& link,
                               const RamanProfile& profile) {
    for (std::size_t i = 0; i < plan.channels.size(); ++i) {
        if (plan.channels[i].wavelength.nm == plan.quantum_wavelength.nm)
            throw std::invalid_argument("channel " + std::to_string(i) +
                                        " collides with the quantum wavelength " +
                                        fmt(plan.quantum_wavelength.nm) + " nm");
        for (std::size_t j = i + 1; j < plan.channels.size(); ++j)
            if (plan.channels[i].wavelength.nm == plan.channels[j].wavelength.nm)
                throw std::invalid_argument("duplicate classical wavelength " +
                                            fmt(plan.channels[i].wavelength.nm) + " nm");
    }

    AggregateNoise out;
    out.per_channel.reserve(plan.channels.size());
    double total = 0.0;
    for (std::size_t i = 0; i < plan.channels.size(); ++i) {
        const ClassicalChannel& ch = plan.channels[i];
        const double detuning = plan.quantum_wavelength.nm - ch.wavelength.nm;
        RamanEfficiency eta;
        try {
            eta = profile.eta(detuning);
        } catch (const std::out_of_range& e) {
            throw std::out_of_range("channel " + std::to_string(i) + " at " +
                                    fmt(ch.wavelength.nm) + " nm: " + e.what());
        }
        FiberLink ch_link = link;
        if (ch.alpha_c) ch_link.alpha_c = *ch.alpha_c;
        const NoiseDensity d = ch.direction == Direction::Co
                                   ? forward_icsrs(ch_link, ch.launch_power, eta)
                                   : backward_icsrs(ch_link, ch.launch_power, eta);
        out.per_channel.push_back(d);
        total += d.mw_per_nm;
    }
    out.at_quantum_wavelength = NoiseDensity(total);
    return out;
}

} // namespace icsrs
