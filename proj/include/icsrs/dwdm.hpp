#pragma once

#include "icsrs/fiber.hpp"
#include "icsrs/raman.hpp"
#include "icsrs/units.hpp"

#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

namespace icsrs {

/// Piecewise-linear Raman efficiency vs. pump-probe detuning.
/// Detuning is signed, lambda_q - lambda_c in nm: positive means the quantum
/// channel sits on the Stokes side of the classical pump.
class RamanProfile {
public:
    struct Point {
        double detuning_nm;
        double eta_per_km_nm;
    };

    explicit RamanProfile(std::vector<Point> points);  // validates ordering

    /// Linear interpolation. Throws std::out_of_range naming the detuning
    /// when outside the tabulated span.
    RamanEfficiency eta(double detuning_nm) const;

    double min_detuning_nm() const { return points_.front().detuning_nm; }
    double max_detuning_nm() const { return points_.back().detuning_nm; }
    std::size_t size() const { return points_.size(); }

private:
    std::vector<Point> points_;
};

/// Two-column text: detuning_nm, eta_per_km_nm. '#' starts a comment; an
/// optional non-numeric header line is skipped. Throws ParseError with the
/// 1-based line number on malformed rows, non-ascending detunings, or
/// negative efficiencies.
RamanProfile load_profile(std::istream& in, const std::string& name = "<stream>");
RamanProfile load_profile_file(const std::string& path);

/// Bundled profiles. "flat": constant 6e-9 /km/nm across +-40 nm.
/// "cband": illustrative Stokes/anti-Stokes asymmetric shape for demos; not a
/// measured dataset.
RamanProfile builtin_profile(const std::string& name);
std::vector<std::string> builtin_profile_names();

enum class Direction { Co, Counter };

struct ClassicalChannel {
    Wavelength wavelength;
    Power launch_power;
    Direction direction = Direction::Co;
    // Per-channel attenuation override; link alpha_c applies when absent.
    std::optional<AttenuationCoeff> alpha_c;
};

struct ChannelPlan {
    Wavelength quantum_wavelength{1550.0};
    std::vector<ClassicalChannel> channels;
};

/// 16-channel ITU-style grid: f = center_thz +- k * spacing_ghz, k = 1..8,
/// the quantum channel taking the center slot.
ChannelPlan dwdm_16ch_plan(double center_thz, double spacing_ghz,
                           Power per_channel_power, Direction direction);

/// Grid plan with an arbitrary split around the center slot.
ChannelPlan dwdm_grid_plan(double center_thz, double spacing_ghz,
                           int num_below, int num_above,
                           Power per_channel_power, Direction direction);

struct AggregateNoise {
    NoiseDensity at_quantum_wavelength;          // total, both directions
    std::vector<NoiseDensity> per_channel;       // same order as plan.channels
};

/// Sum of single-channel ICSRS contributions at the quantum wavelength:
/// co-propagating channels add forward noise, counter-propagating add
/// backward noise, each with eta taken from the profile at that channel's
/// detuning. Throws std::out_of_range if any channel falls outside the
/// profile span.
AggregateNoise aggregate_icsrs(const ChannelPlan& plan, const FiberLink& link,
                               const RamanProfile& profile);

} // namespace icsrs
