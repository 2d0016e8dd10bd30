#pragma once

#include <stdexcept>
#include <string>

namespace icsrs {

/// Adaptive quadrature failed to reach the requested tolerance within the
/// refinement depth limit. Never silently degraded into a best-effort value.
class QuadratureError : public std::runtime_error {
public:
    explicit QuadratureError(const std::string& what) : std::runtime_error(what) {}
};

/// Y1 == 0: no channel at all (zero transmissivity and zero vacuum yield).
class DeadLinkError : public std::runtime_error {
public:
    explicit DeadLinkError(const std::string& what) : std::runtime_error(what) {}
};

/// Peak search could not certify an interior unimodal maximum
/// (flat curve, or maximum sitting on a bracket edge).
class PeakSearchError : public std::runtime_error {
public:
    explicit PeakSearchError(const std::string& what) : std::runtime_error(what) {}
};

/// Raised by tabular parsers (Raman profiles, scenario configs); the message
/// carries line numbers / key paths for every offending entry.
class ParseError : public std::runtime_error {
public:
    explicit ParseError(const std::string& what) : std::runtime_error(what) {}
};

} // namespace icsrs
