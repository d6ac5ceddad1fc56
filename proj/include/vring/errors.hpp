/******************************************************************************
 *
 * vring - a laboratory for concentrated axisymmetric vortex rings
 *
 * This program is free software, distributed under the terms of the
 * Apache License, Version 2.0
 * http://www.apache.org/licenses/LICENSE-2.0
 *
 * Exception types shared across the library.
 *
 ******************************************************************************/

#ifndef VRING_ERRORS_HPP
#define VRING_ERRORS_HPP

#include <stdexcept>
#include <string>

namespace vring {

/// Argument outside the mathematical domain of an operation.
class DomainError : public std::runtime_error {
public:
    explicit DomainError(const std::string& msg) : std::runtime_error(msg) {}
};

/// Evaluation requested at (or too close to) a kernel singularity.
class SingularityError : public std::runtime_error {
public:
    explicit SingularityError(const std::string& msg) : std::runtime_error(msg) {}
};

/// Adaptive quadrature could not meet the requested tolerance. Carries the
/// best available estimate and its error bound.
class QuadratureError : public std::runtime_error {
public:
    QuadratureError(const std::string& msg, double estimate, double error_bound)
        : std::runtime_error(msg), estimate(estimate), error_bound(error_bound) {}
    double estimate;
    double error_bound;
};

/// Invalid run configuration (overlapping patches, bad sweeps, parse errors).
class ConfigError : public std::runtime_error {
public:
    explicit ConfigError(const std::string& msg) : std::runtime_error(msg) {}
};

/// A particle left the physical half-plane during time stepping.
class BlowupError : public std::runtime_error {
public:
    BlowupError(const std::string& msg, int particle, double time)
        : std::runtime_error(msg), particle(particle), time(time) {}
    int particle;
    double time;
};

/// Two centers of the reduced system fell below the separation floor.
class CollisionError : public std::runtime_error {
public:
    CollisionError(const std::string& msg, double time)
        : std::runtime_error(msg), time(time) {}
    double time;
};

/// Requested level is not on the periodic branch.
class NonPeriodicLevelError : public std::runtime_error {
public:
    explicit NonPeriodicLevelError(const std::string& msg) : std::runtime_error(msg) {}
};

/// Root count disagrees with the branch classification; never returned silently.
class RootClassificationError : public std::runtime_error {
public:
    explicit RootClassificationError(const std::string& msg) : std::runtime_error(msg) {}
};

/// A parameter search ran past its configured cap.
class SearchError : public std::runtime_error {
public:
    explicit SearchError(const std::string& msg) : std::runtime_error(msg) {}
};

} // namespace vring

#endif
