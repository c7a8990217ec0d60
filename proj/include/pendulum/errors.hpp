#pragma once

#include <stdexcept>
#include <string>

namespace pendulum {

// Invalid configuration, parameter file, or precondition violation.
// The CLI maps this to exit code 2.
struct ConfigError : std::runtime_error {
    explicit ConfigError(const std::string& what) : std::runtime_error(what) {}
};

// Non-finite state encountered while stepping. Carries the time of the
// failed step and the offending component. CLI exit code 3.
struct SimulationBlowup : std::runtime_error {
    double t;
    std::string component;

    SimulationBlowup(double t_, std::string component_)
        : std::runtime_error("simulation blow-up at t=" + std::to_string(t_) +
                             " in component " + component_),
          t(t_),
          component(std::move(component_)) {}
};

// Close-returns search found no candidate below tolerance. Carries the best
// scaled distance for the diagnostic. CLI exit code 4.
struct UpoExtractionError : std::runtime_error {
    double best_scaled_distance;

    UpoExtractionError(const std::string& what, double best)
        : std::runtime_error(what), best_scaled_distance(best) {}
};

}  // namespace pendulum
