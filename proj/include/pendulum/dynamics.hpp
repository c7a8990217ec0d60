#pragma once

#include <functional>
#include <stdexcept>
#include <string>

namespace pendulum {

// Physical constants of the driven pendulum rig. SI units, angles in radians.
struct PendulumParams {
    double a;       // crank length, m
    double b;       // eccentric radius, m
    double d;       // string-spring lever diameter, m
    double D;       // mass-carrying lever diameter, m
    double m_lump;  // lumped mass, kg
    double I;       // rotor inertia, kg*m^2
    double k;       // spring stiffness, N/m
    double zeta;    // viscous damping, kg*m^2/s
    double mu;      // dry-friction torque, N*m
    double omega;   // drive frequency, rad/s
    double g;       // gravity, m/s^2
};

struct PlantState {
    double phi;      // angular position, rad
    double phi_dot;  // angular velocity, rad/s
    double t;        // simulation clock, s
};

// Additive torque-acceleration disturbance p(t). A null function means
// identically zero. The bound declared in ControllerConfig is checked per
// evaluation by the simulation loop (violations are tallied, not fatal).
struct Disturbance {
    std::function<double(double)> p_fn;

    double eval(double t) const { return p_fn ? p_fn(t) : 0.0; }
};

struct ConfigError : std::runtime_error {
    explicit ConfigError(const std::string& what) : std::runtime_error(what) {}
};

inline double sgn(double x) { return x > 0.0 ? 1.0 : (x < 0.0 ? -1.0 : 0.0); }

// Throws ConfigError if params violate the model invariants
// (I,k,d,omega,g > 0; a > b > 0; zeta,mu >= 0).
void validate_params(const PendulumParams& p);

// Length of the excitation term: sqrt(a^2 + b^2 - 2ab cos(omega t)) - (a - b).
// Non-negative for all t when a > b > 0.
double excitation_length(double t, const PendulumParams& p);

struct Decomposition {
    double f;  // drift acceleration, rad/s^2
    double h;  // input gain, (rad/s^2)/m; state independent
};

// Control-affine split of the equation of motion: phi_ddot = f + h*u + p.
Decomposition decompose(const PlantState& s, const PendulumParams& p);

// Full plant acceleration for input u (m) and disturbance value p_val.
// Throws SimulationBlowup (see integrator.hpp) on non-finite state or input.
double acceleration(const PlantState& s, double u, double p_val,
                    const PendulumParams& p);

// Optional tanh smoothing of the dry-friction sgn for stiffness studies;
// eps_f <= 0 keeps the hard sgn (default behavior everywhere).
double friction_term(double phi_dot, const PendulumParams& p, double eps_f);

}  // namespace pendulum
