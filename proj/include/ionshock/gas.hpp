// Gas model and state types for a monatomic, singly-ionizing gas in Saha
// equilibrium.  All quantities are SI; temperatures in kelvin.
//
// The gas is fully described by three constants:
//   a2    specific gas constant a^2 [J kg^-1 K^-1]
//   kappa Saha constant kappa [K^{5/2} m kg^-1 s^-2]
//   T_ion ionization temperature T_i [K] (ionization energy / Boltzmann k)
//
// The equation of state is p = a^2 (1 + alpha) rho T = a^2 rho theta with
// theta = T (1 + alpha), where alpha in (0,1) is the ionization degree.

#pragma once

#include <cmath>
#include <stdexcept>
#include <string>

namespace ionshock {

struct GasModel {
    double a2;     // specific gas constant a^2 [J kg^-1 K^-1]
    double kappa;  // Saha constant kappa [K^{5/2} m kg^-1 s^-2]
    double T_ion;  // ionization temperature T_i [K]

    // Velocity scale a = sqrt(a2); a*sqrt(T) has units m/s.  Helper for the
    // sound-speed and shock-speed formulas.
    double a() const { return std::sqrt(a2); }

    void validate() const {
        if (!(a2 > 0.0) || !(kappa > 0.0) || !(T_ion > 0.0))
            throw std::domain_error("GasModel: a2, kappa, T_ion must all be positive");
    }
};

// Atomic hydrogen preset (single ionization).
inline GasModel hydrogen() { return GasModel{8314.0, 29.9774, 1.5780e5}; }

// Preset lookup by name for the CLI layer.
inline GasModel gas_preset(const std::string& name) {
    if (name == "hydrogen") return hydrogen();
    throw std::domain_error("unknown gas preset '" + name + "' (available: hydrogen)");
}

// A point (alpha, T) in the ionization-temperature plane.  Pressure, volume,
// energy, entropy and sound speed are derived by the functions in thermo.hpp.
//
// alpha = 0 is admitted as the neutral limit (it arises when the equilibrium
// fraction underflows a double); every derived quantity except the entropy,
// which diverges to -infinity, is continuous there.  The jump solvers work in
// log alpha and therefore reject exactly-neutral base states themselves.
struct ThermoState {
    double alpha;  // ionization degree, in [0,1)
    double T;      // temperature [K]

    double theta() const { return T * (1.0 + alpha); }  // effective temperature [K]

    void validate() const {
        if (!(alpha >= 0.0) || !(alpha < 1.0))
            throw std::domain_error("ThermoState: alpha must lie in [0,1), got " +
                                    std::to_string(alpha));
        if (!(T > 0.0) || !std::isfinite(T))
            throw std::domain_error("ThermoState: T must be positive and finite, got " +
                                    std::to_string(T));
    }
};

}  // namespace ionshock
