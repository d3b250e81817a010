// Closed-form equilibrium thermodynamics of the singly-ionizing monatomic gas:
// Saha equilibrium, equation of state, energy/enthalpy, entropy, sound speed,
// d p / d eta at constant density, and characteristic-field classification.
//
// Numerical policy: every exponential of +-T_i/T is evaluated in log space so
// that the extreme regimes (T_i/T of several hundred, alpha down to 1e-114 and
// below) neither overflow nor collapse to NaN.  Where alpha can underflow the
// log of alpha is exposed alongside the value.

#pragma once

#include <cmath>
#include <limits>
#include <stdexcept>

#include "ionshock/gas.hpp"

namespace ionshock {

namespace detail {

// log(1 + e^x) without overflow for large positive x.
inline double log1pexp(double x) {
    return x > 0.0 ? x + std::log1p(std::exp(-x)) : std::log1p(std::exp(x));
}

}  // namespace detail

// ---------------------------------------------------------------------------
// Saha equilibrium
// ---------------------------------------------------------------------------

// Result of the Saha inversion alpha(p, T).  For very cold states alpha
// underflows double precision; log_alpha stays finite and meaningful, and
// `underflow` marks states whose alpha is no longer usable as a plain double.
struct SahaResult {
    double alpha;      // ionization degree; may be subnormal/zero in deep underflow
    double log_alpha;  // natural log of alpha, always finite
    bool underflow;    // true when alpha itself is below ~1e-300
};

// Degree of ionization from pressure and temperature:
//   alpha = (1 + kappa p T^{-5/2} e^{T_i/T})^{-1/2}.
inline SahaResult saha_alpha(double p, double T, const GasModel& gas) {
    gas.validate();
    if (!(p > 0.0) || !std::isfinite(p))
        throw std::domain_error("saha_alpha: pressure must be positive and finite");
    if (!(T > 0.0) || !std::isfinite(T))
        throw std::domain_error("saha_alpha: temperature must be positive and finite");

    // L = log(kappa p T^{-5/2} e^{T_i/T}); alpha = exp(-log(1+e^L)/2).
    const double L = std::log(gas.kappa * p) - 2.5 * std::log(T) + gas.T_ion / T;
    const double log_alpha = -0.5 * detail::log1pexp(L);
    const double alpha = std::exp(log_alpha);
    const bool underflow = log_alpha < std::log(std::numeric_limits<double>::min());
    return SahaResult{alpha, log_alpha, underflow};
}

// log of the inverted Saha pressure p(alpha, T), taking log(alpha) directly so
// the deep-underflow regime stays representable:
//   log p = -log kappa + log((1-alpha)(1+alpha)) - 2 log alpha
//           + (5/2) log T - T_i/T.
// The factor 1 - alpha^2 is formed as (1-alpha)(1+alpha) to keep full
// precision near alpha -> 1 (1-alpha is exact there by Sterbenz).
inline double log_pressure_from_log_alpha(double log_alpha, double T, const GasModel& gas) {
    const double alpha = std::exp(log_alpha);
    const double log_one_minus_a2 =
        alpha < 1e-8 ? 0.0 : std::log((1.0 - alpha) * (1.0 + alpha));
    return -std::log(gas.kappa) + log_one_minus_a2 - 2.0 * log_alpha +
           2.5 * std::log(T) - gas.T_ion / T;
}

// Pressure from the inverted Saha relation:
//   p = (1/kappa) ((1-alpha^2)/alpha^2) T^{5/2} e^{-T_i/T}.
// Strictly decreasing in alpha at fixed T, strictly increasing in T.
inline double pressure(double alpha, double T, const GasModel& gas) {
    gas.validate();
    if (!(alpha > 0.0) || !(alpha < 1.0))
        throw std::domain_error("pressure: alpha must lie strictly in (0,1)");
    if (!(T > 0.0) || !std::isfinite(T))
        throw std::domain_error("pressure: temperature must be positive and finite");
    return std::exp(log_pressure_from_log_alpha(std::log(alpha), T, gas));
}

inline double pressure(const ThermoState& s, const GasModel& gas) {
    return pressure(s.alpha, s.T, gas);
}

// Specific volume v = a^2 theta / p [m^3/kg] and density rho = 1/v.
inline double specific_volume(const ThermoState& s, const GasModel& gas) {
    return gas.a2 * s.theta() / pressure(s, gas);
}

inline double density(const ThermoState& s, const GasModel& gas) {
    return 1.0 / specific_volume(s, gas);
}

// ---------------------------------------------------------------------------
// Energy, enthalpy, entropy
// ---------------------------------------------------------------------------

struct EnergyEnthalpy {
    double e;  // specific internal energy [J/kg]
    double H;  // specific enthalpy [J/kg]; H - e = a^2 theta = p v
};

// e = (3/2) a^2 (1+alpha) T + a^2 T_i alpha
// H = (5/2) a^2 (1+alpha) T + a^2 T_i alpha
inline EnergyEnthalpy energy_enthalpy(const ThermoState& s, const GasModel& gas) {
    s.validate();
    const double ionization = gas.a2 * gas.T_ion * s.alpha;
    return EnergyEnthalpy{1.5 * gas.a2 * s.theta() + ionization,
                          2.5 * gas.a2 * s.theta() + ionization};
}

// Dimensionless specific entropy
//   eta = 2 log(alpha/(1-alpha)) + (1+alpha)(5/2 + T_i/T) + C,  C := 0.
// The additive constant is not fixed by the closed form; only entropy
// differences are physically meaningful and every consumer here uses
// differences, so C = 0 is adopted throughout.
inline double entropy_eta(const ThermoState& s, const GasModel& gas) {
    s.validate();
    return 2.0 * (std::log(s.alpha) - std::log1p(-s.alpha)) +
           (1.0 + s.alpha) * (2.5 + gas.T_ion / s.T);
}

// ---------------------------------------------------------------------------
// Sound speed and dp/deta
// ---------------------------------------------------------------------------

// Equilibrium sound speed
//   c = a sqrt(5 theta / 3) sqrt(N / Dn),
//   N  = 1 + alpha(1-alpha) (5/4 + T_i/T + T_i^2/(5 T^2)),
//   Dn = 1 + alpha(1-alpha) (5/4 + T_i/T + T_i^2/(3 T^2)).
// The correction factor sqrt(N/Dn) lies in (sqrt(3/5), 1].
inline double sound_speed(const ThermoState& s, const GasModel& gas) {
    s.validate();
    const double x = gas.T_ion / s.T;
    const double aa = s.alpha * (1.0 - s.alpha);
    const double N = 1.0 + aa * (1.25 + x + x * x / 5.0);
    const double Dn = 1.0 + aa * (1.25 + x + x * x / 3.0);
    return gas.a() * std::sqrt(5.0 * s.theta() / 3.0 * (N / Dn));
}

// dp/deta at constant density:
//   p_eta = 2p [1 + (1/2) alpha(1-alpha)(5/2 + T_i/T)]
//           / { 3 (1+alpha) [1 + alpha(1-alpha)(5/4 + T_i/T + T_i^2/(3T^2))] }.
// Strictly positive for every valid state.
inline double p_eta(const ThermoState& s, const GasModel& gas) {
    s.validate();
    const double x = gas.T_ion / s.T;
    const double aa = s.alpha * (1.0 - s.alpha);
    const double num = 2.0 * pressure(s, gas) * (1.0 + 0.5 * aa * (2.5 + x));
    const double den = 3.0 * (1.0 + s.alpha) * (1.0 + aa * (1.25 + x + x * x / 3.0));
    return num / den;
}

// ---------------------------------------------------------------------------
// Characteristic-field classification
// ---------------------------------------------------------------------------

// Sufficient condition for genuine nonlinearity of the acoustic fields:
//   alpha <= 60 (T/T_i)^3   or   T_i/T <= 54.5375.
// Returns false only when the state is *not certified* by this test, which
// does not imply failure of genuine nonlinearity.
inline bool gnl_sufficient(const ThermoState& s, const GasModel& gas) {
    s.validate();
    const double r = s.T / gas.T_ion;
    return s.alpha <= 60.0 * r * r * r || 1.0 / r <= 54.5375;
}

enum class CurvatureCertification {
    convex_certified,   // T_i/T <= 4: integral curve strictly convex
    concave_certified,  // T_i/T > 37.5964 and alpha <= 0.25: strictly concave
    uncertified,        // sign must be read off the returned value
};

struct CurvatureResult {
    double d2T_dalpha2;  // second derivative of T(alpha) along the integral curve [K]
    CurvatureCertification certification;
};

// Curvature of the integral curve T(alpha) of the eta-level set,
//   d2T/dalpha2 = -(eta_aa eta_T^2 - 2 eta_aT eta_a eta_T + eta_TT eta_a^2)
//                 / eta_T^3,   eta_T = -(T_i/T^2)(1+alpha),
// reduced to the closed form
//   d2T/dalpha2 = 2 T^3 [ 4 (1 + (5/4) s)^2 - P(alpha) T_i/T ]
//                 / ( alpha^2 (1-alpha)^2 T_i^2 (1+alpha)^2 ),
//   s = alpha (1-alpha),  P(alpha) = 1 - 3 alpha - (5/2) alpha^2 (1-alpha)^2.
// Sign > 0 means convex, < 0 concave.  The certified regions are sufficient
// conditions only, hence the explicit enum alongside the raw value.
inline CurvatureResult integral_curve_curvature(const ThermoState& s, const GasModel& gas) {
    s.validate();
    const double x = gas.T_ion / s.T;
    const double a = s.alpha;
    const double ss = a * (1.0 - a);
    const double P = 1.0 - 3.0 * a - 2.5 * ss * ss;
    const double inner = 4.0 * (1.0 + 1.25 * ss) * (1.0 + 1.25 * ss) - P * x;
    const double value = 2.0 * s.T * s.T * s.T * inner /
                         (ss * ss * gas.T_ion * gas.T_ion * (1.0 + a) * (1.0 + a));

    CurvatureCertification cert = CurvatureCertification::uncertified;
    if (x <= 4.0)
        cert = CurvatureCertification::convex_certified;
    else if (x > 37.5964 && a <= 0.25)
        cert = CurvatureCertification::concave_certified;
    return CurvatureResult{value, cert};
}

}  // namespace ionshock
