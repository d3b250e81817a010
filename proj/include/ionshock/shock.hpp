// Incident and reflected shock solvers: explicit shock-speed formulas,
// relative-velocity bookkeeping, Rankine-Hugoniot residual checks, and full
// Lax admissibility reports.
//
// Sign conventions: the incident shock is a forward (right-moving) wave with
// speed U_I > u_- > 0; the gas ahead of it and the gas behind the reflected
// shock are at rest.  The reflected shock is a backward wave whose lab-frame
// speed is -U_R with U_R > 0; U_R itself is what the quadratic produces.

#pragma once

#include <array>
#include <cassert>
#include <cmath>
#include <stdexcept>

#include "ionshock/gas.hpp"
#include "ionshock/hugoniot.hpp"
#include "ionshock/thermo.hpp"

namespace ionshock {

enum class ShockFamily { forward, backward };

struct FlowState {
    ThermoState state;
    double u;  // lab-frame particle velocity [m/s]
};

struct ShockSolution {
    FlowState upstream;    // side the shock propagates into
    FlowState downstream;  // shocked side
    double U;              // lab-frame shock speed (signed) [m/s]
    double V_up;           // relative velocity U - u_upstream [m/s]
    double V_down;         // relative velocity U - u_downstream [m/s]
    double mass_flux;      // rho_up V_up [kg m^-2 s^-1]; equals rho_down V_down
    ShockFamily family;
    bool zero_strength;    // identity solution from the |du| guard
};

// ---------------------------------------------------------------------------
// Shock-speed formulas
// ---------------------------------------------------------------------------

// Incident (forward) shock speed, the positive root of its quadratic:
//   U_I = (u_-/2) [ beta + sqrt(beta^2 + 4/D) ],
//   beta = 1 + (theta_-/theta_+ - 1)/D,  D = u_-^2/(a^2 theta_+).
// Always exceeds u_-.
inline double incident_speed(double theta_minus, double theta_plus, double u_minus,
                             const GasModel& gas) {
    if (!(u_minus > 0.0))
        throw std::domain_error("incident_speed: requires u_- > 0");
    if (!(theta_plus > 0.0) || !(theta_minus >= theta_plus))
        throw std::domain_error("incident_speed: requires theta_- >= theta_+ > 0");
    const double D = u_minus * u_minus / (gas.a2 * theta_plus);
    const double beta = 1.0 + (theta_minus / theta_plus - 1.0) / D;
    const double root = std::sqrt(beta * beta + 4.0 / D);
    assert(0.5 * u_minus * (beta - root) < 0.0);  // discarded branch is negative
    return 0.5 * u_minus * (beta + root);
}

// Reflected shock speed (positive by convention; lab-frame speed is -U_R):
//   U_R = (u_-/2) [ beta + sqrt(beta^2 + (4/D)(theta_#/theta_-)) ],
//   beta = -1 + (theta_#/theta_- - 1)/D,  D = u_-^2/(a^2 theta_-).
inline double reflected_speed(double theta_sharp, double theta_minus, double u_minus,
                              const GasModel& gas) {
    if (!(u_minus > 0.0))
        throw std::domain_error("reflected_speed: requires u_- > 0");
    if (!(theta_minus > 0.0) || !(theta_sharp >= theta_minus))
        throw std::domain_error("reflected_speed: requires theta_# >= theta_- > 0");
    const double D = u_minus * u_minus / (gas.a2 * theta_minus);
    const double ratio = theta_sharp / theta_minus;
    const double beta = -1.0 + (ratio - 1.0) / D;
    const double root = std::sqrt(beta * beta + 4.0 * ratio / D);
    assert(0.5 * u_minus * (beta - root) < 0.0);  // discarded branch is negative
    return 0.5 * u_minus * (beta + root);
}

// ---------------------------------------------------------------------------
// Solvers
// ---------------------------------------------------------------------------

namespace detail {

// |u_- - u_+| below this returns the identity solution outright; the jump
// system degenerates there (any speed satisfies trivial jumps), so U is set
// to the acoustic speed of the corresponding family.
constexpr double zero_strength_eps = 1e-9;  // [m/s]

inline ShockSolution identity_solution(const ThermoState& s, double u,
                                       ShockFamily family, const GasModel& gas) {
    const double c = sound_speed(s, gas);
    const double U = family == ShockFamily::forward ? u + c : u - c;
    const double rho = density(s, gas);
    return ShockSolution{FlowState{s, u}, FlowState{s, u}, U,
                         U - u, U - u, rho * (U - u), family, true};
}

}  // namespace detail

// Incident shock into the quiescent state `plus` (u_+ = 0) driven at piston
// speed u_- > 0; downstream is the unique matching Hugoniot point.
inline ShockSolution solve_incident(const ThermoState& plus, double u_minus,
                                    const GasModel& gas, const SolverOptions& opts = {}) {
    plus.validate();
    if (u_minus < 0.0)
        throw std::domain_error("solve_incident: requires u_- >= 0");
    if (u_minus < detail::zero_strength_eps)
        return detail::identity_solution(plus, 0.0, ShockFamily::forward, gas);

    const ThermoState minus = solve_hugoniot_point(plus, 0.0, u_minus, gas, opts);
    const double U = incident_speed(minus.theta(), plus.theta(), u_minus, gas);
    ShockSolution sol{FlowState{plus, 0.0}, FlowState{minus, u_minus}, U,
                      U, U - u_minus, 0.0, ShockFamily::forward, false};
    sol.mass_flux = density(plus, gas) * sol.V_up;
    return sol;
}

// Reflected shock off a rigid wall: the gas ahead is the `minus` state moving
// at u_- > 0 toward the wall; behind the backward shock the gas is at rest
// (u_# = 0).  Lab-frame shock speed is -U_R.
inline ShockSolution solve_reflected(const ThermoState& minus, double u_minus,
                                     const GasModel& gas, const SolverOptions& opts = {}) {
    minus.validate();
    if (u_minus < 0.0)
        throw std::domain_error("solve_reflected: requires u_- >= 0");
    if (u_minus < detail::zero_strength_eps)
        return detail::identity_solution(minus, 0.0, ShockFamily::backward, gas);

    const ThermoState sharp = solve_hugoniot_point(minus, u_minus, 0.0, gas, opts);
    const double U = -reflected_speed(sharp.theta(), minus.theta(), u_minus, gas);
    ShockSolution sol{FlowState{minus, u_minus}, FlowState{sharp, 0.0}, U,
                      U - u_minus, U, 0.0, ShockFamily::backward, false};
    sol.mass_flux = density(minus, gas) * sol.V_up;
    return sol;
}

// ---------------------------------------------------------------------------
// Admissibility and residuals
// ---------------------------------------------------------------------------

// Lax conditions with the full ionized sound speed, in left/right trace form:
//   forward:  u_- < U < u_- + c_-   and   u_+ + c_+ < U
//   backward: u_+ - c_+ < U < u_+   and   U < u_- - c_-
// where - is the left state and + the right state.  Each margin is the
// left-hand slack of one inequality; all must be strictly positive.  A
// backward shock with U > 0 (or forward with U < 0) is additionally flagged
// as excluded: such waves run the wrong way for their family.
struct LaxReport {
    ShockFamily family;
    std::array<const char*, 3> labels;
    std::array<double, 3> margins;
    bool excluded_by_sign;
    bool zero_strength;
    bool admissible;  // all margins > 0 and not excluded (or zero-strength)
};

inline LaxReport check_lax(const ShockSolution& sol, const GasModel& gas) {
    // Left/right assignment by family: a forward shock has its shocked gas on
    // the left; a backward shock has it on the right.
    const FlowState& left = sol.family == ShockFamily::forward ? sol.downstream : sol.upstream;
    const FlowState& right = sol.family == ShockFamily::forward ? sol.upstream : sol.downstream;
    const double c_left = sound_speed(left.state, gas);
    const double c_right = sound_speed(right.state, gas);

    LaxReport rep{};
    rep.family = sol.family;
    rep.zero_strength = sol.zero_strength;
    if (sol.family == ShockFamily::forward) {
        rep.labels = {"U - u_-", "(u_- + c_-) - U", "U - (u_+ + c_+)"};
        rep.margins = {sol.U - left.u, left.u + c_left - sol.U,
                       sol.U - (right.u + c_right)};
        rep.excluded_by_sign = sol.U < 0.0;
    } else {
        rep.labels = {"U - (u_+ - c_+)", "u_+ - U", "(u_- - c_-) - U"};
        rep.margins = {sol.U - (right.u - c_right), right.u - sol.U,
                       left.u - c_left - sol.U};
        rep.excluded_by_sign = sol.U > 0.0;
    }
    const bool strict = rep.margins[0] > 0.0 && rep.margins[1] > 0.0 && rep.margins[2] > 0.0;
    rep.admissible = sol.zero_strength || (strict && !rep.excluded_by_sign);
    return rep;
}

// Dimensionless residuals of the three jump conditions
//   U[rho] = [rho u],  U[rho u] = [rho u^2 + p],  U[rho E] = [rho u E + p u],
// with E = e + u^2/2, each normalized by the largest participating flux
// magnitude so the tolerance means the same across regimes.
struct RHResiduals {
    double mass;
    double momentum;
    double energy;
};

inline RHResiduals rh_residuals(const ShockSolution& sol, const GasModel& gas) {
    const ThermoState& su = sol.upstream.state;
    const ThermoState& sd = sol.downstream.state;
    const double uu = sol.upstream.u, ud = sol.downstream.u;
    const double rho_u = density(su, gas), rho_d = density(sd, gas);
    const double p_u = pressure(su, gas), p_d = pressure(sd, gas);
    const double E_u = energy_enthalpy(su, gas).e + 0.5 * uu * uu;
    const double E_d = energy_enthalpy(sd, gas).e + 0.5 * ud * ud;

    auto normalized = [](double jump_lhs, double jump_rhs, double scale) {
        const double s = std::max(scale, 1e-300);
        return (jump_lhs - jump_rhs) / s;
    };

    const double m1l = sol.U * (rho_d - rho_u);
    const double m1r = rho_d * ud - rho_u * uu;
    const double s1 = std::max(std::abs(rho_d * (sol.U - ud)), std::abs(rho_u * (sol.U - uu)));

    const double m2l = sol.U * (rho_d * ud - rho_u * uu);
    const double m2r = (rho_d * ud * ud + p_d) - (rho_u * uu * uu + p_u);
    const double s2 = std::max({std::abs(sol.U * rho_d * ud), std::abs(sol.U * rho_u * uu),
                                std::abs(rho_d * ud * ud + p_d), std::abs(rho_u * uu * uu + p_u)});

    const double m3l = sol.U * (rho_d * E_d - rho_u * E_u);
    const double m3r = (rho_d * ud * E_d + p_d * ud) - (rho_u * uu * E_u + p_u * uu);
    const double s3 = std::max({std::abs(sol.U * rho_d * E_d), std::abs(sol.U * rho_u * E_u),
                                std::abs(rho_d * ud * E_d + p_d * ud),
                                std::abs(rho_u * uu * E_u + p_u * uu)});

    return RHResiduals{normalized(m1l, m1r, s1), normalized(m2l, m2r, s2),
                       normalized(m3l, m3r, s3)};
}

}  // namespace ionshock
