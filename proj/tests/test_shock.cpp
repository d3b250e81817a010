// Shock layer: lab-frame speed formulas, incident/reflected solvers, Lax
// admissibility reports, and Rankine-Hugoniot conservation residuals.
//
// Frozen reference digits come from an independent extended-precision
// bisection oracle over the same closed-form system.

#include <catch2/catch_amalgamated.hpp>

#include <cmath>
#include <random>

#include "ionshock/shock.hpp"
#include "ionshock/thermo.hpp"

using namespace ionshock;
using Catch::Approx;

namespace {

double rel_err(double got, double want) {
    return std::abs(got - want) / std::abs(want);
}

ThermoState cold_base(const GasModel& gas) {
    return ThermoState{saha_alpha(1466.3, 300.0, gas).alpha, 300.0};
}

}  // namespace

TEST_CASE("speed formulas: guards and defining quadratics", "[shock][speed]") {
    const GasModel gas = hydrogen();
    REQUIRE_THROWS_AS(incident_speed(3000.0, 300.0, 0.0, gas), std::domain_error);
    REQUIRE_THROWS_AS(incident_speed(200.0, 300.0, 1.6e4, gas), std::domain_error);
    REQUIRE_THROWS_AS(reflected_speed(3000.0, 300.0, -1.0, gas), std::domain_error);
    REQUIRE_THROWS_AS(reflected_speed(200.0, 300.0, 1.6e4, gas), std::domain_error);

    // Each speed is the positive root of its quadratic
    //   z^2 - u_- beta z - (u_-^2/D) q = 0   (q = 1 incident, theta ratio reflected).
    const double u = 1.6e4;
    const double th_p = 300.0, th_m = 9656.0, th_s = 15394.0;
    {
        const double D = u * u / (gas.a2 * th_p);
        const double beta = 1.0 + (th_m / th_p - 1.0) / D;
        const double z = incident_speed(th_m, th_p, u, gas);
        REQUIRE(std::abs(z * z - u * beta * z - u * u / D) / (z * z) < 1e-14);
        REQUIRE(z > u);
    }
    {
        const double D = u * u / (gas.a2 * th_m);
        const double ratio = th_s / th_m;
        const double beta = -1.0 + (ratio - 1.0) / D;
        const double z = reflected_speed(th_s, th_m, u, gas);
        REQUIRE(std::abs(z * z - u * beta * z - u * u * ratio / D) / (z * z) < 1e-14);
        REQUIRE(z > 0.0);
    }
}

TEST_CASE("incident solve: worked case at u_- = 1.6e4", "[shock][incident]") {
    const GasModel gas = hydrogen();
    const ThermoState plus = cold_base(gas);
    const ShockSolution sol = solve_incident(plus, 1.6e4, gas);

    REQUIRE(sol.family == ShockFamily::forward);
    REQUIRE_FALSE(sol.zero_strength);
    REQUIRE(sol.upstream.u == 0.0);
    REQUIRE(sol.downstream.u == 1.6e4);

    // Frozen state and speed.
    REQUIRE(rel_err(sol.downstream.state.alpha, 0.0100798824543761) < 1e-10);
    REQUIRE(rel_err(sol.downstream.state.T, 9559.57193517663) < 1e-10);
    REQUIRE(rel_err(sol.U, 20980.4578576181) < 1e-10);
    REQUIRE(rel_err(sol.mass_flux, 12.3340731925) < 1e-9);

    // Speed formula agrees with the conservation-form expression
    // U = rho_- u_- / (rho_- - rho_+).
    const double rho_u = density(sol.upstream.state, gas);
    const double rho_d = density(sol.downstream.state, gas);
    REQUIRE(rel_err(sol.U, rho_d * 1.6e4 / (rho_d - rho_u)) < 1e-12);

    // Mass flux consistent from both sides.
    REQUIRE(rel_err(rho_u * sol.V_up, rho_d * sol.V_down) < 1e-12);
    // m^2 = -(p_- - p_+)/(v_- - v_+).
    const double dp = pressure(sol.downstream.state, gas) - pressure(sol.upstream.state, gas);
    const double dv = specific_volume(sol.downstream.state, gas) -
                      specific_volume(sol.upstream.state, gas);
    REQUIRE(rel_err(sol.mass_flux * sol.mass_flux, -dp / dv) < 1e-12);

    // Conservation residuals at machine level.
    const RHResiduals rh = rh_residuals(sol, gas);
    REQUIRE(std::abs(rh.mass) < 1e-12);
    REQUIRE(std::abs(rh.momentum) < 1e-12);
    REQUIRE(std::abs(rh.energy) < 1e-12);

    // Entropy rises and specific volume drops across the front.
    REQUIRE(entropy_eta(sol.downstream.state, gas) >
            entropy_eta(sol.upstream.state, gas));
    REQUIRE(rel_err(entropy_eta(sol.downstream.state, gas) -
                        entropy_eta(sol.upstream.state, gas),
                    3.95592353871385) < 1e-9);
    REQUIRE(dv < 0.0);

    // Lax margins, frozen: {U - u_-, (u_- + c_-) - U, U - (u_+ + c_+)}.
    const LaxReport lax = check_lax(sol, gas);
    REQUIRE(lax.admissible);
    REQUIRE_FALSE(lax.excluded_by_sign);
    REQUIRE(rel_err(lax.margins[0], 4980.4578576181) < 1e-9);
    REQUIRE(rel_err(lax.margins[1], 5532.3158583671) < 1e-9);
    REQUIRE(rel_err(lax.margins[2], 18941.5856203261) < 1e-9);
}

TEST_CASE("incident solve: weaker drive u_- = 8.1e3", "[shock][incident]") {
    const GasModel gas = hydrogen();
    const ShockSolution sol = solve_incident(cold_base(gas), 8.1e3, gas);
    REQUIRE(rel_err(sol.downstream.state.alpha, 1.29156268439429e-10) < 1e-9);
    REQUIRE(rel_err(sol.downstream.state.T, 3075.50698086851) < 1e-10);
    REQUIRE(rel_err(sol.U, 11172.0879969203) < 1e-10);
    REQUIRE(check_lax(sol, gas).admissible);
}

TEST_CASE("reflected solve: worked case from the printed minus state",
          "[shock][reflected]") {
    const GasModel gas = hydrogen();
    const ThermoState minus{0.0101, 9559.53};
    const ShockSolution sol = solve_reflected(minus, 1.6e4, gas);

    REQUIRE(sol.family == ShockFamily::backward);
    REQUIRE(sol.upstream.u == 1.6e4);
    REQUIRE(sol.downstream.u == 0.0);

    REQUIRE(rel_err(sol.downstream.state.alpha, 0.0965486413003675) < 1e-10);
    REQUIRE(rel_err(sol.downstream.state.T, 14039.0101060347) < 1e-10);
    REQUIRE(rel_err(sol.U, -6543.02344966957) < 1e-10);
    REQUIRE(sol.U < 0.0);
    REQUIRE(rel_err(sol.mass_flux, -55.5999588740) < 1e-9);

    // Conservation-form speed: U = u_- rho_- / (rho_- - rho_#) < 0.
    const double rho_u = density(sol.upstream.state, gas);
    const double rho_d = density(sol.downstream.state, gas);
    REQUIRE(rel_err(sol.U, 1.6e4 * rho_u / (rho_u - rho_d)) < 1e-12);
    REQUIRE(rel_err(rho_u * sol.V_up, rho_d * sol.V_down) < 1e-12);
    const double dp = pressure(sol.downstream.state, gas) - pressure(sol.upstream.state, gas);
    const double dv = specific_volume(sol.downstream.state, gas) -
                      specific_volume(sol.upstream.state, gas);
    REQUIRE(rel_err(sol.mass_flux * sol.mass_flux, -dp / dv) < 1e-12);

    const RHResiduals rh = rh_residuals(sol, gas);
    REQUIRE(std::abs(rh.mass) < 1e-12);
    REQUIRE(std::abs(rh.momentum) < 1e-12);
    REQUIRE(std::abs(rh.energy) < 1e-12);

    // Temperature ratio stays below the ideal-limit 3/2; theta ratio above it.
    REQUIRE(sol.downstream.state.T / minus.T < 1.5);
    REQUIRE(rel_err(sol.downstream.state.T / minus.T, 1.46858790) < 1e-7);
    REQUIRE(rel_err(sol.downstream.state.theta() / minus.theta(), 1.59427588207) < 1e-9);
    REQUIRE(rel_err(entropy_eta(sol.downstream.state, gas) - entropy_eta(minus, gas),
                    0.565424614393) < 1e-9);

    // Dimensionless strength of the reflected jump (base = minus state).
    const DimensionlessParams dp2 = dimensionless_params(
        sol.downstream.state, 0.0, minus, 1.6e4, gas);
    REQUIRE(rel_err(dp2.D, 3.1888128657) < 1e-9);
    REQUIRE(dp2.D >= 1.0 / 3.0);

    // Lax margins, frozen: {U - (u_# - c_#), u_# - U, (u_- - c_-) - U}.
    const LaxReport lax = check_lax(sol, gas);
    REQUIRE(lax.admissible);
    REQUIRE_FALSE(lax.excluded_by_sign);
    REQUIRE(rel_err(lax.margins[0], 6063.5864231761) < 1e-9);
    REQUIRE(rel_err(lax.margins[1], 6543.0234496696) < 1e-9);
    REQUIRE(rel_err(lax.margins[2], 12031.2220303376) < 1e-9);
}

TEST_CASE("incident + reflected chain from the quiescent base", "[shock][chain]") {
    const GasModel gas = hydrogen();
    const ShockSolution inc = solve_incident(cold_base(gas), 1.6e4, gas);
    const ShockSolution ref = solve_reflected(inc.downstream.state, 1.6e4, gas);
    REQUIRE(rel_err(ref.downstream.state.alpha, 0.0964980590710378) < 1e-10);
    REQUIRE(rel_err(ref.downstream.state.T, 14042.1489350562) < 1e-10);
    REQUIRE(check_lax(inc, gas).admissible);
    REQUIRE(check_lax(ref, gas).admissible);
    // Each stage multiplies the ionization fraction by ~10.
    REQUIRE(ref.downstream.state.alpha / inc.downstream.state.alpha > 9.0);
}

TEST_CASE("zero-strength guard returns the acoustic identity solution",
          "[shock][lax]") {
    const GasModel gas = hydrogen();
    const ThermoState plus = cold_base(gas);
    const double c = sound_speed(plus, gas);

    const ShockSolution inc = solve_incident(plus, 0.0, gas);
    REQUIRE(inc.zero_strength);
    REQUIRE(inc.U == Approx(c).epsilon(1e-15));
    REQUIRE(inc.downstream.state.alpha == plus.alpha);
    REQUIRE(inc.downstream.state.T == plus.T);
    const LaxReport lax = check_lax(inc, gas);
    REQUIRE(lax.zero_strength);
    REQUIRE(lax.admissible);  // by convention for the degenerate jump
    REQUIRE(std::abs(lax.margins[1]) < 1e-9);
    REQUIRE(std::abs(lax.margins[2]) < 1e-9);

    const ShockSolution ref = solve_reflected(plus, 0.0, gas);
    REQUIRE(ref.zero_strength);
    REQUIRE(ref.U == Approx(-c).epsilon(1e-15));
    REQUIRE(check_lax(ref, gas).admissible);

    // Weak (but finite) drives approach the acoustic speed from above.
    const ShockSolution weak = solve_incident(plus, 1.0, gas);
    REQUIRE_FALSE(weak.zero_strength);
    REQUIRE(weak.U > sound_speed(plus, gas));
    REQUIRE(std::abs(weak.U - sound_speed(plus, gas)) < 5.0);

    REQUIRE_THROWS_AS(solve_incident(plus, -1.0, gas), std::domain_error);
    REQUIRE_THROWS_AS(solve_reflected(plus, -1.0, gas), std::domain_error);
}

TEST_CASE("check_lax rejects fabricated inadmissible solutions", "[shock][lax]") {
    const GasModel gas = hydrogen();
    const ShockSolution sol = solve_incident(cold_base(gas), 1.6e4, gas);

    // Swapping the states produces an expansion-shock impostor: at least one
    // characteristic margin must go negative.
    ShockSolution swapped = sol;
    std::swap(swapped.upstream, swapped.downstream);
    const LaxReport rep = check_lax(swapped, gas);
    REQUIRE_FALSE(rep.admissible);
    REQUIRE((rep.margins[1] < 0.0 || rep.margins[2] < 0.0));

    // A forward solution with negative speed is excluded outright.
    ShockSolution backwardized = sol;
    backwardized.U = -sol.U;
    const LaxReport rep2 = check_lax(backwardized, gas);
    REQUIRE(rep2.excluded_by_sign);
    REQUIRE_FALSE(rep2.admissible);

    // A backward solution with positive speed likewise.
    ShockSolution ref = solve_reflected(ThermoState{0.0101, 9559.53}, 1.6e4, gas);
    ref.U = -ref.U;
    REQUIRE(check_lax(ref, gas).excluded_by_sign);

    // Labels are populated for reporting.
    for (const char* label : rep.labels) REQUIRE(label != nullptr);
}

TEST_CASE("sufficient strength conditions imply Lax admissibility",
          "[shock][lax][property]") {
    const GasModel gas = hydrogen();
    std::mt19937 rng(4242);
    std::uniform_real_distribution<double> uT(std::log(250.0), std::log(1500.0));
    std::uniform_real_distribution<double> up(std::log(200.0), std::log(2e4));
    std::uniform_real_distribution<double> uu(std::log(2e3), std::log(4e4));

    int forward_hits = 0, backward_hits = 0;
    for (int i = 0; i < 60; ++i) {
        const double T = std::exp(uT(rng)), p = std::exp(up(rng));
        const double u = std::exp(uu(rng));
        const ThermoState plus{saha_alpha(p, T, gas).alpha, T};

        const ShockSolution inc = solve_incident(plus, u, gas);
        const DimensionlessParams dpi = dimensionless_params(
            inc.downstream.state, u, plus, 0.0, gas);
        const double theta_jump = inc.downstream.state.theta() / plus.theta();
        const double bound = std::pow(std::sqrt(dpi.D) - 1.0, 2.0);
        if (dpi.D > 4.0 && theta_jump < bound) {
            ++forward_hits;
            INFO("incident T=" << T << " p=" << p << " u=" << u);
            REQUIRE(check_lax(inc, gas).admissible);
        }

        const ShockSolution ref = solve_reflected(inc.downstream.state, u, gas);
        const DimensionlessParams dpr = dimensionless_params(
            ref.downstream.state, 0.0, inc.downstream.state, u, gas);
        if (dpr.D >= 1.0 / 3.0) {
            ++backward_hits;
            INFO("reflected T=" << T << " p=" << p << " u=" << u);
            REQUIRE(check_lax(ref, gas).admissible);
        }
    }
    // The sweep must actually exercise both predicates.
    REQUIRE(forward_hits > 20);
    REQUIRE(backward_hits > 20);
}

TEST_CASE("worked hydrogen example satisfies the incident sufficient condition",
          "[shock][lax]") {
    const GasModel gas = hydrogen();
    const ThermoState plus = cold_base(gas);
    const ShockSolution sol = solve_incident(plus, 1.6e4, gas);
    const DimensionlessParams dp = dimensionless_params(
        sol.downstream.state, 1.6e4, plus, 0.0, gas);

    REQUIRE(dp.D > 4.0);
    const double bound = std::pow(std::sqrt(dp.D) - 1.0, 2.0);
    REQUIRE(rel_err(bound, 83.376026) < 1e-7);
    REQUIRE(sol.downstream.state.theta() / plus.theta() < bound);
}
