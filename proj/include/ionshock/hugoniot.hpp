// Construction and solution of the thermodynamic and kinetic parts of the
// Hugoniot locus in the (alpha, T) plane, the low-ionization approximate
// pipeline, and the dimensionless (Theta, d, D) analysis.
//
// Solver strategy: the thermodynamic locus T(alpha) through a base state is a
// strictly increasing single crossing in T, so it is solved by bracketed
// bisection plus a safeguarded secant polish.  The coupled thermodynamic +
// kinetic system is solved as nested 1-D problems: an outer bracketed search
// in log(alpha) of the kinetic residual evaluated along the thermodynamic
// curve.  Log-alpha coordinates keep the near-zero ionization regime well
// conditioned (a 300 K upstream has alpha ~ 1e-114).

#pragma once

#include <cmath>
#include <stdexcept>
#include <vector>

#include "ionshock/gas.hpp"
#include "ionshock/roots.hpp"
#include "ionshock/thermo.hpp"

namespace ionshock {

struct SolverOptions {
    double rel_tol = 1e-12;  // relative convergence target on T (and on alpha)
};

// ---------------------------------------------------------------------------
// Residuals
// ---------------------------------------------------------------------------

// Thermodynamic Hugoniot residual, LHS - RHS of
//   T_-[(4 + p_+/p_-)(1+alpha_-) + 2(T_i/T_-) alpha_-]
//     = T_+[(4 + p_-/p_+)(1+alpha_+) + 2(T_i/T_+) alpha_+],
// with the pressure ratio from the inverted Saha form.  Zero iff the two
// states lie on each other's thermodynamic locus.  Units: kelvin.
inline double thermo_residual(const ThermoState& minus, const ThermoState& plus,
                              const GasModel& gas) {
    minus.validate();
    plus.validate();
    const double lpm = log_pressure_from_log_alpha(std::log(minus.alpha), minus.T, gas);
    const double lpp = log_pressure_from_log_alpha(std::log(plus.alpha), plus.T, gas);
    const double plus_over_minus = std::exp(lpp - lpm);
    const double minus_over_plus = std::exp(lpm - lpp);
    return (4.0 + plus_over_minus) * minus.theta() + 2.0 * gas.T_ion * minus.alpha -
           (4.0 + minus_over_plus) * plus.theta() - 2.0 * gas.T_ion * plus.alpha;
}

// Kinetic Hugoniot residual (dimensionless):
//   p_-/p_+ + v_-/v_+ - 1 - theta_-/theta_+ - (u_- - u_+)^2 / (a^2 theta_+).
// Vanishes together with the equivalent (u_+-u_-)^2 + (p_+-p_-)(v_+-v_-) = 0
// form; its zero set is symmetric under exchanging the +- roles.
inline double kinetic_residual(const ThermoState& minus, double u_minus,
                               const ThermoState& plus, double u_plus,
                               const GasModel& gas) {
    minus.validate();
    plus.validate();
    const double lpm = log_pressure_from_log_alpha(std::log(minus.alpha), minus.T, gas);
    const double lpp = log_pressure_from_log_alpha(std::log(plus.alpha), plus.T, gas);
    const double Pi = std::exp(lpm - lpp);            // p_-/p_+
    const double theta_ratio = minus.theta() / plus.theta();
    const double du = u_minus - u_plus;
    const double D = du * du / (gas.a2 * plus.theta());
    // v_-/v_+ = (theta_-/theta_+) / (p_-/p_+)
    return Pi + theta_ratio / Pi - 1.0 - theta_ratio - D;
}

// ---------------------------------------------------------------------------
// Dimensionless shock-strength parameters
// ---------------------------------------------------------------------------

struct DimensionlessParams {
    double Theta;  // theta_-/theta_+ - 1
    double d;      // (T_i/theta_+)(alpha_- - alpha_+)
    double D;      // (u_- - u_+)^2 / (a^2 theta_+)

    // Admissibility of a forward shock of this strength: d < (D/2) sqrt(1+4/D).
    bool admissible() const {
        return d < 0.5 * D * std::sqrt(1.0 + 4.0 / D);
    }
};

inline DimensionlessParams dimensionless_params(const ThermoState& minus, double u_minus,
                                                const ThermoState& plus, double u_plus,
                                                const GasModel& gas) {
    const double theta_p = plus.theta();
    const double du = u_minus - u_plus;
    return DimensionlessParams{minus.theta() / theta_p - 1.0,
                               gas.T_ion * (minus.alpha - plus.alpha) / theta_p,
                               du * du / (gas.a2 * theta_p)};
}

// Positive root Theta of 15 Theta^2 - 2(D-8d) Theta + 4d^2 - D^2 - 4D = 0:
//   Theta = [D - 8d + 2 sqrt((2D-d)^2 + 15 D)] / 15.
// Requires the admissibility bound d < (D/2) sqrt(1+4/D); the companion root
// is negative for every admissible (d, D).
inline double theta_ratio(double d, double D) {
    if (!(D > 0.0))
        throw std::domain_error("theta_ratio: D must be positive");
    if (!(d >= 0.0) || !(d < 0.5 * D * std::sqrt(1.0 + 4.0 / D)))
        throw std::domain_error("theta_ratio: no admissible forward shock for this (d, D)");
    const double t = 2.0 * D - d;
    return (D - 8.0 * d + 2.0 * std::sqrt(t * t + 15.0 * D)) / 15.0;
}

// Strong-shock asymptotic form, theta_-/theta_+ ~ 3/2 + (D/3)(1 - 2d/D),
// returned as Theta (ratio minus one).  Valid when 1/D and d/D are both
// small; within 5% of the exact root for D >= 50, d/D <= 0.2.
inline double theta_ratio_asymptotic(double d, double D) {
    if (!(D > 0.0))
        throw std::domain_error("theta_ratio_asymptotic: D must be positive");
    return 0.5 + D / 3.0 - 2.0 * d / 3.0;
}

// Pressure ratio Pi = p_-/p_+ across an admissible jump, as the unique
// positive root of Pi^2 - 2[2(theta_-/theta_+ - 1) + d] Pi - theta_-/theta_+:
//   Pi = 2(theta_-/theta_+ - 1) + d + sqrt([...]^2 + theta_-/theta_+).
// Takes the ratio theta_-/theta_+ itself (not Theta).
inline double pressure_ratio_Pi(double theta_minus_over_plus, double d) {
    if (!(theta_minus_over_plus >= 1.0))
        throw std::domain_error("pressure_ratio_Pi: theta ratio must be >= 1");
    if (!(d >= 0.0))
        throw std::domain_error("pressure_ratio_Pi: d must be nonnegative");
    const double t = 2.0 * (theta_minus_over_plus - 1.0) + d;
    return t + std::sqrt(t * t + theta_minus_over_plus);
}

// ---------------------------------------------------------------------------
// Thermodynamic locus solver
// ---------------------------------------------------------------------------

namespace detail {

// Precomputed base-state quantities shared by every residual evaluation of
// one locus solve.  `drop_base_alpha` selects the low-ionization approximate
// pipeline, which discards the base ionization terms (alpha_+ ~ 0) and takes
// the base pressure as given instead of reconstructing it from (alpha, T).
struct LocusContext {
    GasModel gas;
    double T_base;
    double theta_base;   // T_base (1 + alpha_base), or T_base when dropped
    double alpha_base;   // 0 when dropped
    double log_p_base;
    double log_alpha_base;  // lower end for downstream searches (exact Saha value)
};

inline LocusContext make_exact_context(const ThermoState& base, const GasModel& gas) {
    base.validate();
    gas.validate();
    if (!(base.alpha > 0.0))
        throw std::domain_error(
            "jump solver: base alpha must be strictly positive (the search runs in "
            "log alpha); re-evaluate the base state at a temperature where the "
            "equilibrium fraction does not underflow");
    const double la = std::log(base.alpha);
    return LocusContext{gas, base.T, base.theta(), base.alpha,
                        log_pressure_from_log_alpha(la, base.T, gas), la};
}

inline LocusContext make_approx_context(double T_plus, double p_plus, const GasModel& gas) {
    gas.validate();
    if (!(T_plus > 0.0) || !(p_plus > 0.0))
        throw std::domain_error("approximate pipeline: T_+ and p_+ must be positive");
    return LocusContext{gas, T_plus, T_plus, 0.0, std::log(p_plus),
                        saha_alpha(p_plus, T_plus, gas).log_alpha};
}

// Scaled thermodynamic residual at candidate (log alpha, T) against the base:
// the K-valued residual divided by T_base (4 + Pi), Pi = p_cand/p_base.  The
// scaling keeps the tolerance meaning uniform across regimes and the division
// is folded in term by term so that Pi -> 0 or infinity stays NaN-free
// (deep-probe pressures can overflow/underflow legitimately).
inline double scaled_thermo_residual(double log_alpha, double T, const LocusContext& cx) {
    const double alpha = std::exp(log_alpha);
    const double lp = log_pressure_from_log_alpha(log_alpha, T, cx.gas);
    const double Pi = std::exp(lp - cx.log_p_base);      // may overflow to inf
    const double inv_Pi = std::exp(cx.log_p_base - lp);  // may overflow to inf
    const double theta = T * (1.0 + alpha);
    return ((4.0 + inv_Pi) * theta + 2.0 * cx.gas.T_ion * (alpha - cx.alpha_base)) /
               (cx.T_base * (4.0 + Pi)) -
           cx.theta_base / cx.T_base;
}

// Temperature on the thermodynamic locus at a given log alpha.  The residual
// is positive below the locus and negative above it; the initial bracket
// [T_base, 1e3 T_base] is expanded geometrically (x10 upward to the 1e6 K
// ceiling, /10 downward to a 1e-3 K floor) before giving up.
inline double locus_temperature(double log_alpha, const LocusContext& cx,
                                const SolverOptions& opts) {
    auto residual = [&](double T) { return scaled_thermo_residual(log_alpha, T, cx); };

    double lo = cx.T_base, hi = cx.T_base;
    double flo = residual(lo), fhi = flo;
    if (flo == 0.0) return lo;
    if (flo > 0.0) {  // root above T_base
        constexpr double T_max = 1e6;
        hi = 1e3 * cx.T_base;
        fhi = residual(hi);
        while (fhi > 0.0) {
            if (hi >= T_max)
                throw RootFindingError(detail::bracket_trace(
                    "thermodynamic locus: no crossing below the 1e6 K bracket ceiling",
                    lo, hi, flo, fhi));
            hi = std::min(hi * 10.0, T_max);
            fhi = residual(hi);
        }
    } else {  // root below T_base
        constexpr double T_min = 1e-3;
        lo = 1e-3 * cx.T_base;
        flo = residual(lo);
        while (flo < 0.0) {
            if (lo <= T_min)
                throw RootFindingError(detail::bracket_trace(
                    "thermodynamic locus: no crossing above the 1e-3 K bracket floor",
                    lo, hi, flo, fhi));
            lo = std::max(lo / 10.0, T_min);
            flo = residual(lo);
        }
    }
    // The residual is positive at lo and negative at hi; solve_bracketed
    // handles the orientation by sign.
    return solve_bracketed(residual, lo, hi, flo, fhi, opts.rel_tol).x;
}

// Kinetic residual along the thermodynamic locus, as a function of log alpha.
// Tends to -D at the zero-strength end and grows positive with alpha, with a
// single crossing (the proven uniqueness of the downstream state).
inline double kinetic_on_locus(double log_alpha, double T, double D,
                               const LocusContext& cx) {
    const double alpha = std::exp(log_alpha);
    const double lp = log_pressure_from_log_alpha(log_alpha, T, cx.gas);
    const double Pi = std::exp(lp - cx.log_p_base);
    const double theta_ratio = T * (1.0 + alpha) / cx.theta_base;
    return Pi + theta_ratio / Pi - 1.0 - theta_ratio - D;
}

// Shared nested solve: outer bracketed search in log alpha of the kinetic
// residual along the locus.  du is the velocity jump u_- - u_+.
inline ThermoState solve_point(double du, const LocusContext& cx,
                               const SolverOptions& opts) {
    const double D = du * du / (cx.gas.a2 * cx.theta_base);

    // The inner locus solves sit inside every outer residual evaluation, so
    // they run ~1e3 tighter than the outer target; otherwise inner jitter
    // would dominate the kinetic residual at the returned point.
    SolverOptions inner{std::max(opts.rel_tol * 1e-3, 5e-16)};
    auto outer = [&](double la) {
        return kinetic_on_locus(la, locus_temperature(la, cx, inner), D, cx);
    };

    // At the base point the residual is exactly -D (Pi = 1, ratios = 1); the
    // upper end is pushed toward alpha = 1 until the residual turns positive.
    const double s_lo = cx.log_alpha_base;
    const double f_lo = -D;
    double alpha_hi = std::exp(s_lo) < 0.5 ? 0.5 : 1.0 - 0.5 * (1.0 - std::exp(s_lo));
    double s_hi = std::log(alpha_hi);
    double f_hi = outer(s_hi);
    while (f_hi <= 0.0) {
        if (1.0 - alpha_hi <= 1e-5)
            throw RootFindingError(detail::bracket_trace(
                "kinetic residual has no sign change below alpha = 1 - 1e-5",
                s_lo, s_hi, f_lo, f_hi));
        alpha_hi = 1.0 - 0.1 * (1.0 - alpha_hi);
        s_hi = std::log(alpha_hi);
        f_hi = outer(s_hi);
    }

    // A log-alpha width *is* a relative alpha width, so converge on absolute
    // log width (abs_scale = 1); 0.1x the nominal tolerance keeps the final
    // kinetic residual comfortably inside the 1e-10 contract.
    const RootResult r = solve_bracketed(outer, s_lo, s_hi, f_lo, f_hi,
                                         0.1 * opts.rel_tol, 1e-3, 1.0);
    const double alpha = std::exp(r.x);
    return ThermoState{alpha, locus_temperature(r.x, cx, inner)};
}

}  // namespace detail

// Temperature of the thermodynamic Hugoniot locus through `base` at the given
// alpha (either side of the base point).
inline double locus_temperature(const ThermoState& base, double alpha,
                                const GasModel& gas, const SolverOptions& opts = {}) {
    if (!(alpha > 0.0) || !(alpha < 1.0))
        throw std::domain_error("locus_temperature: alpha must lie strictly in (0,1)");
    const auto cx = detail::make_exact_context(base, gas);
    return detail::locus_temperature(std::log(alpha), cx, opts);
}

// ---------------------------------------------------------------------------
// Hugoniot curve sampling
// ---------------------------------------------------------------------------

struct CurveSample {
    double alpha;
    double T;    // [K]
    double p;    // [Pa]
    double eta;  // dimensionless entropy
    double c;    // sound speed [m/s]
};

struct HugoniotCurve {
    ThermoState base;
    std::vector<CurveSample> samples;  // strictly increasing in alpha and T
};

// Samples the thermodynamic locus through `base` on the given strictly
// increasing alpha grid.  The returned temperatures are checked against the
// monotonicity guarantee.
inline HugoniotCurve build_hugoniot_curve(const ThermoState& base,
                                          const std::vector<double>& alpha_grid,
                                          const GasModel& gas,
                                          const SolverOptions& opts = {}) {
    const auto cx = detail::make_exact_context(base, gas);
    HugoniotCurve curve{base, {}};
    curve.samples.reserve(alpha_grid.size());
    double prev_alpha = 0.0, prev_T = 0.0;
    for (double alpha : alpha_grid) {
        if (!(alpha > 0.0) || !(alpha < 1.0))
            throw std::domain_error("build_hugoniot_curve: grid alpha outside (0,1)");
        if (!(alpha > prev_alpha))
            throw std::domain_error("build_hugoniot_curve: grid must be strictly increasing");
        const double T = detail::locus_temperature(std::log(alpha), cx, opts);
        if (!(T > prev_T))
            throw RootFindingError("build_hugoniot_curve: sampled locus not strictly increasing");
        const ThermoState s{alpha, T};
        curve.samples.push_back(CurveSample{alpha, T, pressure(s, gas),
                                            entropy_eta(s, gas), sound_speed(s, gas)});
        prev_alpha = alpha;
        prev_T = T;
    }
    return curve;
}

// ---------------------------------------------------------------------------
// Full jump solve (thermodynamic + kinetic)
// ---------------------------------------------------------------------------

// The unique state (alpha, T) with alpha in (alpha_base, 1) satisfying both
// the thermodynamic and kinetic residuals against `base` for the velocity
// jump u - u_base.  The zero set of the kinetic form is symmetric under
// exchanging the +- roles, so the base always sits in the "plus" slot
// regardless of which physical side it is on.
inline ThermoState solve_hugoniot_point(const ThermoState& base, double u_base, double u,
                                        const GasModel& gas, const SolverOptions& opts = {}) {
    if (u == u_base)
        throw std::domain_error("solve_hugoniot_point: zero-strength jump (u == u_base)");
    const auto cx = detail::make_exact_context(base, gas);
    return detail::solve_point(u - u_base, cx, opts);
}

// ---------------------------------------------------------------------------
// Low-ionization approximate pipeline
// ---------------------------------------------------------------------------

// Upstream coefficients of the low-ionization approximation.
struct ApproxUpstream {
    double T_plus;  // [K]
    double p_plus;  // [Pa]
    double A_plus;  // A_+ = (kappa p_+ T_+^{-5/2} + e^{-T_i/(2T_+)})^{-1/2}
    double A_hat;   // hat A_+ = sqrt(T_+^{5/2} / (kappa p_+)); agrees with A_+
                    // to the last digit whenever the exponential term is tiny
    double B;       // sqrt(T_+ T_i^{3/2} / (kappa p_+))
};

inline ApproxUpstream approx_upstream(double T_plus, double p_plus, const GasModel& gas) {
    gas.validate();
    if (!(T_plus > 0.0) || !(p_plus > 0.0))
        throw std::domain_error("approx_upstream: T_+ and p_+ must be positive");
    const double log_kp = std::log(gas.kappa * p_plus) - 2.5 * std::log(T_plus);
    const double A_plus = 1.0 / std::sqrt(std::exp(log_kp) + std::exp(-0.5 * gas.T_ion / T_plus));
    const double A_hat = std::exp(-0.5 * log_kp);
    const double B = std::sqrt(T_plus * std::pow(gas.T_ion, 1.5) / (gas.kappa * p_plus));
    return ApproxUpstream{T_plus, p_plus, A_plus, A_hat, B};
}

// Unique positive root chi of the approximate-jump quadratic
//   Gamma(chi) = (1+alpha_-)(T_-/T_+) chi^2
//              + 2[2(1+alpha_-)(T_-/T_+) + (T_i/T_+) alpha_- - 2] chi - 1,
// with chi = p_+/p_-; the root always lies in (0, T_+/T_-].
inline double approx_chi_root(double alpha_minus, double T_minus, double T_plus,
                              double p_plus, const GasModel& gas) {
    gas.validate();
    if (!(p_plus > 0.0))
        throw std::domain_error("approx_chi_root: p_+ must be positive");
    if (!(alpha_minus > 0.0) || !(alpha_minus < 1.0))
        throw std::domain_error("approx_chi_root: alpha_- must lie strictly in (0,1)");
    if (!(T_plus > 0.0) || !(T_minus >= T_plus))
        throw std::domain_error("approx_chi_root: requires T_- >= T_+ > 0");
    const double ratio = T_minus / T_plus;
    const double a = (1.0 + alpha_minus) * ratio;
    const double b = 2.0 * (2.0 * (1.0 + alpha_minus) * ratio +
                            (gas.T_ion / T_plus) * alpha_minus - 2.0);
    const double disc = std::sqrt(b * b + 4.0 * a);
    // Roots of a chi^2 + b chi - 1: product -1/a < 0, so exactly one positive.
    return b > 0.0 ? 2.0 / (b + disc) : (disc - b) / (2.0 * a);
}

// Sufficiency function f(xi) = xi^{9/4} e^{-xi/2} (unique maximum at xi=9/2).
inline double approx_f(double xi) {
    if (!(xi > 0.0)) throw std::domain_error("approx_f: xi must be positive");
    return std::exp(2.25 * std::log(xi) - 0.5 * xi);
}

// Genuine-nonlinearity criterion threshold 60 / f(54.5375) ~ 5.167e9.
inline double approx_gnl_threshold() { return 60.0 / approx_f(54.5375); }

// Downstream ionization bound of the low-ionization theory.
struct AlphaBoundReport {
    double bound;         // hat A_+ (T_-/T_+)^{3/4} e^{-T_i/(2 T_-)}, bounds alpha_-
    double xi;            // T_i / T_-
    double f_xi;          // f(xi)
    double B_threshold;   // 60 / f(54.5375)
    bool gnl_criterion;   // B <= threshold: downstream state certified GNL
};

inline AlphaBoundReport approx_alpha_bound(double T_minus, const ApproxUpstream& up,
                                           const GasModel& gas) {
    if (!(T_minus > up.T_plus))
        throw std::domain_error("approx_alpha_bound: requires T_- > T_+");
    const double bound = up.A_hat * std::exp(0.75 * std::log(T_minus / up.T_plus) -
                                             0.5 * gas.T_ion / T_minus);
    const double xi = gas.T_ion / T_minus;
    const double threshold = approx_gnl_threshold();
    return AlphaBoundReport{bound, xi, approx_f(xi), threshold, up.B <= threshold};
}

// Approximate-pipeline jump solve: same nested machinery as the exact solve,
// but with the base ionization terms dropped (alpha_+ ~ 0) and the upstream
// pressure taken as given.  Entry kept separate from the exact pipeline;
// callers choose explicitly.
inline ThermoState approx_solve_hugoniot_point(double T_plus, double p_plus,
                                               double u_base, double u,
                                               const GasModel& gas,
                                               const SolverOptions& opts = {}) {
    if (u == u_base)
        throw std::domain_error("approx_solve_hugoniot_point: zero-strength jump");
    const auto cx = detail::make_approx_context(T_plus, p_plus, gas);
    return detail::solve_point(u - u_base, cx, opts);
}

}  // namespace ionshock
