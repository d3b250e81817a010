// Bracketed scalar root finding: plain bisection down to a coarse relative
// width, then a safeguarded secant polish that never leaves the bracket.
// The locus equations solved here are proven monotone with a single crossing,
// so bracketing is robust by construction; the polish only buys back the last
// ~30 bisection steps.

#pragma once

#include <cmath>
#include <sstream>
#include <stdexcept>
#include <string>

namespace ionshock {

// Thrown when a bracket is invalid or iteration fails to converge; the message
// carries the bracket trace (endpoints and residuals) for diagnosis.
struct RootFindingError : std::runtime_error {
    explicit RootFindingError(const std::string& msg) : std::runtime_error(msg) {}
};

struct RootResult {
    double x;        // abscissa of the root
    double f;        // residual at x
    int iterations;  // function evaluations spent refining
};

namespace detail {

inline std::string bracket_trace(const char* what, double lo, double hi,
                                 double flo, double fhi) {
    std::ostringstream os;
    os.precision(17);
    os << what << " [lo=" << lo << ", hi=" << hi << "; f(lo)=" << flo
       << ", f(hi)=" << fhi << "]";
    return os.str();
}

}  // namespace detail

// Finds the root of f in [lo, hi] given residuals of opposite sign at the
// endpoints.  Bisects until the bracket width falls below coarse_tol, then
// polishes with secant steps clipped to the shrinking bracket (forcing a
// bisection whenever two consecutive steps land on the same side, so false
// position cannot stall), stopping at tol.
//
// Widths are measured relative to max(|lo|, |hi|) by default; passing
// abs_scale > 0 makes them absolute multiples of abs_scale instead, which is
// what the log-alpha coordinate needs (a log width *is* a relative width).
// Infinite residuals at probes are legal and treated by sign only.
template <class F>
RootResult solve_bracketed(F&& f, double lo, double hi, double flo, double fhi,
                           double tol, double coarse_tol = 1e-3,
                           double abs_scale = 0.0) {
    if (!(lo < hi))
        throw RootFindingError(detail::bracket_trace("invalid bracket ordering", lo, hi, flo, fhi));
    if (std::isnan(flo) || std::isnan(fhi))
        throw RootFindingError(detail::bracket_trace("NaN residual at bracket endpoint", lo, hi, flo, fhi));
    if (flo == 0.0) return RootResult{lo, 0.0, 0};
    if (fhi == 0.0) return RootResult{hi, 0.0, 0};
    if ((flo > 0.0) == (fhi > 0.0))
        throw RootFindingError(detail::bracket_trace("no sign change over bracket", lo, hi, flo, fhi));

    const int max_iter = 400;
    int used = 0;
    auto width_ok = [&](double t) {
        const double scale = abs_scale > 0.0 ? abs_scale : std::max(std::abs(lo), std::abs(hi));
        return hi - lo <= t * scale;
    };
    auto absorb = [&](double x, double fx) {  // shrink bracket; true if lo side moved
        if ((fx > 0.0) == (flo > 0.0)) {
            lo = x;
            flo = fx;
            return true;
        }
        hi = x;
        fhi = fx;
        return false;
    };

    // Phase 1: bisection to a coarse width.
    while (!width_ok(coarse_tol)) {
        if (++used > max_iter)
            throw RootFindingError(detail::bracket_trace("bisection failed to converge", lo, hi, flo, fhi));
        const double mid = 0.5 * (lo + hi);
        const double fm = f(mid);
        if (std::isnan(fm))
            throw RootFindingError(detail::bracket_trace("NaN residual inside bracket", lo, hi, flo, fhi));
        if (fm == 0.0) return RootResult{mid, 0.0, used};
        absorb(mid, fm);
    }

    // Phase 2: safeguarded secant polish.
    int stalled = 0;  // consecutive updates on the same side
    bool last_side = false;
    while (!width_ok(tol)) {
        if (++used > max_iter)
            throw RootFindingError(detail::bracket_trace("polish failed to converge", lo, hi, flo, fhi));
        double x = 0.5 * (lo + hi);
        if (stalled < 2 && std::isfinite(flo) && std::isfinite(fhi) && fhi != flo) {
            const double secant = lo - flo * (hi - lo) / (fhi - flo);
            if (secant > lo && secant < hi) x = secant;
        }
        const double fx = f(x);
        if (std::isnan(fx))
            throw RootFindingError(detail::bracket_trace("NaN residual inside bracket", lo, hi, flo, fhi));
        if (fx == 0.0) return RootResult{x, 0.0, used};
        const bool side = absorb(x, fx);
        stalled = (used > 1 && side == last_side) ? stalled + 1 : 0;
        last_side = side;
    }

    // Report the endpoint with the smaller finite residual.
    if (!std::isfinite(flo)) return RootResult{hi, fhi, used};
    if (!std::isfinite(fhi)) return RootResult{lo, flo, used};
    return std::abs(flo) <= std::abs(fhi) ? RootResult{lo, flo, used}
                                          : RootResult{hi, fhi, used};
}

}  // namespace ionshock
