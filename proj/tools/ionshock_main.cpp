// ionshock: command-line front end for the ionizing-shock solver library.
//
// Subcommands
//   saha      equilibrium ionization state at a given (T, p)
//   hugoniot  shock-adiabat curve through a base state (CSV or JSON)
//   shock     incident / reflected / chained shock solves
//
// Exit codes
//   0  success
//   2  command-line usage error
//   3  invalid physical input (domain error)
//   4  output file I/O error
//   5  solved jump fails the Lax admissibility check (report still emitted)
//   6  root-finder failure (bracket trace on stderr)

#include <cmath>
#include <cstdio>
#include <cstdlib>
#include <limits>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "json.hpp"

#include "ionshock/gas.hpp"
#include "ionshock/hugoniot.hpp"
#include "ionshock/roots.hpp"
#include "ionshock/shock.hpp"
#include "ionshock/thermo.hpp"

namespace {

using json = nlohmann::ordered_json;
using namespace ionshock;

constexpr int kSchemaVersion = 1;

// One fixed numeric format everywhere (console and CSV) so reruns are
// byte-identical.
void kv(const char* key, double value, const char* unit = "") {
    std::printf("  %-24s % .16e%s%s\n", key, value, *unit ? "  " : "", unit);
}

void kv_text(const char* key, const std::string& value) {
    std::printf("  %-24s %s\n", key, value.c_str());
}

const char* yesno(bool b) { return b ? "yes" : "no"; }

json state_json(const ThermoState& s, double u, const GasModel& gas) {
    return json{{"alpha", s.alpha},
                {"T", s.T},
                {"theta", s.theta()},
                {"p", pressure(s, gas)},
                {"u", u}};
}

void print_state(const char* title, const ThermoState& s, double u,
                 const GasModel& gas) {
    std::printf("%s:\n", title);
    kv("alpha", s.alpha);
    kv("T", s.T, "K");
    kv("theta", s.theta(), "K");
    kv("p", pressure(s, gas), "Pa");
    kv("u", u, "m/s");
}

// ---------------------------------------------------------------------------
// saha
// ---------------------------------------------------------------------------

int run_saha(double T, double p, const GasModel& gas, const std::string& gas_name,
             bool as_json) {
    const SahaResult r = saha_alpha(p, T, gas);
    const ThermoState s{r.alpha, T};
    const EnergyEnthalpy eh = energy_enthalpy(s, gas);
    const double eta = r.underflow ? -std::numeric_limits<double>::infinity()
                                   : entropy_eta(s, gas);
    const double c = sound_speed(s, gas);
    const bool gnl = gnl_sufficient(s, gas);
    // Density from the *given* pressure: identical to the Saha-inverted value
    // away from underflow, and still well defined when alpha rounds to zero.
    const double v = gas.a2 * s.theta() / p;
    const double rho = 1.0 / v;

    if (as_json) {
        json out{{"schema_version", kSchemaVersion},
                 {"scenario", "saha"},
                 {"gas", gas_name},
                 {"input", {{"T", T}, {"p", p}}},
                 {"result",
                  {{"alpha", r.alpha},
                   {"log_alpha", r.log_alpha},
                   {"underflow", r.underflow},
                   {"theta", s.theta()},
                   {"density", rho},
                   {"specific_volume", v},
                   {"energy", eh.e},
                   {"enthalpy", eh.H},
                   {"eta", eta},
                   {"sound_speed", c},
                   {"gnl_sufficient", gnl}}}};
        std::printf("%s\n", out.dump(2).c_str());
        return 0;
    }

    std::printf("equilibrium ionization state (gas: %s)\n", gas_name.c_str());
    kv("T", T, "K");
    kv("p", p, "Pa");
    kv("alpha", r.alpha);
    kv("ln alpha", r.log_alpha);
    kv_text("alpha underflowed", yesno(r.underflow));
    kv("theta = (1+alpha) T", s.theta(), "K");
    kv("density", rho, "kg/m^3");
    kv("specific volume", v, "m^3/kg");
    kv("specific energy", eh.e, "J/kg");
    kv("specific enthalpy", eh.H, "J/kg");
    kv("entropy eta", eta);
    kv("sound speed", c, "m/s");
    kv_text("genuinely nonlinear", yesno(gnl));
    return 0;
}

// ---------------------------------------------------------------------------
// hugoniot
// ---------------------------------------------------------------------------

std::vector<double> make_log_grid(double lo, double hi, int n) {
    if (n < 1)
        throw std::domain_error("hugoniot: --points must be at least 1");
    if (!(lo > 0.0) || !(hi < 1.0) || !(lo <= hi))
        throw std::domain_error("hugoniot: need 0 < --alpha-min <= --alpha-max < 1");
    std::vector<double> grid(static_cast<size_t>(n));
    if (n == 1) {
        grid[0] = lo;
        return grid;
    }
    const double llo = std::log(lo), lhi = std::log(hi);
    for (int i = 0; i < n; ++i)
        grid[static_cast<size_t>(i)] = std::exp(llo + (lhi - llo) * i / (n - 1));
    grid.front() = lo;
    grid.back() = hi;
    return grid;
}

void write_curve_csv(std::FILE* f, const HugoniotCurve& curve) {
    std::fprintf(f, "alpha,T,p,eta,c\n");
    for (const CurveSample& s : curve.samples)
        std::fprintf(f, "%.16e,%.16e,%.16e,%.16e,%.16e\n", s.alpha, s.T, s.p,
                     s.eta, s.c);
}

int run_hugoniot(const ThermoState& base, const std::vector<double>& grid,
                 const GasModel& gas, const std::string& gas_name,
                 const SolverOptions& opts, bool as_json,
                 const std::string& csv_path) {
    const HugoniotCurve curve = build_hugoniot_curve(base, grid, gas, opts);

    if (!csv_path.empty()) {
        std::FILE* f = std::fopen(csv_path.c_str(), "w");
        if (!f) {
            std::fprintf(stderr, "error: cannot open '%s' for writing\n",
                         csv_path.c_str());
            return 4;
        }
        write_curve_csv(f, curve);
        std::fclose(f);
    }

    if (as_json) {
        json samples = json::array();
        for (const CurveSample& s : curve.samples)
            samples.push_back(json{{"alpha", s.alpha},
                                   {"T", s.T},
                                   {"p", s.p},
                                   {"eta", s.eta},
                                   {"c", s.c}});
        json out{{"schema_version", kSchemaVersion},
                 {"scenario", "hugoniot"},
                 {"gas", gas_name},
                 {"base", state_json(curve.base, 0.0, gas)},
                 {"samples", samples}};
        std::printf("%s\n", out.dump(2).c_str());
    } else if (csv_path.empty()) {
        write_curve_csv(stdout, curve);
    } else {
        std::printf("wrote %zu samples to %s\n", curve.samples.size(),
                    csv_path.c_str());
    }
    return 0;
}

// ---------------------------------------------------------------------------
// shock
// ---------------------------------------------------------------------------

struct StageReport {
    const char* role;
    ShockSolution sol;
    LaxReport lax;
    DimensionlessParams dimless;
    RHResiduals resid;
};

StageReport make_report(const char* role, const ShockSolution& sol,
                        const GasModel& gas) {
    // Strength parameters measure the hot side against the cold side; for
    // both families the hot side is downstream of the front.
    return StageReport{role, sol, check_lax(sol, gas),
                       dimensionless_params(sol.downstream.state, sol.downstream.u,
                                            sol.upstream.state, sol.upstream.u, gas),
                       rh_residuals(sol, gas)};
}

json stage_json(const StageReport& r, const GasModel& gas) {
    json margins = json::array();
    for (int i = 0; i < 3; ++i)
        margins.push_back(json{{"label", r.lax.labels[static_cast<size_t>(i)]},
                               {"value", r.lax.margins[static_cast<size_t>(i)]}});
    const ThermoState& up = r.sol.upstream.state;
    const ThermoState& down = r.sol.downstream.state;
    return json{
        {"role", r.role},
        {"family", r.sol.family == ShockFamily::forward ? "forward" : "backward"},
        {"upstream", state_json(up, r.sol.upstream.u, gas)},
        {"downstream", state_json(down, r.sol.downstream.u, gas)},
        {"U", r.sol.U},
        {"mass_flux", r.sol.mass_flux},
        {"dimensionless",
         {{"Theta", r.dimless.Theta}, {"d", r.dimless.d}, {"D", r.dimless.D}}},
        {"delta",
         {{"alpha", down.alpha - up.alpha},
          {"T", down.T - up.T},
          {"eta", r.sol.zero_strength
                      ? 0.0
                      : entropy_eta(down, gas) - entropy_eta(up, gas)}}},
        {"lax",
         {{"admissible", r.lax.admissible},
          {"excluded_by_sign", r.lax.excluded_by_sign},
          {"zero_strength", r.lax.zero_strength},
          {"margins", margins}}},
        {"residuals",
         {{"mass", r.resid.mass},
          {"momentum", r.resid.momentum},
          {"energy", r.resid.energy}}}};
}

void print_stage(const StageReport& r, const GasModel& gas) {
    std::printf("%s (%s family)\n", r.role,
                r.sol.family == ShockFamily::forward ? "forward" : "backward");
    print_state("upstream", r.sol.upstream.state, r.sol.upstream.u, gas);
    print_state("downstream", r.sol.downstream.state, r.sol.downstream.u, gas);
    std::printf("jump:\n");
    kv("U (lab frame)", r.sol.U, "m/s");
    kv("mass flux", r.sol.mass_flux, "kg/(m^2 s)");
    kv("Theta", r.dimless.Theta);
    kv("d", r.dimless.d);
    kv("D", r.dimless.D);
    kv("delta alpha", r.sol.downstream.state.alpha - r.sol.upstream.state.alpha);
    kv("delta T", r.sol.downstream.state.T - r.sol.upstream.state.T, "K");
    if (!r.sol.zero_strength)
        kv("delta eta", entropy_eta(r.sol.downstream.state, gas) -
                            entropy_eta(r.sol.upstream.state, gas));
    std::printf("lax:\n");
    kv_text("admissible", yesno(r.lax.admissible));
    kv_text("excluded by sign", yesno(r.lax.excluded_by_sign));
    kv_text("zero strength", yesno(r.lax.zero_strength));
    for (int i = 0; i < 3; ++i)
        kv(r.lax.labels[static_cast<size_t>(i)],
           r.lax.margins[static_cast<size_t>(i)], "m/s");
    std::printf("residuals:\n");
    kv("mass", r.resid.mass);
    kv("momentum", r.resid.momentum);
    kv("energy", r.resid.energy);
}

// Incident solve through the low-ionization approximate pipeline, packaged
// in the same ShockSolution shape as the exact path.
ShockSolution approx_incident(const ThermoState& plus, double u_minus,
                              const GasModel& gas, const SolverOptions& opts) {
    if (u_minus < detail::zero_strength_eps)
        return solve_incident(plus, u_minus, gas, opts);
    const ThermoState minus = approx_solve_hugoniot_point(
        plus.T, pressure(plus, gas), 0.0, u_minus, gas, opts);
    const double U = incident_speed(minus.theta(), plus.theta(), u_minus, gas);
    ShockSolution sol{FlowState{plus, 0.0}, FlowState{minus, u_minus}, U,
                      U, U - u_minus, 0.0, ShockFamily::forward, false};
    sol.mass_flux = density(plus, gas) * sol.V_up;
    return sol;
}

json approx_json(const ThermoState& plus, const ThermoState& minus,
                 const GasModel& gas) {
    const double p_plus = pressure(plus, gas);
    const ApproxUpstream up = approx_upstream(plus.T, p_plus, gas);
    const double chi = approx_chi_root(minus.alpha, minus.T, plus.T, p_plus, gas);
    const AlphaBoundReport bound = approx_alpha_bound(minus.T, up, gas);
    return json{{"A_plus", up.A_plus},
                {"A_hat", up.A_hat},
                {"B", up.B},
                {"chi", chi},
                {"alpha_bound",
                 {{"bound", bound.bound},
                  {"xi", bound.xi},
                  {"f_xi", bound.f_xi},
                  {"B_threshold", bound.B_threshold},
                  {"gnl_criterion", bound.gnl_criterion}}}};
}

void print_approx(const ThermoState& plus, const ThermoState& minus,
                  const GasModel& gas) {
    const double p_plus = pressure(plus, gas);
    const ApproxUpstream up = approx_upstream(plus.T, p_plus, gas);
    const double chi = approx_chi_root(minus.alpha, minus.T, plus.T, p_plus, gas);
    const AlphaBoundReport bound = approx_alpha_bound(minus.T, up, gas);
    std::printf("approximate pipeline:\n");
    kv("A_plus", up.A_plus);
    kv("A_hat", up.A_hat);
    kv("B", up.B);
    kv("chi = p_+/p_-", chi);
    kv("alpha bound", bound.bound);
    kv("xi = T_i/T_-", bound.xi);
    kv("f(xi)", bound.f_xi);
    kv("B threshold", bound.B_threshold);
    kv_text("gnl criterion", yesno(bound.gnl_criterion));
}

int run_shock(const std::string& mode, const std::string& pipeline,
              double T, double p, double alpha, bool have_alpha, double u,
              const GasModel& gas, const std::string& gas_name,
              const SolverOptions& opts, bool as_json) {
    const bool approximate = pipeline == "approximate";
    std::vector<StageReport> stages;
    json approx_block;

    if (mode == "reflect") {
        const ThermoState minus{alpha, T};
        minus.validate();
        stages.push_back(make_report("reflected", solve_reflected(minus, u, gas, opts), gas));
    } else {
        const ThermoState plus{have_alpha ? alpha : saha_alpha(p, T, gas).alpha, T};
        const ShockSolution inc = approximate ? approx_incident(plus, u, gas, opts)
                                              : solve_incident(plus, u, gas, opts);
        stages.push_back(make_report("incident", inc, gas));
        if (approximate && !inc.zero_strength)
            approx_block = approx_json(plus, inc.downstream.state, gas);
        if (mode == "chain")
            stages.push_back(make_report(
                "reflected", solve_reflected(inc.downstream.state, u, gas, opts), gas));
    }

    bool all_admissible = true;
    for (const StageReport& r : stages) all_admissible &= r.lax.admissible;

    if (as_json) {
        json stage_arr = json::array();
        for (const StageReport& r : stages) stage_arr.push_back(stage_json(r, gas));
        json out{{"schema_version", kSchemaVersion},
                 {"scenario", "shock"},
                 {"gas", gas_name},
                 {"mode", mode},
                 {"pipeline", pipeline},
                 {"input", {{"T", T}, {"p", p}, {"u", u}}},
                 {"stages", stage_arr},
                 {"all_admissible", all_admissible}};
        if (!approx_block.is_null()) out["approx"] = approx_block;
        std::printf("%s\n", out.dump(2).c_str());
    } else {
        std::printf("shock solve (gas: %s, mode: %s, pipeline: %s)\n",
                    gas_name.c_str(), mode.c_str(), pipeline.c_str());
        for (size_t i = 0; i < stages.size(); ++i) {
            if (stages.size() > 1) std::printf("--- stage %zu ---\n", i + 1);
            print_stage(stages[i], gas);
        }
        if (!approx_block.is_null())
            print_approx(stages[0].sol.upstream.state,
                         stages[0].sol.downstream.state, gas);
        kv_text("all stages admissible", yesno(all_admissible));
    }
    return all_admissible ? 0 : 5;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"ionshock: ionization equilibrium and ionizing-shock solver"};
    app.require_subcommand(1);
    app.set_version_flag("--version", "ionshock 1.0.0");
    app.set_config("--config", "", "Read options from an INI file");

    std::string gas_name = "hydrogen";
    double tol = 1e-12;
    bool as_json = false;
    app.add_option("--gas", gas_name, "Gas preset name")->capture_default_str();
    app.add_option("--tol", tol, "Relative solver tolerance")
        ->envname("IONSHOCK_TOL")
        ->capture_default_str();
    app.add_flag("--json", as_json, "Emit machine-readable JSON to stdout");

    // saha
    auto* saha = app.add_subcommand("saha", "Equilibrium ionization at (T, p)");
    double saha_T = 0.0, saha_p = 0.0;
    saha->add_option("--T", saha_T, "Temperature [K]")->required();
    saha->add_option("--p", saha_p, "Pressure [Pa]")->required();

    // hugoniot
    auto* hug = app.add_subcommand(
        "hugoniot", "Shock-adiabat curve through a base state (CSV/JSON)");
    double hug_T = 0.0, hug_p = 0.0, hug_alpha = 0.0;
    double amin = 1e-4, amax = 0.99;
    int points = 200;
    std::string csv_path;
    hug->add_option("--T", hug_T, "Base temperature [K]")->required();
    auto* hug_p_opt = hug->add_option("--p", hug_p, "Base pressure [Pa]");
    auto* hug_a_opt =
        hug->add_option("--alpha", hug_alpha, "Base ionization fraction (overrides --p)");
    hug->add_option("--alpha-min", amin, "Smallest curve alpha")->capture_default_str();
    hug->add_option("--alpha-max", amax, "Largest curve alpha")->capture_default_str();
    hug->add_option("--points", points, "Number of log-spaced samples")
        ->capture_default_str();
    hug->add_option("--csv", csv_path, "Write the curve to this CSV file");

    // shock
    auto* shk = app.add_subcommand("shock", "Solve incident/reflected shocks");
    std::string mode = "incident", pipeline = "exact";
    double shk_T = 0.0, shk_p = 0.0, shk_alpha = 0.0, shk_u = 0.0;
    shk->add_option("--mode", mode, "incident | reflect | chain")
        ->check(CLI::IsMember({"incident", "reflect", "chain"}))
        ->capture_default_str();
    shk->add_option("--pipeline", pipeline, "exact | approximate")
        ->check(CLI::IsMember({"exact", "approximate"}))
        ->capture_default_str();
    shk->add_option("--T", shk_T, "Temperature of the given state [K]")->required();
    auto* shk_p_opt = shk->add_option("--p", shk_p, "Pressure of the quiescent state [Pa]");
    auto* shk_a_opt =
        shk->add_option("--alpha", shk_alpha, "Ionization fraction of the given state");
    shk->add_option("--u", shk_u, "Piston / inflow speed u_- [m/s]")->required();

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e);
        return code == 0 ? 0 : 2;
    }

    try {
        const GasModel gas = gas_preset(gas_name);
        if (!(tol > 0.0) || !(tol < 1.0))
            throw std::domain_error("--tol must lie in (0, 1)");
        const SolverOptions opts{tol};

        if (*saha) return run_saha(saha_T, saha_p, gas, gas_name, as_json);

        if (*hug) {
            if (static_cast<bool>(*hug_a_opt) == static_cast<bool>(*hug_p_opt)) {
                std::fprintf(stderr,
                             "error: hugoniot requires exactly one of --p / --alpha\n");
                return 2;
            }
            const ThermoState base{*hug_a_opt ? hug_alpha
                                              : saha_alpha(hug_p, hug_T, gas).alpha,
                                   hug_T};
            base.validate();
            return run_hugoniot(base, make_log_grid(amin, amax, points), gas,
                                gas_name, opts, as_json, csv_path);
        }

        // shock
        if (mode == "reflect") {
            if (!*shk_a_opt) {
                std::fprintf(stderr, "error: --mode reflect requires --alpha\n");
                return 2;
            }
        } else if (!*shk_p_opt) {
            std::fprintf(stderr, "error: --mode %s requires --p\n", mode.c_str());
            return 2;
        }
        if (pipeline == "approximate" && mode == "reflect") {
            std::fprintf(stderr,
                         "error: the approximate pipeline applies to incident solves\n");
            return 2;
        }
        return run_shock(mode, pipeline, shk_T, shk_p, shk_alpha,
                         static_cast<bool>(*shk_a_opt), shk_u, gas, gas_name,
                         opts, as_json);
    } catch (const RootFindingError& e) {
        std::fprintf(stderr, "error: root finding failed: %s\n", e.what());
        return 6;
    } catch (const std::domain_error& e) {
        std::fprintf(stderr, "error: %s\n", e.what());
        return 3;
    } catch (const std::exception& e) {
        std::fprintf(stderr, "internal error: %s\n", e.what());
        return 1;
    }
}
