#include "mushy/cli.hpp"

#include "mushy/asymptotics.hpp"
#include "mushy/equivalence.hpp"
#include "mushy/numerics.hpp"
#include "mushy/solver.hpp"
#include "mushy/verify.hpp"

#include <CLI11.hpp>

#include <algorithm>
#include <charconv>
#include <cmath>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>

namespace mushy::cli {

namespace {

class UsageError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

enum class Problem { Convective, Temperature, Flux };

struct Options {
    double k = 0.0, rho = 0.0, c = 0.0, latent = 0.0;
    double gamma = 0.0, epsilon = 0.0;
    std::string problem;
    std::optional<double> d_inf, h0, q0, d0;
    std::string output;

    // profile
    std::vector<double> times{1.0};
    int points = 11;
    // sweep
    std::string param;
    double from = 0.0, to = 0.0;
    int count = 11;
    std::string scale = "lin";
    // limit
    std::string h0_decades = "1:6:11";
};

Problem parse_problem(const std::string& name)
{
    if (name == "p1" || name == "convective") return Problem::Convective;
    if (name == "p2" || name == "temperature") return Problem::Temperature;
    if (name == "p3" || name == "flux") return Problem::Flux;
    throw UsageError("--problem must be one of p1|convective, p2|temperature, p3|flux");
}

double required(const std::optional<double>& v, const char* flag, const char* problem)
{
    if (!v) throw UsageError(std::string(flag) + " is required for the " + problem + " problem");
    return *v;
}

Material material_of(const Options& o) { return {o.k, o.rho, o.c, o.latent}; }
MushyZone zone_of(const Options& o) { return {o.gamma, o.epsilon}; }

BoundaryCondition condition_of(const Options& o)
{
    switch (parse_problem(o.problem)) {
    case Problem::Convective:
        return bc::Convective{required(o.h0, "--h0", "convective"), required(o.d_inf, "--dinf", "convective")};
    case Problem::Temperature:
        return bc::Temperature{required(o.d0, "--d0", "temperature")};
    case Problem::Flux:
        return bc::Flux{required(o.q0, "--q0", "flux")};
    }
    throw UsageError("unknown problem");
}

// D0 of the temperature problem that reproduces `sol`.
double equivalent_d0(const MushySolution& sol, const Material& m)
{
    if (const auto* c = std::get_if<bc::Convective>(&sol.condition())) return d0_from_convective(sol, *c, m);
    if (const auto* f = std::get_if<bc::Flux>(&sol.condition())) return d0_from_flux(sol, *f, m);
    return std::get<bc::Temperature>(sol.condition()).d0;
}

// Existence threshold of the coefficient that controls the problem; 0 for
// the temperature problem, which has none.
double threshold_of(const Material& m, const MushyZone& z, const BoundaryCondition& condition)
{
    if (const auto* c = std::get_if<bc::Convective>(&condition)) return critical_h0(m, z, c->d_inf);
    if (std::holds_alternative<bc::Flux>(condition)) return critical_q0(m, z);
    return 0.0;
}

// Output goes to --output when given, else to the caller's stream.
class Sink {
public:
    Sink(const std::string& path, std::ostream& fallback) : stream_(&fallback)
    {
        if (!path.empty()) {
            file_.open(path);
            if (!file_) throw std::runtime_error("cannot open output file " + path);
            stream_ = &file_;
        }
    }
    std::ostream& get() { return *stream_; }

private:
    std::ofstream file_;
    std::ostream* stream_;
};

void write_report(std::ostream& os, const VerificationReport& r)
{
    os << "pde_residual=" << format_number(r.pde.absolute) << "\n"
       << "pde_residual_scaled=" << format_number(r.pde.scaled) << "\n"
       << "stefan_residual=" << format_number(r.stefan.absolute) << "\n"
       << "stefan_residual_scaled=" << format_number(r.stefan.scaled) << "\n";
    if (r.width) {
        os << "width_residual=" << format_number(r.width->absolute) << "\n"
           << "width_residual_scaled=" << format_number(r.width->scaled) << "\n";
    } else {
        os << "width_residual=n/a\n";
    }
    os << "boundary_residual=" << format_number(r.boundary.absolute) << "\n"
       << "boundary_residual_scaled=" << format_number(r.boundary.scaled) << "\n"
       << "grid=" << r.grid_spec << "\n";
}

int fail_verification(std::ostream& err, const VerificationReport& report)
{
    err << "error: solution failed self-check:";
    for (const auto& f : report.failures()) err << " " << f;
    err << "\n";
    return kDomainError;
}

int cmd_solve(const Options& o, std::ostream& out, std::ostream& err)
{
    const Material m = material_of(o);
    const MushyZone z = zone_of(o);
    const BoundaryCondition condition = condition_of(o);
    const MushySolution sol = solve(m, z, condition);
    const VerificationReport report = full_report(sol);
    if (!report.passes()) return fail_verification(err, report);

    Sink sink(o.output, out);
    auto& os = sink.get();
    os << "problem=" << to_string(sol.kind()) << "\n"
       << "xi=" << format_number(sol.xi()) << "\n"
       << "mu=" << format_number(sol.mu()) << "\n"
       << "coeff_const=" << format_number(sol.coeff_const()) << "\n"
       << "coeff_erf=" << format_number(sol.coeff_erf()) << "\n"
       << "d0_equiv=" << format_number(equivalent_d0(sol, m)) << "\n";
    if (const auto* c = std::get_if<bc::Convective>(&condition))
        os << "h0_critical=" << format_number(critical_h0(m, z, c->d_inf)) << "\n";
    os << "q0_critical=" << format_number(critical_q0(m, z)) << "\n";
    write_report(os, report);
    return kOk;
}

int cmd_profile(const Options& o, std::ostream& out)
{
    if (o.points < 2) throw UsageError("--points must be at least 2");
    const Material m = material_of(o);
    const MushySolution sol = solve(m, zone_of(o), condition_of(o));
    Sink sink(o.output, out);
    auto& os = sink.get();
    os << "t,x,temperature\n";
    for (double t : o.times) {
        if (!(t > 0.0)) throw UsageError("--times entries must be positive");
        const double s = front_s(sol, t);
        for (int i = 0; i < o.points; ++i) {
            const double x = s * static_cast<double>(i) / static_cast<double>(o.points - 1);
            os << format_number(t) << "," << format_number(x) << "," << format_number(temperature(sol, x, t))
               << "\n";
        }
    }
    return kOk;
}

void set_param(Options& o, const std::string& name, double value)
{
    if (name == "h0") o.h0 = value;
    else if (name == "q0") o.q0 = value;
    else if (name == "d0") o.d0 = value;
    else if (name == "dinf") o.d_inf = value;
    else if (name == "gamma") o.gamma = value;
    else if (name == "epsilon") o.epsilon = value;
    else if (name == "k") o.k = value;
    else if (name == "rho") o.rho = value;
    else if (name == "c") o.c = value;
    else if (name == "latent") o.latent = value;
    else throw UsageError("--param must be one of h0, q0, d0, dinf, gamma, epsilon, k, rho, c, latent");
}

int cmd_sweep(const Options& base, std::ostream& out)
{
    if (base.count < 2) throw UsageError("--count must be at least 2");
    if (base.scale != "lin" && base.scale != "log") throw UsageError("--scale must be lin or log");
    if (base.scale == "log" && !(base.from > 0.0 && base.to > 0.0))
        throw UsageError("--scale log needs positive --from and --to");
    {
        Options probe = base;
        set_param(probe, base.param, base.from);
        condition_of(probe);  // usage check before any output
    }

    Sink sink(base.output, out);
    auto& os = sink.get();
    os << "param,value,xi,mu,d0_equiv,threshold\n";
    const std::string nan = format_number(std::numeric_limits<double>::quiet_NaN());
    for (int i = 0; i < base.count; ++i) {
        const double u = static_cast<double>(i) / static_cast<double>(base.count - 1);
        const double value = base.scale == "log"
                                 ? std::exp(std::log(base.from) + u * (std::log(base.to) - std::log(base.from)))
                                 : base.from + u * (base.to - base.from);
        Options o = base;
        set_param(o, base.param, value);
        const Material m = material_of(o);
        const MushyZone z = zone_of(o);
        const BoundaryCondition condition = condition_of(o);
        validate(m, z, condition);
        os << base.param << "," << format_number(value) << ",";
        try {
            const MushySolution sol = solve(m, z, condition);
            os << format_number(sol.xi()) << "," << format_number(sol.mu()) << ","
               << format_number(equivalent_d0(sol, m));
        } catch (const Subcritical&) {
            os << nan << "," << nan << "," << nan;
        }
        os << "," << format_number(threshold_of(m, z, condition)) << "\n";
    }
    return kOk;
}

std::vector<double> parse_decades(const std::string& spec)
{
    double first = 0.0, last = 0.0;
    int count = 0;
    char sep1 = 0, sep2 = 0;
    std::istringstream is(spec);
    if (!(is >> first >> sep1 >> last >> sep2 >> count) || sep1 != ':' || sep2 != ':' || !is.eof() ||
        count < 3 || !(last > first))
        throw UsageError("--h0-decades expects first:last:count, e.g. 1:6:11");
    return log_sweep(first, last, static_cast<std::size_t>(count));
}

int cmd_limit(const Options& o, std::ostream& out)
{
    if (!o.d_inf) throw UsageError("--dinf is required for limit");
    const std::vector<double> h0_values = parse_decades(o.h0_decades);
    const Material m = material_of(o);
    const MushyZone z = zone_of(o);
    validate(m, z, bc::Convective{h0_values.front(), *o.d_inf});
    const ConvergenceTable table = convergence_study(m, z, *o.d_inf, h0_values);

    Sink sink(o.output, out);
    auto& os = sink.get();
    os << "h0,xi,gap,mu,mu_gap\n";
    for (const auto& r : table.rows)
        os << format_number(r.h0) << "," << format_number(r.xi) << "," << format_number(r.gap) << ","
           << format_number(r.mu) << "," << format_number(r.mu_gap) << "\n";
    os << "# slope=" << format_number(table.fitted_slope) << "\n";
    return kOk;
}

int cmd_verify(const Options& o, std::ostream& out, std::ostream& err)
{
    const MushySolution sol = solve(material_of(o), zone_of(o), condition_of(o));
    const VerificationReport report = full_report(sol);
    Sink sink(o.output, out);
    write_report(sink.get(), report);
    sink.get() << "status=" << (report.passes() ? "pass" : "fail") << "\n";
    return report.passes() ? kOk : fail_verification(err, report);
}

int cmd_equiv(const Options& o, std::ostream& out)
{
    const Material m = material_of(o);
    const MushyZone z = zone_of(o);
    const BoundaryCondition condition = condition_of(o);
    if (std::holds_alternative<bc::Temperature>(condition))
        throw UsageError("equiv needs a convective (p1) or flux (p3) problem");
    const MushySolution sol = solve(m, z, condition);
    const EquivalenceReport r = check_equivalence(sol, m, z);
    Sink sink(o.output, out);
    sink.get() << "d0_induced=" << format_number(r.d0_induced) << "\n"
               << "xi_source=" << format_number(r.xi_source) << "\n"
               << "xi_target=" << format_number(r.xi_target) << "\n"
               << "xi_gap=" << format_number(r.xi_gap) << "\n"
               << "max_temp_gap=" << format_number(r.max_temp_gap) << "\n"
               << "fronts_gap=" << format_number(r.fronts_gap) << "\n"
               << "erf_xi=" << format_number(numerics::erf(r.xi_target)) << "\n"
               << "xi_bound=" << format_number(xi_bound(r.d0_induced, z, m)) << "\n";
    return kOk;
}

}  // namespace

std::string format_number(double value)
{
    if (std::isnan(value)) return "nan";
    if (std::isinf(value)) return value > 0 ? "inf" : "-inf";
    char buf[64];
    const auto res = std::to_chars(buf, buf + sizeof buf, value);
    return std::string(buf, res.ptr);
}

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err)
{
    Options o;
    CLI::App app{"Explicit mushy-zone similarity solutions of the one-phase Stefan problem", "mushy"};
    app.require_subcommand(1);
    app.fallthrough();
    app.set_config("--config", "", "key = value file; command-line flags take precedence");

    app.add_option("--k", o.k, "thermal conductivity, W/(m C)")->required();
    app.add_option("--rho", o.rho, "density, kg/m^3")->required();
    app.add_option("--c", o.c, "specific heat, J/(kg C)")->required();
    app.add_option("--latent", o.latent, "latent heat, J/kg")->required();
    app.add_option("--gamma", o.gamma, "mushy width-gradient product, C")->required();
    app.add_option("--epsilon", o.epsilon, "latent heat fraction at the solid front, in (0,1)")->required();
    app.add_option("--problem", o.problem, "p1|convective, p2|temperature, p3|flux");
    app.add_option("--dinf", o.d_inf, "bulk temperature magnitude for the convective face, C");
    app.add_option("--h0", o.h0, "heat transfer coefficient, kg/(C s^5/2)");
    app.add_option("--q0", o.q0, "face flux coefficient, kg/s^5/2");
    app.add_option("--d0", o.d0, "face temperature magnitude, C");
    app.add_option("--output", o.output, "write CSV/report here instead of standard output");

    auto* solve_cmd = app.add_subcommand("solve", "solve one problem and self-verify");
    auto* profile_cmd = app.add_subcommand("profile", "temperature samples as CSV t,x,temperature");
    profile_cmd->add_option("--times", o.times, "comma-separated times, s")->delimiter(',');
    profile_cmd->add_option("--points", o.points, "samples per time on [0, s(t)]");
    auto* sweep_cmd = app.add_subcommand("sweep", "vary one parameter, CSV of xi and mu");
    sweep_cmd->add_option("--param", o.param, "h0, q0, d0, dinf, gamma, epsilon, k, rho, c or latent")->required();
    sweep_cmd->add_option("--from", o.from, "first value")->required();
    sweep_cmd->add_option("--to", o.to, "last value")->required();
    sweep_cmd->add_option("--count", o.count, "number of values");
    sweep_cmd->add_option("--scale", o.scale, "lin or log spacing");
    auto* limit_cmd = app.add_subcommand("limit", "h0 -> infinity convergence table");
    limit_cmd->add_option("--h0-decades", o.h0_decades, "first:last:count exponents of 10");
    auto* verify_cmd = app.add_subcommand("verify", "residuals of every governing condition");
    auto* equiv_cmd = app.add_subcommand("equiv", "compare with the equivalent temperature problem");

    std::vector<std::string> reversed(args.rbegin(), args.rend());
    try {
        app.parse(reversed);
    } catch (const CLI::CallForHelp& e) {
        out << app.help();
        return kOk;
    } catch (const CLI::ParseError& e) {
        err << "usage error: " << e.what() << "\n";
        return kUsageError;
    }

    try {
        if (*solve_cmd || *profile_cmd || *sweep_cmd || *verify_cmd || *equiv_cmd) {
            if (o.problem.empty()) throw UsageError("--problem is required");
        }
        if (*solve_cmd) return cmd_solve(o, out, err);
        if (*profile_cmd) return cmd_profile(o, out);
        if (*sweep_cmd) return cmd_sweep(o, out);
        if (*limit_cmd) return cmd_limit(o, out);
        if (*verify_cmd) return cmd_verify(o, out, err);
        if (*equiv_cmd) return cmd_equiv(o, out);
    } catch (const UsageError& e) {
        err << "usage error: " << e.what() << "\n";
        return kUsageError;
    } catch (const Subcritical& e) {
        err << "error: " << e.what() << "\n";
        return kDomainError;
    } catch (const ValidationError& e) {
        err << "error: invalid " << e.field() << ": " << e.what() << "\n";
        return kDomainError;
    } catch (const std::exception& e) {
        err << "error: " << e.what() << "\n";
        return kDomainError;
    }
    return kUsageError;
}

}  // namespace mushy::cli
