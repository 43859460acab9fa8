#include "mushy/verify.hpp"

#include "mushy/numerics.hpp"
#include "mushy/solver.hpp"

#include <quadmath.h>

#include <algorithm>
#include <cmath>
#include <sstream>

namespace mushy {

namespace {

using quad = __float128;

// Solid temperature in quad precision, straight from the coefficients.
struct QuadProfile {
    quad c1;
    quad c2;
    quad alpha;

    quad operator()(quad x, quad t) const { return c1 + c2 * erfq(x / (2 * sqrtq(alpha * t))); }
};

// Analytic T_x = coeff_erf e^{-eta^2} / sqrt(pi alpha t) at similarity variable eta.
double gradient_at(const MushySolution& sol, double eta, double t)
{
    return sol.coeff_erf() * numerics::exp_minus_square(eta) /
           std::sqrt(numerics::kPi * sol.material().alpha() * t);
}

template <class Fn>
Residual worst_over(std::span<const double> t_values, Fn&& fn)
{
    Residual worst;
    for (double t : t_values) {
        const Residual r = fn(t);
        worst.absolute = std::max(worst.absolute, r.absolute);
        worst.scaled = std::max(worst.scaled, r.scaled);
    }
    return worst;
}

Residual compare(double lhs, double rhs, double scale)
{
    const double diff = std::abs(lhs - rhs);
    return {diff, diff / scale};
}

}  // namespace

std::string GridSpec::describe() const
{
    std::ostringstream os;
    os.precision(6);
    os << t_values.size() << " times";
    if (!t_values.empty()) os << " in [" << t_values.front() << ", " << t_values.back() << "]";
    os << " x " << x_fractions.size() << " fractions of s(t), fd_step_scale " << fd_step_scale;
    return os.str();
}

GridSpec default_grid()
{
    GridSpec g;
    g.t_values = {1e-2, 1e-1, 1.0, 10.0, 100.0};
    for (int i = 0; i <= 10; ++i) g.x_fractions.push_back(0.1 * i);
    g.fd_step_scale = 1e-4;
    return g;
}

void validate(const GridSpec& g)
{
    if (g.t_values.empty() || g.x_fractions.empty()) throw std::invalid_argument("GridSpec: empty grid");
    if (!std::is_sorted(g.t_values.begin(), g.t_values.end()) || !(g.t_values.front() > 0.0))
        throw std::invalid_argument("GridSpec: t_values must be positive and sorted");
    if (!std::is_sorted(g.x_fractions.begin(), g.x_fractions.end()) || g.x_fractions.front() < 0.0 ||
        g.x_fractions.back() > 1.0)
        throw std::invalid_argument("GridSpec: x_fractions must be sorted within [0, 1]");
    if (!(g.fd_step_scale > 0.0 && g.fd_step_scale < 0.5))
        throw std::invalid_argument("GridSpec: fd_step_scale must lie in (0, 0.5)");
}

Residual residual_heat_equation(const MushySolution& sol, const GridSpec& g)
{
    validate(g);
    const QuadProfile profile{sol.coeff_const(), sol.coeff_erf(), sol.material().alpha()};
    const double magnitude = std::abs(sol.coeff_const());

    Residual worst;
    for (double t : g.t_values) {
        const double s = front_s(sol, t);
        const quad ht = static_cast<quad>(g.fd_step_scale) * t;
        const quad hx = static_cast<quad>(g.fd_step_scale) * s;
        for (double f : g.x_fractions) {
            const quad x = static_cast<quad>(f) * s;
            if (!(x - hx > 0 && x + hx < s)) continue;  // interior only
            const quad tq = t;
            const quad centre = profile(x, tq);
            const quad dt = (profile(x, tq + ht) - profile(x, tq - ht)) / (2 * ht);
            const quad dxx = (profile(x + hx, tq) - 2 * centre + profile(x - hx, tq)) / (hx * hx);
            const double r = static_cast<double>(fabsq(dt - profile.alpha * dxx));
            worst.absolute = std::max(worst.absolute, r);
            worst.scaled = std::max(worst.scaled, r * t / magnitude);
        }
    }
    return worst;
}

Residual residual_stefan(const MushySolution& sol, const MushyZone& z, const Material& m,
                         std::span<const double> t_values)
{
    const double front_speed = z.epsilon * sol.xi() + (1.0 - z.epsilon) * sol.mu();
    return worst_over(t_values, [&](double t) {
        const double lhs = m.k * gradient_at(sol, sol.xi(), t);
        const double rhs = m.rho * m.latent * front_speed * std::sqrt(m.alpha() / t);
        return compare(lhs, rhs, std::abs(rhs));
    });
}

Residual residual_mushy_width(const MushySolution& sol, const MushyZone& z,
                              std::span<const double> t_values)
{
    if (!(z.gamma > 0.0)) throw std::invalid_argument("residual_mushy_width: needs gamma > 0");
    return worst_over(t_values, [&](double t) {
        const double width = front_r(sol, t) - front_s(sol, t);
        return compare(gradient_at(sol, sol.xi(), t) * width, z.gamma, z.gamma);
    });
}

Residual residual_boundary(const MushySolution& sol, const BoundaryCondition& condition,
                           const Material& m, std::span<const double> t_values)
{
    // T(0,t) = coeff_const since erf(0) = 0.
    const double face = sol.coeff_const();
    if (const auto* c = std::get_if<bc::Convective>(&condition)) {
        if (sol.kind() != ProblemKind::Convective)
            throw KindMismatch(std::string("convective condition against a ") + to_string(sol.kind()) + " solution");
        return worst_over(t_values, [&](double t) {
            const double lhs = m.k * gradient_at(sol, 0.0, t);
            const double rhs = c->h0 / std::sqrt(t) * (face + c->d_inf);
            return compare(lhs, rhs, c->h0 * c->d_inf / std::sqrt(t));
        });
    }
    if (const auto* f = std::get_if<bc::Flux>(&condition)) {
        if (sol.kind() != ProblemKind::Flux)
            throw KindMismatch(std::string("flux condition against a ") + to_string(sol.kind()) + " solution");
        return worst_over(t_values, [&](double t) {
            const double lhs = m.k * gradient_at(sol, 0.0, t);
            const double rhs = f->q0 / std::sqrt(t);
            return compare(lhs, rhs, rhs);
        });
    }
    const double d0 = std::get<bc::Temperature>(condition).d0;
    return worst_over(t_values, [&](double) { return compare(face, -d0, d0); });
}

ClassicalCheck classical_limit_check(const Material& m, double ste)
{
    if (!(ste > 0.0)) throw std::invalid_argument("classical_limit_check: ste must be positive");
    const MushyZone classical{0.0, 0.5};
    const MushySolution sol = solve_temperature(m, classical, bc::Temperature{ste * m.latent / m.c});

    const auto neumann = [ste](double x) {
        return numerics::kSqrtPi * x * std::exp(x * x) * numerics::erf(x) - ste;
    };
    double lo = 0.0;
    double hi = 1.0;
    while (neumann(hi) < 0.0) {
        lo = hi;
        hi *= 2.0;
    }
    for (int i = 0; i < 80; ++i) {
        const double mid = 0.5 * (lo + hi);
        (neumann(mid) < 0.0 ? lo : hi) = mid;
    }
    const double xi_classical = 0.5 * (lo + hi);
    return {xi_classical, sol.xi(), std::abs(xi_classical - sol.xi())};
}

std::vector<std::string> VerificationReport::failures(const Thresholds& limits) const
{
    std::vector<std::string> out;
    if (!(pde.scaled <= limits.pde)) out.emplace_back("heat equation");
    if (!(stefan.scaled <= limits.stefan)) out.emplace_back("stefan condition");
    if (width && !(width->scaled <= limits.width)) out.emplace_back("mushy width");
    if (!(boundary.scaled <= limits.boundary)) out.emplace_back("boundary condition");
    return out;
}

VerificationReport full_report(const MushySolution& sol, const BoundaryCondition& condition,
                               const Material& m, const MushyZone& z, const GridSpec& g)
{
    validate(g);
    VerificationReport report;
    report.pde = residual_heat_equation(sol, g);
    report.stefan = residual_stefan(sol, z, m, g.t_values);
    if (z.gamma > 0.0) report.width = residual_mushy_width(sol, z, g.t_values);
    report.boundary = residual_boundary(sol, condition, m, g.t_values);
    report.grid_spec = g.describe();
    return report;
}

VerificationReport full_report(const MushySolution& sol, const GridSpec& g)
{
    return full_report(sol, sol.condition(), sol.material(), sol.mushy(), g);
}

}  // namespace mushy
