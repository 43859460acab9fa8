#include "mushy/solver.hpp"

#include "mushy/numerics.hpp"

#include <algorithm>
#include <cmath>
#include <sstream>

namespace mushy {

using numerics::kSqrtPi;

namespace {

std::string subcritical_message(const std::string& parameter, double supplied, double threshold)
{
    std::ostringstream os;
    os.precision(17);
    os << "subcritical data: " << parameter << " = " << supplied << " must exceed "
       << parameter << "* = " << threshold;
    return os.str();
}

// gamma (1 - eps) rho l k / 2, common to both thresholds.
double threshold_square(const Material& m, const MushyZone& z)
{
    return z.gamma * (1.0 - z.epsilon) * m.rho * m.latent * m.k / 2.0;
}

// k / (h0 sqrt(pi alpha)): the Biot-like resistance ratio in f_conv.
double resistance(double h0, const Material& m)
{
    return m.k / (h0 * std::sqrt(numerics::kPi * m.alpha()));
}

double find_front(const TranscendentalEq& eq)
{
    double xi;
    try {
        xi = numerics::find_root_increasing([&](double x) { return eq.residual(x); }, {0.0, 1.0});
    } catch (const numerics::NoSignChange& e) {
        throw NoRoot(std::string(to_string(eq.id)) + " equation: " + e.what());
    }
    if (!(xi > 0.0)) throw NoRoot(std::string(to_string(eq.id)) + " equation: root at x = 0");
    if (xi > kMaxFrontCoefficient) {
        std::ostringstream os;
        os.precision(17);
        os << to_string(eq.id) << " equation: front coefficient " << xi << " exceeds "
           << kMaxFrontCoefficient;
        throw RootOutOfRange(os.str());
    }
    return xi;
}

// Shared by the temperature problem and the convective limit.
MushySolution solve_fixed_face(ProblemKind kind, const TranscendentalEq& eq, const Material& m,
                               const MushyZone& z, double d)
{
    const double xi = find_front(eq);
    const double erf_xi = numerics::erf(xi);
    const double mu = xi + z.gamma * kSqrtPi / (2.0 * d) * std::exp(xi * xi) * erf_xi;
    return MushySolution::make(kind, xi, mu, -d, d / erf_xi, m, z, bc::Temperature{d});
}

// coefficient * factor, with a zero coefficient winning over an overflowed factor.
double mushy_term(double coefficient, double factor)
{
    return coefficient == 0.0 ? 0.0 : coefficient * factor;
}

}  // namespace

Subcritical::Subcritical(std::string parameter, double supplied, double threshold)
    : std::domain_error(subcritical_message(parameter, supplied, threshold)),
      parameter_(std::move(parameter)),
      supplied_(supplied),
      threshold_(threshold)
{
}

double critical_h0(const Material& m, const MushyZone& z, double d_inf)
{
    return std::sqrt(threshold_square(m, z)) / d_inf;
}

double critical_q0(const Material& m, const MushyZone& z)
{
    return std::sqrt(threshold_square(m, z));
}

double f_conv(double x, double h0, const Material& m)
{
    return numerics::exp_minus_square(x) / (resistance(h0, m) + numerics::erf(x));
}

double g_conv(double x, double h0, double d_inf, const Material& m, const MushyZone& z)
{
    // 1/f_conv written out so it overflows to +inf instead of dividing by 0.
    const double inv_f = (resistance(h0, m) + numerics::erf(x)) * std::exp(x * x);
    return x + mushy_term(z.gamma * (1.0 - z.epsilon) * kSqrtPi / (2.0 * d_inf), inv_f);
}

double f_limit(double x)
{
    return numerics::exp_minus_square(x) / numerics::erf(x);
}

double g_limit(double x, double d, const Material&, const MushyZone& z)
{
    const double inv_f = numerics::erf(x) * std::exp(x * x);
    return x + mushy_term(z.gamma * (1.0 - z.epsilon) * kSqrtPi / (2.0 * d), inv_f);
}

double g_temperature(double x, double d, const Material&, const MushyZone& z)
{
    // g_limit(x) * erf(x) e^{x^2}, expanded so x = 0 evaluates to 0.
    const double w = numerics::erf(x) * std::exp(x * x);
    return x * w + mushy_term(z.gamma * (1.0 - z.epsilon) * kSqrtPi / (2.0 * d), w * w);
}

double g_flux(double x, double q0, const Material& m, const MushyZone& z)
{
    const double e = std::exp(x * x);
    return (x + mushy_term(z.gamma * (1.0 - z.epsilon) * m.k / (2.0 * q0 * std::sqrt(m.alpha())), e)) * e;
}

const char* to_string(EquationId id) noexcept
{
    switch (id) {
    case EquationId::Convective: return "convective";
    case EquationId::ConvectiveLimit: return "convective-limit";
    case EquationId::Temperature: return "temperature";
    case EquationId::Flux: return "flux";
    }
    return "unknown";
}

TranscendentalEq convective_equation(const Material& m, const MushyZone& z, const bc::Convective& b)
{
    const double scale = b.d_inf * m.c / (m.latent * kSqrtPi);
    return {EquationId::Convective,
            [=](double x) { return scale * f_conv(x, b.h0, m); },
            [=](double x) { return g_conv(x, b.h0, b.d_inf, m, z); },
            false};
}

TranscendentalEq convective_limit_equation(const Material& m, const MushyZone& z, double d_inf)
{
    const double target = d_inf * m.c / (m.latent * kSqrtPi);
    return {EquationId::ConvectiveLimit,
            [=](double x) { return g_temperature(x, d_inf, m, z); },
            [=](double) { return target; },
            true};
}

TranscendentalEq temperature_equation(const Material& m, const MushyZone& z, const bc::Temperature& b)
{
    const double target = b.d0 * m.c / (m.latent * kSqrtPi);
    return {EquationId::Temperature,
            [=](double x) { return g_temperature(x, b.d0, m, z); },
            [=](double) { return target; },
            true};
}

TranscendentalEq flux_equation(const Material& m, const MushyZone& z, const bc::Flux& b)
{
    const double target = b.q0 / (m.rho * m.latent * std::sqrt(m.alpha()));
    return {EquationId::Flux,
            [=](double x) { return g_flux(x, b.q0, m, z); },
            [=](double) { return target; },
            true};
}

MushySolution solve_convective(const Material& m, const MushyZone& z, const bc::Convective& b)
{
    validate(m, z, b);
    const double threshold = critical_h0(m, z, b.d_inf);
    if (!(b.h0 > threshold)) throw Subcritical("h0", b.h0, threshold);

    const double xi = find_front(convective_equation(m, z, b));
    const double erf_xi = numerics::erf(xi);
    const double a = m.alpha();
    const double biot = b.h0 * std::sqrt(numerics::kPi * a) / m.k;
    const double mu = xi + z.gamma * m.k / (2.0 * b.d_inf * b.h0 * std::sqrt(a)) *
                               std::exp(xi * xi) * (1.0 + biot * erf_xi);
    const double denom = 1.0 + biot * erf_xi;
    const double c1 = -biot * b.d_inf * erf_xi / denom;
    const double c2 = biot * b.d_inf / denom;
    return MushySolution::make(ProblemKind::Convective, xi, mu, c1, c2, m, z, b);
}

MushySolution solve_temperature(const Material& m, const MushyZone& z, const bc::Temperature& b)
{
    validate(m, z, b);
    return solve_fixed_face(ProblemKind::Temperature, temperature_equation(m, z, b), m, z, b.d0);
}

MushySolution solve_flux(const Material& m, const MushyZone& z, const bc::Flux& b)
{
    validate(m, z, b);
    const double threshold = critical_q0(m, z);
    if (!(b.q0 > threshold)) throw Subcritical("q0", b.q0, threshold);

    const double omega = find_front(flux_equation(m, z, b));
    const double a = m.alpha();
    const double nu = omega + z.gamma * m.k / (2.0 * b.q0 * std::sqrt(a)) * std::exp(omega * omega);
    const double a2 = b.q0 * std::sqrt(numerics::kPi * a) / m.k;
    const double a1 = -a2 * numerics::erf(omega);
    return MushySolution::make(ProblemKind::Flux, omega, nu, a1, a2, m, z, b);
}

MushySolution solve_convective_limit(const Material& m, const MushyZone& z, double d_inf)
{
    validate(m, z, bc::Temperature{d_inf});
    return solve_fixed_face(ProblemKind::ConvectiveLimit, convective_limit_equation(m, z, d_inf), m,
                            z, d_inf);
}

MushySolution solve(const Material& m, const MushyZone& z, const BoundaryCondition& condition)
{
    if (const auto* c = std::get_if<bc::Convective>(&condition)) return solve_convective(m, z, *c);
    if (const auto* f = std::get_if<bc::Flux>(&condition)) return solve_flux(m, z, *f);
    return solve_temperature(m, z, std::get<bc::Temperature>(condition));
}

double front_s(const MushySolution& sol, double t)
{
    if (t < 0.0) throw OutOfDomain("front_s: t must be non-negative");
    return 2.0 * sol.xi() * std::sqrt(sol.material().alpha() * t);
}

double front_r(const MushySolution& sol, double t)
{
    if (t < 0.0) throw OutOfDomain("front_r: t must be non-negative");
    return 2.0 * sol.mu() * std::sqrt(sol.material().alpha() * t);
}

double temperature(const MushySolution& sol, double x, double t)
{
    if (!(t > 0.0)) throw OutOfDomain("temperature: t must be positive");
    const double s = front_s(sol, t);
    if (!(x >= 0.0 && x <= s)) {
        std::ostringstream os;
        os.precision(17);
        os << "temperature: x = " << x << " outside [0, s(t) = " << s << "]";
        throw OutOfDomain(os.str());
    }
    const double eta = x / (2.0 * std::sqrt(sol.material().alpha() * t));
    // min: rounding can leave a +1e-17 residue at x = s(t)
    return std::min(sol.coeff_const() + sol.coeff_erf() * numerics::erf(eta), 0.0);
}

}  // namespace mushy
