#pragma once

#include "mushy/model.hpp"

#include <functional>
#include <stdexcept>
#include <string>

namespace mushy {

/// Boundary coefficient at or below the existence threshold.
class Subcritical : public std::domain_error {
public:
    Subcritical(std::string parameter, double supplied, double threshold);

    const std::string& parameter() const noexcept { return parameter_; }  ///< "h0" or "q0"
    double supplied() const noexcept { return supplied_; }
    double threshold() const noexcept { return threshold_; }

private:
    std::string parameter_;
    double supplied_;
    double threshold_;
};

/// The front-coefficient equation could not be bracketed.
class NoRoot : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// Root lies beyond kMaxFrontCoefficient, where e^{xi^2} terms lose meaning.
class RootOutOfRange : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// Field evaluated outside 0 <= x <= s(t), t > 0.
class OutOfDomain : public std::domain_error {
public:
    using std::domain_error::domain_error;
};

inline constexpr double kMaxFrontCoefficient = 25.0;

/// Smallest h0 for which the convective problem has a mushy solution:
/// sqrt(gamma (1 - eps) rho l k / 2) / d_inf. Existence needs h0 strictly above it.
double critical_h0(const Material& m, const MushyZone& z, double d_inf);

/// Smallest q0 for the flux problem: sqrt(gamma (1 - eps) rho l k / 2).
double critical_q0(const Material& m, const MushyZone& z);

// Auxiliary functions of the front-coefficient equations. All are defined
// for x >= 0 except f_limit, which diverges at 0.

/// e^{-x^2} / (k / (h0 sqrt(pi alpha)) + erf x); strictly decreasing.
double f_conv(double x, double h0, const Material& m);

/// x + gamma (1 - eps) sqrt(pi) / (2 d_inf) / f_conv(x); strictly increasing.
double g_conv(double x, double h0, double d_inf, const Material& m, const MushyZone& z);

/// e^{-x^2} / erf x, the h0 -> infinity limit of f_conv.
double f_limit(double x);

/// x + gamma (1 - eps) sqrt(pi) / (2 d) / f_limit(x), the h0 -> infinity
/// limit of g_conv when d = d_inf.
double g_limit(double x, double d, const Material& m, const MushyZone& z);

/// g_limit / f_limit, finite at 0 (value 0) and strictly increasing.
double g_temperature(double x, double d, const Material& m, const MushyZone& z);

/// (x + gamma (1 - eps) k e^{x^2} / (2 q0 sqrt alpha)) e^{x^2}; strictly increasing.
double g_flux(double x, double q0, const Material& m, const MushyZone& z);

enum class EquationId {
    Convective,       ///< (d_inf c / (l sqrt pi)) f_conv = g_conv
    ConvectiveLimit,  ///< g_limit / f_limit = d_inf c / (l sqrt pi)
    Temperature,      ///< g_temperature = d0 c / (l sqrt pi)
    Flux,             ///< g_flux = q0 / (rho l sqrt alpha)
};

const char* to_string(EquationId id) noexcept;

/// lhs(x) = rhs(x) for x > 0, oriented so residual() is strictly increasing
/// for supercritical data.
struct TranscendentalEq {
    EquationId id;
    std::function<double(double)> lhs;
    std::function<double(double)> rhs;
    bool lhs_increasing;

    double residual(double x) const { return lhs_increasing ? lhs(x) - rhs(x) : rhs(x) - lhs(x); }
};

TranscendentalEq convective_equation(const Material& m, const MushyZone& z, const bc::Convective& b);
TranscendentalEq convective_limit_equation(const Material& m, const MushyZone& z, double d_inf);
TranscendentalEq temperature_equation(const Material& m, const MushyZone& z, const bc::Temperature& b);
TranscendentalEq flux_equation(const Material& m, const MushyZone& z, const bc::Flux& b);

/// Robin face. Throws Subcritical iff h0 <= critical_h0.
MushySolution solve_convective(const Material& m, const MushyZone& z, const bc::Convective& b);

/// Prescribed face temperature -d0.
MushySolution solve_temperature(const Material& m, const MushyZone& z, const bc::Temperature& b);

/// Prescribed face flux q0 / sqrt t. Throws Subcritical iff q0 <= critical_q0.
MushySolution solve_flux(const Material& m, const MushyZone& z, const bc::Flux& b);

/// h0 -> infinity limit of the convective problem: face held at -d_inf.
/// Same fields as solve_temperature with d0 = d_inf, tagged ConvectiveLimit.
MushySolution solve_convective_limit(const Material& m, const MushyZone& z, double d_inf);

/// Dispatches on the variant; Temperature goes to solve_temperature.
MushySolution solve(const Material& m, const MushyZone& z, const BoundaryCondition& condition);

/// Front positions 2 xi sqrt(alpha t) and 2 mu sqrt(alpha t); zero at t = 0.
double front_s(const MushySolution& sol, double t);
double front_r(const MushySolution& sol, double t);

/// Solid temperature at 0 <= x <= s(t), t > 0; throws OutOfDomain otherwise.
double temperature(const MushySolution& sol, double x, double t);

}  // namespace mushy
