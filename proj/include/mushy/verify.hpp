#pragma once

#include "mushy/model.hpp"

#include <optional>
#include <span>
#include <stdexcept>
#include <string>
#include <vector>

namespace mushy {

/// Boundary condition of the wrong variant for the solution being checked.
class KindMismatch : public std::invalid_argument {
public:
    using std::invalid_argument::invalid_argument;
};

/// Where the governing conditions are sampled. Positions are fractions of
/// the solid front s(t); fd_step_scale sets the central-difference steps
/// h_x = scale * s(t) and h_t = scale * t for the interior heat equation.
struct GridSpec {
    std::vector<double> t_values;
    std::vector<double> x_fractions;
    double fd_step_scale = 1e-4;

    std::string describe() const;
};

/// t in {1e-2, 1e-1, 1, 10, 100}, x/s(t) in {0, 0.1, ..., 1}, step scale 1e-4.
GridSpec default_grid();

/// Throws std::invalid_argument unless t_values > 0 and sorted, fractions in
/// [0, 1] and sorted, and 0 < fd_step_scale < 0.5.
void validate(const GridSpec& g);

/// Largest violation found: `absolute` in the units of the condition,
/// `scaled` divided by the natural magnitude of that condition at the same
/// sample, so thresholds do not depend on units.
struct Residual {
    double absolute = 0.0;
    double scaled = 0.0;
};

/// |T_t - alpha T_xx| by central differences at interior grid points.
/// Scale: |coeff_const| / t. The profile is evaluated in quad precision so
/// the result measures truncation error, not rounding.
Residual residual_heat_equation(const MushySolution& sol, const GridSpec& g);

/// |k T_x(s,t) - rho l (eps s' + (1-eps) r')| with the analytic gradient.
/// Scale: rho l (eps xi + (1-eps) mu) sqrt(alpha / t).
Residual residual_stefan(const MushySolution& sol, const MushyZone& z, const Material& m,
                         std::span<const double> t_values);

/// |T_x(s,t) (r - s) - gamma|. Scale: gamma. Requires gamma > 0.
Residual residual_mushy_width(const MushySolution& sol, const MushyZone& z,
                              std::span<const double> t_values);

/// Fixed-face condition. Convective and Flux conditions must match the
/// solution kind; a Temperature condition is accepted for any solution.
/// Scales: h0 d_inf / sqrt t, q0 / sqrt t, d0 respectively.
Residual residual_boundary(const MushySolution& sol, const BoundaryCondition& condition,
                           const Material& m, std::span<const double> t_values);

struct ClassicalCheck {
    double xi_classical;  ///< bisection root of sqrt(pi) x e^{x^2} erf x = ste
    double xi_solver;     ///< temperature problem with gamma = 0
    double gap;
};

/// Zero-width mushy region against the classical one-phase Neumann solution.
ClassicalCheck classical_limit_check(const Material& m, double ste);

struct Thresholds {
    double pde = 1e-6;
    double stefan = 1e-9;
    double width = 1e-9;
    double boundary = 1e-9;
};

struct VerificationReport {
    Residual pde;
    Residual stefan;
    std::optional<Residual> width;  ///< empty when gamma == 0
    Residual boundary;
    std::string grid_spec;

    /// Names of the scaled residuals above their thresholds.
    std::vector<std::string> failures(const Thresholds& limits = {}) const;
    bool passes(const Thresholds& limits = {}) const { return failures(limits).empty(); }
};

VerificationReport full_report(const MushySolution& sol, const BoundaryCondition& condition,
                               const Material& m, const MushyZone& z, const GridSpec& g = default_grid());

/// full_report against the solution's own material, zone and condition.
VerificationReport full_report(const MushySolution& sol, const GridSpec& g = default_grid());

}  // namespace mushy
