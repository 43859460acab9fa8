#pragma once

#include "mushy/model.hpp"

#include <vector>

namespace mushy {

struct ConvergenceRow {
    double h0;
    double xi;
    double gap;     ///< xi_infinity - xi(h0), positive
    double mu;
    double mu_gap;  ///< mu_infinity - mu(h0)
};

struct ConvergenceTable {
    std::vector<ConvergenceRow> rows;  ///< increasing h0
    double xi_infinity = 0.0;
    double mu_infinity = 0.0;
    /// Least-squares slope and intercept of log(gap) against log(h0),
    /// i.e. gap ~ rate_constant * h0^fitted_slope.
    double fitted_slope = 0.0;
    double rate_constant = 0.0;
    std::size_t fitted_points = 0;
};

/// Gaps below this carry no rate information and are left out of the fit.
inline constexpr double kMinFittedGap = 1e-10;

/// 10^1, 10^1.5, ..., 10^6.
std::vector<double> default_h0_sweep();

/// log-spaced values 10^first ... 10^last, `count` points (count >= 2).
std::vector<double> log_sweep(double first_exponent, double last_exponent, std::size_t count);

/// Solves the convective problem for every h0 (sorted ascending) and the
/// h0 -> infinity limit once, then fits the convergence rate.
/// Needs at least 3 values spanning two decades; propagates Subcritical.
ConvergenceTable convergence_study(const Material& m, const MushyZone& z, double d_inf,
                                   std::vector<double> h0_values);

}  // namespace mushy
