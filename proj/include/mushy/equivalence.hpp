#pragma once

#include "mushy/model.hpp"

#include <optional>
#include <stdexcept>
#include <vector>

namespace mushy {

/// Bulk-temperature bound asked for with d_inf <= d0.
class DegenerateBound : public std::invalid_argument {
public:
    using std::invalid_argument::invalid_argument;
};

/// Sample points for comparing two solutions: geometric in t, and positions
/// given as fractions of the solid front s(t).
struct ComparisonGrid {
    std::vector<double> t_values;
    std::vector<double> x_fractions;
};

/// n_t times geometric over [1e-2, 1e2] by n_x fractions uniform on [0, 1].
ComparisonGrid comparison_grid(std::size_t n_t = 50, std::size_t n_x = 50);

/// Max |T_a - T_b| over the grid. Positions use the smaller of the two
/// solid fronts so both profiles are inside their domains.
double max_temperature_gap(const MushySolution& a, const MushySolution& b, const ComparisonGrid& grid);

/// Max over the grid times of |s_a - s_b| and |r_a - r_b|.
double max_front_gap(const MushySolution& a, const MushySolution& b, const ComparisonGrid& grid);

/// Face temperature magnitude of a convective solution, which as a
/// prescribed temperature reproduces the same solution:
/// D0 = d_inf erf(xi) / (k / (h0 sqrt(pi alpha)) + erf(xi)), 0 < D0 < d_inf.
double d0_from_convective(const MushySolution& sol, const bc::Convective& b, const Material& m);

/// Same for a flux solution: D0 = (q0 sqrt(pi alpha) / k) erf(omega).
double d0_from_flux(const MushySolution& sol, const bc::Flux& b, const Material& m);

struct EquivalenceReport {
    double d0_induced;
    double xi_source;
    double xi_target;
    double xi_gap;        ///< |xi_source - xi_target|
    double max_temp_gap;  ///< over comparison_grid()
    double fronts_gap;
};

/// Solves the temperature problem with the D0 induced by a convective or
/// flux solution and measures how far apart the two solutions are.
EquivalenceReport check_equivalence(const MushySolution& source, const Material& m, const MushyZone& z);

/// Upper bound for erf(xi) on the temperature problem with face data d0:
///   d0 sqrt(2c / (pi gamma (1-eps) l))                         without d_inf,
///   d_inf d0 / (d_inf - d0) sqrt(2c / (pi gamma (1-eps) l))    with d_inf > d0.
/// +infinity when gamma == 0. Does not check any particular xi.
double xi_bound(double d0, const MushyZone& z, const Material& m, std::optional<double> d_inf = std::nullopt);

}  // namespace mushy
