#include "mushy/equivalence.hpp"

#include "mushy/numerics.hpp"
#include "mushy/solver.hpp"

#include <algorithm>
#include <cmath>
#include <limits>

namespace mushy {

ComparisonGrid comparison_grid(std::size_t n_t, std::size_t n_x)
{
    ComparisonGrid grid;
    grid.t_values.reserve(n_t);
    for (std::size_t i = 0; i < n_t; ++i) {
        const double e = n_t == 1 ? 0.0 : -2.0 + 4.0 * static_cast<double>(i) / static_cast<double>(n_t - 1);
        grid.t_values.push_back(std::pow(10.0, e));
    }
    grid.x_fractions.reserve(n_x);
    for (std::size_t j = 0; j < n_x; ++j)
        grid.x_fractions.push_back(n_x == 1 ? 0.0 : static_cast<double>(j) / static_cast<double>(n_x - 1));
    return grid;
}

double max_temperature_gap(const MushySolution& a, const MushySolution& b, const ComparisonGrid& grid)
{
    double worst = 0.0;
    for (double t : grid.t_values) {
        const double s = std::min(front_s(a, t), front_s(b, t));
        for (double f : grid.x_fractions) {
            const double x = f * s;
            worst = std::max(worst, std::abs(temperature(a, x, t) - temperature(b, x, t)));
        }
    }
    return worst;
}

double max_front_gap(const MushySolution& a, const MushySolution& b, const ComparisonGrid& grid)
{
    double worst = 0.0;
    for (double t : grid.t_values) {
        worst = std::max(worst, std::abs(front_s(a, t) - front_s(b, t)));
        worst = std::max(worst, std::abs(front_r(a, t) - front_r(b, t)));
    }
    return worst;
}

double d0_from_convective(const MushySolution& sol, const bc::Convective& b, const Material& m)
{
    const double erf_xi = numerics::erf(sol.xi());
    return b.d_inf * erf_xi / (m.k / (b.h0 * std::sqrt(numerics::kPi * m.alpha())) + erf_xi);
}

double d0_from_flux(const MushySolution& sol, const bc::Flux& b, const Material& m)
{
    return b.q0 * std::sqrt(numerics::kPi * m.alpha()) / m.k * numerics::erf(sol.xi());
}

EquivalenceReport check_equivalence(const MushySolution& source, const Material& m, const MushyZone& z)
{
    double d0;
    if (const auto* c = std::get_if<bc::Convective>(&source.condition())) {
        d0 = d0_from_convective(source, *c, m);
    } else if (const auto* f = std::get_if<bc::Flux>(&source.condition())) {
        d0 = d0_from_flux(source, *f, m);
    } else {
        throw std::invalid_argument("check_equivalence: source must carry a convective or flux condition");
    }

    const MushySolution target = solve_temperature(m, z, bc::Temperature{d0});
    const ComparisonGrid grid = comparison_grid();

    EquivalenceReport report{};
    report.d0_induced = d0;
    report.xi_source = source.xi();
    report.xi_target = target.xi();
    report.xi_gap = std::abs(source.xi() - target.xi());
    report.max_temp_gap = max_temperature_gap(source, target, grid);
    report.fronts_gap = max_front_gap(source, target, grid);
    return report;
}

double xi_bound(double d0, const MushyZone& z, const Material& m, std::optional<double> d_inf)
{
    if (!(d0 > 0.0)) throw std::invalid_argument("xi_bound: d0 must be positive");
    const double latent_part = z.gamma * (1.0 - z.epsilon) * m.latent;
    const double factor = latent_part > 0.0 ? std::sqrt(2.0 * m.c / (numerics::kPi * latent_part))
                                            : std::numeric_limits<double>::infinity();
    if (!d_inf) return d0 * factor;
    if (!(*d_inf > d0)) throw DegenerateBound("xi_bound: needs d_inf > d0");
    return *d_inf * d0 / (*d_inf - d0) * factor;
}

}  // namespace mushy
