#include "mushy/asymptotics.hpp"

#include "mushy/solver.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <stdexcept>

namespace mushy {

std::vector<double> log_sweep(double first_exponent, double last_exponent, std::size_t count)
{
    if (count < 2) throw std::invalid_argument("log_sweep: need at least 2 points");
    std::vector<double> values;
    values.reserve(count);
    for (std::size_t i = 0; i < count; ++i) {
        const double e = first_exponent +
                         (last_exponent - first_exponent) * static_cast<double>(i) / static_cast<double>(count - 1);
        values.push_back(std::pow(10.0, e));
    }
    return values;
}

std::vector<double> default_h0_sweep()
{
    return log_sweep(1.0, 6.0, 11);
}

ConvergenceTable convergence_study(const Material& m, const MushyZone& z, double d_inf,
                                   std::vector<double> h0_values)
{
    std::sort(h0_values.begin(), h0_values.end());
    if (h0_values.size() < 3) throw std::invalid_argument("convergence_study: need at least 3 h0 values");
    if (!(h0_values.front() > 0.0) || h0_values.back() / h0_values.front() < 100.0)
        throw std::invalid_argument("convergence_study: h0 values must span at least two decades");

    const MushySolution limit = solve_convective_limit(m, z, d_inf);

    ConvergenceTable table;
    table.xi_infinity = limit.xi();
    table.mu_infinity = limit.mu();
    table.rows.reserve(h0_values.size());
    for (double h0 : h0_values) {
        const MushySolution sol = solve_convective(m, z, bc::Convective{h0, d_inf});
        table.rows.push_back({h0, sol.xi(), limit.xi() - sol.xi(), sol.mu(), limit.mu() - sol.mu()});
    }

    // ordinary least squares on (log h0, log gap)
    double sx = 0.0, sy = 0.0, sxx = 0.0, sxy = 0.0;
    std::size_t n = 0;
    for (const auto& row : table.rows) {
        if (!(row.gap >= kMinFittedGap)) continue;
        const double x = std::log(row.h0);
        const double y = std::log(row.gap);
        sx += x;
        sy += y;
        sxx += x * x;
        sxy += x * y;
        ++n;
    }
    table.fitted_points = n;
    if (n < 2) {
        table.fitted_slope = std::numeric_limits<double>::quiet_NaN();
        table.rate_constant = std::numeric_limits<double>::quiet_NaN();
        return table;
    }
    const double dn = static_cast<double>(n);
    table.fitted_slope = (dn * sxy - sx * sy) / (dn * sxx - sx * sx);
    table.rate_constant = std::exp((sy - table.fitted_slope * sx) / dn);
    return table;
}

}  // namespace mushy
