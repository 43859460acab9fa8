#pragma once

#include "mushy/model.hpp"
#include "mushy/solver.hpp"

#include <cmath>
#include <random>

namespace support {

// Golden front coefficients for all-ones material, gamma = 0.1, eps = 0.5.
// Produced by oracle.hpp (1e6-point sign scan on (0, 5] + 80 bisection steps
// in long double with libm erf) and cross-checked against a 40-digit mpmath
// solve of the same equations.
inline constexpr double kGoldenConvectiveXi = 0.58211864257048589;  // h0 = 10, d_inf = 1
inline constexpr double kGoldenTemperatureXi = 0.60496767955410086; // d0 = 1
inline constexpr double kGoldenFluxXi = 0.88556404702617658;        // q0 = 2
// Neumann root of sqrt(pi) x e^{x^2} erf x = 1 (80-step bisection oracle).
inline constexpr double kNeumannXiSte1 = 0.6200626333135955;

inline const mushy::Material kOnes{1.0, 1.0, 1.0, 1.0};
inline const mushy::MushyZone kGoldenZone{0.1, 0.5};

inline mushy::MushySolution golden_convective()
{
    return mushy::solve_convective(kOnes, kGoldenZone, mushy::bc::Convective{10.0, 1.0});
}

inline mushy::MushySolution golden_temperature()
{
    return mushy::solve_temperature(kOnes, kGoldenZone, mushy::bc::Temperature{1.0});
}

inline mushy::MushySolution golden_flux()
{
    return mushy::solve_flux(kOnes, kGoldenZone, mushy::bc::Flux{2.0});
}

/// Log-uniform physical data: k in [0.1, 100], rho in [500, 2e4],
/// c in [100, 5000], l in [1e4, 1e6], gamma in [0.01, 10] C,
/// eps uniform in [0.05, 0.95], d_inf in [1, 100] C.
class Generator {
public:
    explicit Generator(std::uint64_t seed) : rng_(seed) {}

    double log_uniform(double lo, double hi)
    {
        std::uniform_real_distribution<double> u(std::log(lo), std::log(hi));
        return std::exp(u(rng_));
    }

    double uniform(double lo, double hi)
    {
        std::uniform_real_distribution<double> u(lo, hi);
        return u(rng_);
    }

    mushy::Material material()
    {
        return {log_uniform(0.1, 100.0), log_uniform(500.0, 2e4), log_uniform(100.0, 5000.0),
                log_uniform(1e4, 1e6)};
    }

    mushy::MushyZone zone() { return {log_uniform(0.01, 10.0), uniform(0.05, 0.95)}; }

    double d_inf() { return log_uniform(1.0, 100.0); }

    std::mt19937_64& engine() { return rng_; }

private:
    std::mt19937_64 rng_;
};

/// Material, zone and convective/flux data strictly above threshold
/// (ratio to the threshold log-uniform in [1.05, 100]).
struct Instance {
    mushy::Material m;
    mushy::MushyZone z;
    mushy::bc::Convective convective;
    mushy::bc::Flux flux;
};

inline Instance supercritical(Generator& g)
{
    Instance in{g.material(), g.zone(), {}, {}};
    const double d_inf = g.d_inf();
    in.convective = {mushy::critical_h0(in.m, in.z, d_inf) * g.log_uniform(1.05, 100.0), d_inf};
    in.flux = {mushy::critical_q0(in.m, in.z) * g.log_uniform(1.05, 100.0)};
    return in;
}

}  // namespace support
