#include "mushy/model.hpp"
#include "mushy/numerics.hpp"

#include <doctest.h>

#include <cmath>

using namespace mushy;

namespace {

std::string violated(const Material& m, const MushyZone& z, const BoundaryCondition& b)
{
    try {
        validate(m, z, b);
    } catch (const ValidationError& e) {
        return e.field();
    }
    return "";
}

const Material ones{1, 1, 1, 1};

}  // namespace

TEST_CASE("alpha is k / (rho c)")
{
    CHECK(alpha(Material{1, 1, 1, 1}) == 1.0);
    CHECK(alpha(Material{2, 4, 0.5, 1}) == 1.0);
    CHECK(Material{0.6, 1000, 4200, 3.3e5}.alpha() == doctest::Approx(1.4285714285714285e-7).epsilon(1e-15));
}

TEST_CASE("validate names the first violated invariant")
{
    CHECK(violated(ones, {0.1, 1.2}, bc::Flux{2}) == "epsilon");
    CHECK(violated(ones, {0.1, 0.5}, bc::Convective{-1, 1}) == "h0");
    CHECK(violated(ones, {0.1, 0.5}, bc::Flux{2}).empty());

    CHECK(violated({0, 1, 1, 1}, {0.1, 0.5}, bc::Flux{2}) == "k");
    CHECK(violated({1, -1, 1, 1}, {0.1, 0.5}, bc::Flux{2}) == "rho");
    CHECK(violated({1, 1, 0, 1}, {0.1, 0.5}, bc::Flux{2}) == "c");
    CHECK(violated({1, 1, 1, 0}, {0.1, 0.5}, bc::Flux{2}) == "latent");
    CHECK(violated(ones, {-0.1, 0.5}, bc::Flux{2}) == "gamma");
    CHECK(violated(ones, {0.1, 0.0}, bc::Flux{2}) == "epsilon");
    CHECK(violated(ones, {0.1, 1.0}, bc::Flux{2}) == "epsilon");
    CHECK(violated(ones, {0.1, 1.0 - 1e-9}, bc::Flux{2}).empty());
    CHECK(violated(ones, {0.0, 0.5}, bc::Flux{2}).empty());
    CHECK(violated(ones, {0.1, 0.5}, bc::Convective{1, 0}) == "d_inf");
    CHECK(violated(ones, {0.1, 0.5}, bc::Flux{0}) == "q0");
    CHECK(violated(ones, {0.1, 0.5}, bc::Temperature{-2}) == "d0");
    CHECK(violated(ones, {0.1, 0.5}, bc::Temperature{std::nan("")}) == "d0");
}

TEST_CASE("MushySolution::make enforces the solution invariants")
{
    const MushyZone z{0.1, 0.5};
    const double xi = 0.6;
    const double c2 = 1.0 / numerics::erf(xi);
    const BoundaryCondition t = bc::Temperature{1.0};

    const auto ok = MushySolution::make(ProblemKind::Temperature, xi, 0.7, -1.0, c2, ones, z, t);
    CHECK(ok.xi() == xi);
    CHECK(ok.mu() == 0.7);
    CHECK_FALSE(ok.classical_limit());

    CHECK_THROWS(MushySolution::make(ProblemKind::Temperature, 0.0, 0.7, -1.0, c2, ones, z, t));
    CHECK_THROWS(MushySolution::make(ProblemKind::Temperature, xi, 0.5, -1.0, c2, ones, z, t));
    CHECK_THROWS(MushySolution::make(ProblemKind::Temperature, xi, 0.7, -1.0, 1.01 * c2, ones, z, t));
    CHECK_THROWS(MushySolution::make(ProblemKind::Temperature, xi, 0.7, 1.0, -c2, ones, z, t));
    CHECK_THROWS(MushySolution::make(ProblemKind::Flux, xi, 0.7, -1.0, c2, ones, z, t));
    CHECK_THROWS(MushySolution::make(ProblemKind::Convective, xi, 0.7, -1.0, c2, ones, z, t));
    CHECK_THROWS_AS(MushySolution::make(ProblemKind::Temperature, xi, 0.7, -1.0, c2, ones, {0.1, 2.0}, t),
                    ValidationError);

    // zero-width region only with gamma == 0
    const auto classical = MushySolution::make(ProblemKind::Temperature, xi, xi, -1.0, c2, ones, {0.0, 0.5}, t);
    CHECK(classical.classical_limit());
    CHECK_THROWS(MushySolution::make(ProblemKind::Temperature, xi, 0.7, -1.0, c2, ones, {0.0, 0.5}, t));

    // the limit problem may carry its bulk temperature as either variant
    CHECK_NOTHROW(MushySolution::make(ProblemKind::ConvectiveLimit, xi, 0.7, -1.0, c2, ones, z, t));
}

TEST_CASE("perturbed copy only touches coeff_erf")
{
    const double xi = 0.6;
    const auto s = MushySolution::make(ProblemKind::Temperature, xi, 0.7, -1.0, 1.0 / numerics::erf(xi), ones,
                                       {0.1, 0.5}, bc::Temperature{1.0});
    const auto p = s.perturbed(1.01);
    CHECK(p.coeff_erf() == doctest::Approx(1.01 * s.coeff_erf()).epsilon(1e-15));
    CHECK(p.coeff_const() == s.coeff_const());
    CHECK(p.xi() == s.xi());
    CHECK(p.mu() == s.mu());
}

TEST_CASE("describe and to_string")
{
    CHECK(describe(bc::Flux{2}) == "flux(q0=2)");
    CHECK(describe(bc::Convective{10, 1}) == "convective(h0=10, d_inf=1)");
    CHECK(std::string(to_string(ProblemKind::ConvectiveLimit)) == "convective-limit");
}
