#include "mushy/model.hpp"

#include "mushy/numerics.hpp"

#include <cmath>
#include <sstream>

namespace mushy {

namespace {

template <class... Ts>
struct overloaded : Ts... {
    using Ts::operator()...;
};
template <class... Ts>
overloaded(Ts...) -> overloaded<Ts...>;

void require_positive(double value, const char* field, const char* what)
{
    if (!(value > 0.0) || !std::isfinite(value)) throw ValidationError(field, what);
}

void require(bool ok, const char* message)
{
    if (!ok) throw std::logic_error(std::string("MushySolution: ") + message);
}

bool kind_matches(ProblemKind kind, const BoundaryCondition& condition)
{
    switch (kind) {
    case ProblemKind::Convective:
        return std::holds_alternative<bc::Convective>(condition);
    case ProblemKind::ConvectiveLimit:
        return std::holds_alternative<bc::Convective>(condition) ||
               std::holds_alternative<bc::Temperature>(condition);
    case ProblemKind::Temperature:
        return std::holds_alternative<bc::Temperature>(condition);
    case ProblemKind::Flux:
        return std::holds_alternative<bc::Flux>(condition);
    }
    return false;
}

}  // namespace

std::string describe(const BoundaryCondition& condition)
{
    std::ostringstream os;
    os.precision(17);
    std::visit(overloaded{
                   [&](const bc::Convective& b) { os << "convective(h0=" << b.h0 << ", d_inf=" << b.d_inf << ")"; },
                   [&](const bc::Flux& b) { os << "flux(q0=" << b.q0 << ")"; },
                   [&](const bc::Temperature& b) { os << "temperature(d0=" << b.d0 << ")"; },
               },
               condition);
    return os.str();
}

void validate(const Material& m)
{
    require_positive(m.k, "k", "k must be positive");
    require_positive(m.rho, "rho", "rho must be positive");
    require_positive(m.c, "c", "c must be positive");
    require_positive(m.latent, "latent", "latent heat must be positive");
}

void validate(const MushyZone& z)
{
    if (!(z.gamma >= 0.0) || !std::isfinite(z.gamma))
        throw ValidationError("gamma", "gamma must be non-negative");
    if (!(z.epsilon > 0.0 && z.epsilon < 1.0))
        throw ValidationError("epsilon", "epsilon out of (0,1)");
}

void validate(const BoundaryCondition& condition)
{
    std::visit(overloaded{
                   [](const bc::Convective& b) {
                       require_positive(b.h0, "h0", "h0 must be positive");
                       require_positive(b.d_inf, "d_inf", "d_inf must be positive");
                   },
                   [](const bc::Flux& b) { require_positive(b.q0, "q0", "q0 must be positive"); },
                   [](const bc::Temperature& b) { require_positive(b.d0, "d0", "d0 must be positive"); },
               },
               condition);
}

void validate(const Material& m, const MushyZone& z, const BoundaryCondition& condition)
{
    validate(m);
    validate(z);
    validate(condition);
}

const char* to_string(ProblemKind kind) noexcept
{
    switch (kind) {
    case ProblemKind::Convective: return "convective";
    case ProblemKind::Temperature: return "temperature";
    case ProblemKind::Flux: return "flux";
    case ProblemKind::ConvectiveLimit: return "convective-limit";
    }
    return "unknown";
}

MushySolution MushySolution::make(ProblemKind kind, double xi, double mu, double coeff_const,
                                  double coeff_erf, const Material& material,
                                  const MushyZone& mushy, const BoundaryCondition& condition)
{
    validate(material, mushy, condition);
    require(kind_matches(kind, condition), "boundary condition does not match problem kind");
    require(xi > 0.0 && std::isfinite(xi), "xi must be positive");
    require(std::isfinite(mu) && mu >= xi, "mu must not be below xi");
    require(mushy.gamma > 0.0 || mu == xi, "mu must equal xi when gamma is zero");
    require(coeff_const < 0.0 && coeff_erf > 0.0, "profile coefficients have wrong signs");
    // T(s(t), t) = 0
    const double front_value = coeff_const + coeff_erf * numerics::erf(xi);
    require(std::abs(front_value) <= 1e-12 * std::abs(coeff_const),
            "temperature does not vanish at the solid front");

    MushySolution s;
    s.kind_ = kind;
    s.xi_ = xi;
    s.mu_ = mu;
    s.coeff_const_ = coeff_const;
    s.coeff_erf_ = coeff_erf;
    s.material_ = material;
    s.mushy_ = mushy;
    s.condition_ = condition;
    return s;
}

MushySolution MushySolution::perturbed(double factor) const
{
    MushySolution copy = *this;
    copy.coeff_erf_ *= factor;
    return copy;
}

}  // namespace mushy
