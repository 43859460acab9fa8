#pragma once

#include <stdexcept>
#include <string>
#include <variant>

namespace mushy {

/// Thermal properties of the solid phase, SI units.
struct Material {
    double k;        ///< conductivity, W/(m C)
    double rho;      ///< density, kg/m^3
    double c;        ///< specific heat, J/(kg C)
    double latent;   ///< latent heat of fusion, J/kg

    /// Diffusivity k / (rho c), m^2/s.
    double alpha() const noexcept { return k / (rho * c); }
};

inline double alpha(const Material& m) noexcept { return m.alpha(); }

/// Isothermal mushy region: `gamma` is the product of the solid-side
/// gradient and the mushy width; `epsilon` is the fraction of latent heat
/// released at the solid front. gamma == 0 collapses the region (classical
/// Neumann limit).
struct MushyZone {
    double gamma;
    double epsilon;
};

namespace bc {

/// k T_x(0,t) = (h0 / sqrt t) (T(0,t) + d_inf).
struct Convective {
    double h0;
    double d_inf;
};

/// k T_x(0,t) = q0 / sqrt t.
struct Flux {
    double q0;
};

/// T(0,t) = -d0.
struct Temperature {
    double d0;
};

}  // namespace bc

using BoundaryCondition = std::variant<bc::Convective, bc::Flux, bc::Temperature>;

std::string describe(const BoundaryCondition& condition);

class ValidationError : public std::invalid_argument {
public:
    ValidationError(std::string field, const std::string& what)
        : std::invalid_argument(what), field_(std::move(field))
    {
    }

    /// Name of the first violated invariant's field.
    const std::string& field() const noexcept { return field_; }

private:
    std::string field_;
};

void validate(const Material& m);
void validate(const MushyZone& z);
void validate(const BoundaryCondition& condition);

/// Throws ValidationError naming the first violated invariant.
void validate(const Material& m, const MushyZone& z, const BoundaryCondition& condition);

enum class ProblemKind {
    Convective,       ///< convective face, Robin condition
    Temperature,      ///< prescribed face temperature
    Flux,             ///< prescribed face flux
    ConvectiveLimit,  ///< h0 -> infinity limit of the convective problem
};

const char* to_string(ProblemKind kind) noexcept;

/// Similarity solution of the one-phase mushy-zone problem.
///
/// Temperature in the solid is coeff_const + coeff_erf erf(x / (2 sqrt(alpha t)))
/// for 0 <= x <= s(t); the fronts are s(t) = 2 xi sqrt(alpha t) (solid/mush)
/// and r(t) = 2 mu sqrt(alpha t) (mush/liquid). For the flux problem xi and mu
/// hold the front coefficients usually written omega and nu.
///
/// Instances only come out of `make`, which rejects anything that breaks
/// the invariants.
class MushySolution {
public:
    static MushySolution make(ProblemKind kind, double xi, double mu, double coeff_const,
                              double coeff_erf, const Material& material,
                              const MushyZone& mushy, const BoundaryCondition& condition);

    ProblemKind kind() const noexcept { return kind_; }
    double xi() const noexcept { return xi_; }
    double mu() const noexcept { return mu_; }
    double coeff_const() const noexcept { return coeff_const_; }
    double coeff_erf() const noexcept { return coeff_erf_; }
    const Material& material() const noexcept { return material_; }
    const MushyZone& mushy() const noexcept { return mushy_; }
    const BoundaryCondition& condition() const noexcept { return condition_; }

    /// Zero-width mushy region (gamma == 0).
    bool classical_limit() const noexcept { return mushy_.gamma == 0.0; }

    /// Copy with coeff_erf scaled by `factor` and nothing else touched.
    /// Bypasses the profile invariants; used to check that the residual
    /// checks actually detect broken solutions.
    MushySolution perturbed(double factor) const;

private:
    MushySolution() = default;

    ProblemKind kind_{};
    double xi_ = 0.0;
    double mu_ = 0.0;
    double coeff_const_ = 0.0;
    double coeff_erf_ = 0.0;
    Material material_{};
    MushyZone mushy_{};
    BoundaryCondition condition_{};
};

}  // namespace mushy
