#pragma once

#include <functional>
#include <stdexcept>
#include <string>

namespace mushy::numerics {

inline constexpr double kPi = 3.14159265358979323846;
inline constexpr double kSqrtPi = 1.77245385090551602730;

/// Default convergence target on bracket width for the similarity coefficients.
inline constexpr double kRootTolerance = 1e-13;

/// Closed interval [lo, hi] with lo < hi.
struct Bracket {
    double lo;
    double hi;
};

/// Raised when bracket expansion never straddles a root.
class NoSignChange : public std::runtime_error {
public:
    NoSignChange(double lo, double hi, double f_lo, double f_hi);

    double lo() const noexcept { return lo_; }
    double hi() const noexcept { return hi_; }

private:
    double lo_;
    double hi_;
};

/// Error function, absolute error below 1e-15 for every finite x.
///
/// |x| <= 3 sums the Maclaurin series in double-double arithmetic; beyond
/// that erf = 1 - erfc with erfc from its continued fraction.
double erf(double x);

/// Complementary error function 1 - erf(x), accurate in relative terms for x > 3.
double erfc(double x);

/// exp(-x^2) with the rounding error of x*x compensated.
double exp_minus_square(double x);

/// Root of a continuous, strictly increasing f.
///
/// Starts from `hint`; while f(hint.hi) < 0 the upper end is doubled, up to
/// 1e3. Refines with a bisection/secant hybrid until the bracket is no wider
/// than `tol` and returns its midpoint (or an exact zero if one is hit).
/// Throws NoSignChange if no straddling bracket is found.
double find_root_increasing(const std::function<double(double)>& f,
                            Bracket hint = {1e-12, 1.0},
                            double tol = kRootTolerance);

}  // namespace mushy::numerics
