#include "mushy/numerics.hpp"

#include <cmath>
#include <limits>
#include <sstream>

namespace mushy::numerics {

namespace {

constexpr double kSeriesLimit = 3.0;
constexpr double kBracketCap = 1e3;

std::string describe(double lo, double hi, double f_lo, double f_hi)
{
    std::ostringstream os;
    os.precision(17);
    os << "no sign change on [" << lo << ", " << hi << "]: f(lo) = " << f_lo
       << ", f(hi) = " << f_hi;
    return os.str();
}

// Unevaluated sum hi + lo carrying about 32 significant digits.
struct DoubleDouble {
    double hi;
    double lo;
};

DoubleDouble quick_two_sum(double a, double b)
{
    const double s = a + b;
    return {s, b - (s - a)};
}

DoubleDouble operator+(DoubleDouble a, DoubleDouble b)
{
    const double s = a.hi + b.hi;
    const double bb = s - a.hi;
    const double err = (a.hi - (s - bb)) + (b.hi - bb);
    return quick_two_sum(s, err + a.lo + b.lo);
}

DoubleDouble operator*(DoubleDouble a, DoubleDouble b)
{
    const double p = a.hi * b.hi;
    const double err = std::fma(a.hi, b.hi, -p) + (a.hi * b.lo + a.lo * b.hi);
    return quick_two_sum(p, err);
}

DoubleDouble operator/(DoubleDouble a, double b)
{
    const double q1 = a.hi / b;
    const double p = q1 * b;
    const double p_err = std::fma(q1, b, -p);
    const double r = ((a.hi - p) - p_err) + a.lo;
    return quick_two_sum(q1, r / b);
}

// 2/sqrt(pi) split into leading double and remainder.
constexpr DoubleDouble kTwoOverSqrtPi{1.1283791670955126, 1.533545961316588e-17};

// Maclaurin series 2/sqrt(pi) sum_n (-1)^n x^{2n+1} / (n! (2n+1)) in
// double-double, so the cancellation near |x| = 3 costs nothing visible.
double maclaurin_erf(double x)
{
    const DoubleDouble minus_x2{-(x * x), -std::fma(x, x, -(x * x))};
    DoubleDouble term{x, 0.0};
    DoubleDouble sum{x, 0.0};
    for (int n = 1; n < 120; ++n) {
        term = term * minus_x2 / static_cast<double>(n);
        const DoubleDouble t = term / static_cast<double>(2 * n + 1);
        sum = sum + t;
        if (std::abs(t.hi) < 1e-22) break;
    }
    const DoubleDouble r = kTwoOverSqrtPi * sum;
    return r.hi + r.lo;
}

// erfc(x) for x > 0 via the continued fraction
//   sqrt(pi) e^{x^2} erfc(x) = 1/(x + (1/2)/(x + 1/(x + (3/2)/(x + ...)))),
// evaluated with the modified Lentz algorithm.
double erfc_continued_fraction(double x)
{
    constexpr double tiny = 1e-300;
    double f = x;
    double c = x;
    double d = 0.0;
    for (int n = 1; n < 500; ++n) {
        const double a = 0.5 * n;
        d = x + a * d;
        if (std::abs(d) < tiny) d = tiny;
        c = x + a / c;
        if (std::abs(c) < tiny) c = tiny;
        d = 1.0 / d;
        const double delta = c * d;
        f *= delta;
        if (std::abs(delta - 1.0) < 1e-17) break;
    }
    return exp_minus_square(x) / (kSqrtPi * f);
}

}  // namespace

NoSignChange::NoSignChange(double lo, double hi, double f_lo, double f_hi)
    : std::runtime_error(describe(lo, hi, f_lo, f_hi)), lo_(lo), hi_(hi)
{
}

double exp_minus_square(double x)
{
    const double sq = x * x;
    const double err = std::fma(x, x, -sq);  // x*x = sq + err exactly
    return std::exp(-sq) * (1.0 - err);
}

double erf(double x)
{
    if (std::isnan(x)) return x;
    const double ax = std::abs(x);
    double r;
    if (ax <= kSeriesLimit) {
        r = maclaurin_erf(ax);
    } else if (ax < 30.0) {
        r = 1.0 - erfc_continued_fraction(ax);
    } else {
        r = 1.0;
    }
    return x < 0.0 ? -r : r;
}

double erfc(double x)
{
    if (x > kSeriesLimit) return x < 30.0 ? erfc_continued_fraction(x) : 0.0;
    return 1.0 - erf(x);
}

double find_root_increasing(const std::function<double(double)>& f, Bracket hint, double tol)
{
    if (!(tol > 0.0)) throw std::invalid_argument("find_root_increasing: tol must be positive");
    if (!(hint.lo < hint.hi)) throw std::invalid_argument("find_root_increasing: bracket needs lo < hi");

    double lo = hint.lo;
    double hi = hint.hi;
    double f_lo = f(lo);
    double f_hi = f(hi);
    if (f_lo == 0.0) return lo;
    if (f_lo > 0.0) throw NoSignChange(lo, hi, f_lo, f_hi);
    while (f_hi < 0.0) {
        if (hi >= kBracketCap) throw NoSignChange(lo, hi, f_lo, f_hi);
        lo = hi;
        f_lo = f_hi;
        hi = std::min(2.0 * hi, kBracketCap);
        f_hi = f(hi);
    }
    if (std::isnan(f_hi)) throw NoSignChange(lo, hi, f_lo, f_hi);
    if (f_hi == 0.0) return hi;

    // Regula falsi step when both ends are finite and the previous step
    // shrank the bracket at least by half, bisection otherwise.
    double prev_width = std::numeric_limits<double>::infinity();
    while (hi - lo > tol) {
        const double width = hi - lo;
        double x = 0.5 * (lo + hi);
        if (std::isfinite(f_hi) && width <= 0.5 * prev_width) {
            const double secant = lo - f_lo * width / (f_hi - f_lo);
            if (secant > lo && secant < hi) x = secant;
        }
        prev_width = width;
        if (x <= lo || x >= hi) break;  // bracket down to adjacent doubles
        const double fx = f(x);
        if (fx == 0.0) return x;
        if (fx < 0.0) {
            lo = x;
            f_lo = fx;
        } else {
            hi = x;
            f_hi = fx;
        }
    }
    return 0.5 * (lo + hi);
}

}  // namespace mushy::numerics
