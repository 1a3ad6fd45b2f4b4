#pragma once

#include <cmath>
#include <cstdint>
#include <limits>
#include <stdexcept>

namespace zerogap {

// Machine epsilon of binary64 is 2^-52; the unit roundoff is half that.
// All error tracking here uses the full epsilon per rounding step, which
// doubles every per-operation margin.
inline constexpr double kEps = std::numeric_limits<double>::epsilon();

// Relative inflation applied when a bound is assembled from a chain of
// positive multiply/add steps.  Covers several thousand roundings.
inline constexpr double kPad = 1e-12;

/// Higham's gamma_k = k*u / (1 - k*u): forward error factor for a
/// computation with at most k rounding steps.
inline double gamma_fp(std::int64_t k) {
    const double ku = static_cast<double>(k) * (kEps / 2.0);
    if (ku >= 0.5) throw std::overflow_error("gamma_fp: k too large");
    return ku / (1.0 - ku);
}

/// Round a nonnegative bound upward by a generous relative margin.
inline double pad_up(double x) { return x * (1.0 + kPad); }

/// b^n for integer n by squaring, with a rigorous relative error bound.
/// Returns the computed value; *rel_err receives a bound on the relative
/// error (at most ~2*log2|n| roundings).
inline double pow_int(double b, std::int64_t n, double* rel_err = nullptr) {
    bool inv = n < 0;
    std::uint64_t e = inv ? static_cast<std::uint64_t>(-n) : static_cast<std::uint64_t>(n);
    double acc = 1.0, base = b;
    int steps = 0;
    while (e) {
        if (e & 1) { acc *= base; ++steps; }
        e >>= 1;
        if (e) { base *= base; ++steps; }
    }
    if (inv) { acc = 1.0 / acc; ++steps; }
    if (rel_err) *rel_err = gamma_fp(2 * steps + 2);
    return acc;
}

/// Upper bound for b^n (n may be negative).
inline double pow_int_up(double b, std::int64_t n) {
    double rel;
    double v = pow_int(b, n, &rel);
    return v * (1.0 + rel);
}

/// Value with an absolute error radius: the exact quantity lies in
/// [v - e, v + e].  Operations are deliberately pessimistic; the point is
/// a cheap, provable enclosure, not a tight one.
struct Ball {
    double v = 0.0;
    double e = 0.0;

    static Ball exact(double x) { return {x, 0.0}; }
    double hi() const { return v + e; }
    double lo() const { return v - e; }
};

inline Ball ball_add(Ball x, Ball y) {
    const double v = x.v + y.v;
    const double e = (x.e + y.e + kEps * std::fabs(v)) * (1.0 + 4 * kEps);
    return {v, e};
}

inline Ball ball_mul(Ball x, Ball y) {
    const double v = x.v * y.v;
    const double e = (std::fabs(x.v) * y.e + std::fabs(y.v) * x.e + x.e * y.e +
                      kEps * std::fabs(v)) *
                     (1.0 + 4 * kEps);
    return {v, e};
}

/// x + c*t for integer c (c*t incurs one rounding).
inline Ball ball_add_scaled(Ball x, double c, Ball t) {
    const double ct = c * t.v;
    const double v = x.v + ct;
    const double e = (x.e + std::fabs(c) * t.e + kEps * std::fabs(ct) +
                      kEps * std::fabs(v)) *
                     (1.0 + 4 * kEps);
    return {v, e};
}

/// Floating-point error model used by the exclusion tests.
///  - horner: per-evaluation forward error bounds, rigorous on any
///    IEEE-754 platform.
///  - flat14: flat 1e-14 slack on the scaled inequalities (compatibility
///    mode; trusts a platform calibration).
enum class FpModel { horner, flat14 };

/// Width-term constant in the exclusion inequalities.
///  - tight: class derivative sup h*(i+1)!/(1-b)^(i+2) (provable).
///  - paper: (b-a)/((i+1)(1-b)^(i+2)) as printed in the source material
///    for these scans; kept for regression only.
enum class BoundForm { tight, paper };

inline const char* to_string(FpModel m) { return m == FpModel::horner ? "horner" : "flat14"; }
inline const char* to_string(BoundForm f) { return f == BoundForm::tight ? "tight" : "paper"; }

}  // namespace zerogap
