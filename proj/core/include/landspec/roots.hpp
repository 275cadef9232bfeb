#pragma once

#include "landspec/errors.hpp"

#include <boost/math/tools/roots.hpp>
#include <boost/math/tools/toms748_solve.hpp>

#include <cmath>
#include <cstdint>
#include <string>
#include <utility>

namespace landspec::roots {

/// Bisection on [lo, hi] until the bracket is no wider than `x_tol`.
/// Returns the midpoint of the final bracket. Throws RootNotBracketed when
/// f(lo) and f(hi) share a strict sign.
template <typename F>
double bisect(F&& f, double lo, double hi, double x_tol, std::uintmax_t max_iter = 400)
{
    const double flo = f(lo);
    const double fhi = f(hi);
    if (flo == 0.0) return lo;
    if (fhi == 0.0) return hi;
    if (!(std::signbit(flo) != std::signbit(fhi)))
        throw RootNotBracketed("no sign change on [" + std::to_string(lo) + ", " + std::to_string(hi) + "]");
    auto tol = [x_tol](double a, double b) { return std::abs(b - a) <= x_tol; };
    std::uintmax_t iterations = max_iter;
    auto [a, b] = boost::math::tools::bisect(f, lo, hi, tol, iterations);
    return 0.5 * (a + b);
}

/// Bracketed root to full double precision (TOMS 748).
template <typename F>
double solve(F&& f, double lo, double hi, std::uintmax_t max_iter = 200)
{
    const double flo = f(lo);
    const double fhi = f(hi);
    if (flo == 0.0) return lo;
    if (fhi == 0.0) return hi;
    if (!(std::signbit(flo) != std::signbit(fhi)))
        throw RootNotBracketed("no sign change on [" + std::to_string(lo) + ", " + std::to_string(hi) + "]");
    boost::math::tools::eps_tolerance<double> tol(52);
    std::uintmax_t iterations = max_iter;
    auto [a, b] = boost::math::tools::toms748_solve(f, lo, hi, flo, fhi, tol, iterations);
    return 0.5 * (a + b);
}

} // namespace landspec::roots
