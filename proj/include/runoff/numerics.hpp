// Apache License, Version 2.0, refer to LICENSE.txt
#pragma once

#include <cstddef>
#include <functional>

#include "runoff/errors.hpp"

namespace runoff {

/// Natural log of the gamma function for x > 0.
/// Absolute error below 1e-12 on [0.5, 200].
double log_gamma(double x);

/// Gamma(a - 1/2) / Gamma(a) for a > 1/2, evaluated in log space so it
/// stays finite for arguments where Gamma itself overflows.
double gamma_ratio_half(double a);

/// Standard normal CDF.
double std_normal_cdf(double z);

// Integration request. Either endpoint may be infinite; semi-infinite
// and doubly infinite ranges are mapped onto [0, 1) with x = u/(1-u)
// before subdivision.
struct QuadratureSpec {
    QuadratureSpec(double lower, double upper, double relative_tolerance = 1e-9,
                   std::size_t max_subdivisions = 4000);

    double lower;
    double upper;
    double relative_tolerance;
    std::size_t max_subdivisions;
};

/// Globally adaptive Gauss-Kronrod (7/15) quadrature.
/// Splits the worst segment until the estimated error is within
/// spec.relative_tolerance of the integral; throws convergence_error
/// (carrying the best estimate) if the subdivision budget runs out.
double integrate(const std::function<double(double)>& f, const QuadratureSpec& spec);

}  // namespace runoff
