// Apache License, Version 2.0, refer to LICENSE.txt
#include "runoff/numerics.hpp"

#include <algorithm>
#include <array>
#include <cmath>
#include <limits>
#include <queue>
#include <string>
#include <vector>

namespace runoff {

namespace {

std::string fmt_arg(double x) {
    char buf[32];
    std::snprintf(buf, sizeof(buf), "%g", x);
    return buf;
}

}  // namespace

double log_gamma(double x) {
    if (!(x > 0.0)) {
        throw numeric_error("log_gamma: argument must be positive, got " + fmt_arg(x));
    }
    // Lift small arguments into the asymptotic range with
    // log Gamma(x) = log Gamma(x + 1) - log x, then apply Stirling's
    // series with Bernoulli terms through B12. Truncation error at
    // y = 20 is below 1e-19.
    double shift = 0.0;
    double y = x;
    while (y < 20.0) {
        shift += std::log(y);
        y += 1.0;
    }
    const double z = 1.0 / (y * y);
    double series = -691.0 / 360360.0;
    series = series * z + 1.0 / 1188.0;
    series = series * z - 1.0 / 1680.0;
    series = series * z + 1.0 / 1260.0;
    series = series * z - 1.0 / 360.0;
    series = series * z + 1.0 / 12.0;
    series /= y;
    constexpr double half_log_two_pi = 0.91893853320467274178;
    return (y - 0.5) * std::log(y) - y + half_log_two_pi + series - shift;
}

double gamma_ratio_half(double a) {
    const double am = a - 0.5;
    if (!(am > 0.0)) {
        throw numeric_error("gamma_ratio_half: argument must exceed 1/2, got " + fmt_arg(a));
    }
    return std::exp(log_gamma(am) - log_gamma(a));
}

double std_normal_cdf(double z) {
    constexpr double inv_sqrt2 = 0.70710678118654752440;
    return 0.5 * std::erfc(-z * inv_sqrt2);
}

QuadratureSpec::QuadratureSpec(double lower_, double upper_, double relative_tolerance_,
                               std::size_t max_subdivisions_)
    : lower(lower_),
      upper(upper_),
      relative_tolerance(relative_tolerance_),
      max_subdivisions(max_subdivisions_) {
    if (!(lower < upper)) {
        throw contract_error("QuadratureSpec: lower bound must be below upper bound");
    }
    if (!(relative_tolerance > 0.0 && relative_tolerance < 1.0)) {
        throw contract_error("QuadratureSpec: relative tolerance must lie in (0, 1)");
    }
    if (max_subdivisions == 0) {
        throw contract_error("QuadratureSpec: max subdivisions must be positive");
    }
}

namespace {

// 7-point Gauss / 15-point Kronrod pair on [-1, 1] (QUADPACK values).
constexpr std::array<double, 8> kron_nodes = {
    0.991455371120812639206854697526329,
    0.949107912342758524526189684047851,
    0.864864423359769072789712788640926,
    0.741531185599394439863864773280788,
    0.586087235467691130294144838258730,
    0.405845151377397166906606412076961,
    0.207784955007898467600689403773245,
    0.0,
};
constexpr std::array<double, 8> kron_weights = {
    0.022935322010529224963732008058970,
    0.063092092629978553290700663189204,
    0.104790010322250183839876322541518,
    0.140653259715525918745189590510238,
    0.169004726639267902826583426598550,
    0.190350578064785409913256402421014,
    0.204432940075298892414161999234649,
    0.209482141084727828012999174891714,
};
constexpr std::array<double, 4> gauss_weights = {
    0.129484966168869693270611432679082,
    0.279705391489276667901467771423780,
    0.381830050505118944950369775488975,
    0.417959183673469387755102040816327,
};

struct Segment {
    std::size_t piece;
    double a;
    double b;
    double integral;
    double error;
};

bool worse(const Segment& lhs, const Segment& rhs) { return lhs.error < rhs.error; }

using Integrand = std::function<double(double)>;

Segment gauss_kronrod_15(std::size_t piece, const Integrand& g, double a, double b) {
    const double center = 0.5 * (a + b);
    const double half = 0.5 * (b - a);

    const double fc = g(center);
    double resk = kron_weights[7] * fc;
    double resg = gauss_weights[3] * fc;
    std::array<std::array<double, 2>, 7> fv;
    for (int k = 0; k < 7; ++k) {
        const double dx = half * kron_nodes[k];
        const double f1 = g(center - dx);
        const double f2 = g(center + dx);
        fv[k] = {f1, f2};
        resk += kron_weights[k] * (f1 + f2);
        if (k % 2 == 1) {
            resg += gauss_weights[k / 2] * (f1 + f2);
        }
    }

    // QUADPACK-style error estimate: scale the Gauss/Kronrod difference
    // by the deviation of the integrand from its mean over the segment.
    const double mean = resk * 0.5;
    double resasc = kron_weights[7] * std::abs(fc - mean);
    for (int k = 0; k < 7; ++k) {
        resasc += kron_weights[k] * (std::abs(fv[k][0] - mean) + std::abs(fv[k][1] - mean));
    }
    resasc *= half;
    const double integral = resk * half;
    double err = std::abs((resk - resg) * half);
    if (resasc != 0.0 && err != 0.0) {
        err = resasc * std::min(1.0, std::pow(200.0 * err / resasc, 1.5));
    }
    if (!std::isfinite(integral)) {
        throw numeric_error("integrate: integrand evaluated to a non-finite value near x = " +
                            fmt_arg(center));
    }
    return {piece, a, b, integral, err};
}

struct BasePiece {
    Integrand g;
    double a;
    double b;
};

// Map improper endpoints onto [0, 1) with x = edge +/- u/(1-u). The
// Kronrod nodes are interior, so u = 1 is never evaluated.
std::vector<BasePiece> transform_domain(const Integrand& f, double lower, double upper) {
    const double inf = std::numeric_limits<double>::infinity();
    const bool lo_inf = lower == -inf;
    const bool hi_inf = upper == inf;

    auto right_tail = [f](double edge) {
        return Integrand([f, edge](double u) {
            const double w = 1.0 - u;
            return f(edge + u / w) / (w * w);
        });
    };
    auto left_tail = [f](double edge) {
        return Integrand([f, edge](double u) {
            const double w = 1.0 - u;
            return f(edge - u / w) / (w * w);
        });
    };

    std::vector<BasePiece> pieces;
    if (!lo_inf && !hi_inf) {
        pieces.push_back({f, lower, upper});
    } else if (!lo_inf && hi_inf) {
        pieces.push_back({right_tail(lower), 0.0, 1.0});
    } else if (lo_inf && !hi_inf) {
        pieces.push_back({left_tail(upper), 0.0, 1.0});
    } else {
        pieces.push_back({left_tail(0.0), 0.0, 1.0});
        pieces.push_back({right_tail(0.0), 0.0, 1.0});
    }
    return pieces;
}

}  // namespace

double integrate(const Integrand& f, const QuadratureSpec& spec) {
    const auto pieces = transform_domain(f, spec.lower, spec.upper);

    // Seed each piece with a handful of slices so narrow features away
    // from the initial nodes still register in the error estimates.
    constexpr int initial_slices = 8;
    std::priority_queue<Segment, std::vector<Segment>, decltype(&worse)> queue(&worse);
    double total = 0.0;
    double total_err = 0.0;
    for (std::size_t p = 0; p < pieces.size(); ++p) {
        const auto& piece = pieces[p];
        const double step = (piece.b - piece.a) / initial_slices;
        for (int s = 0; s < initial_slices; ++s) {
            Segment seg = gauss_kronrod_15(p, piece.g, piece.a + s * step,
                                           piece.a + (s + 1) * step);
            total += seg.integral;
            total_err += seg.error;
            queue.push(seg);
        }
    }

    const auto converged = [&] {
        return total_err <= spec.relative_tolerance * std::abs(total);
    };

    std::size_t used = 0;
    while (!converged()) {
        if (used >= spec.max_subdivisions) {
            throw convergence_error(
                "integrate: failed to reach relative tolerance " +
                    fmt_arg(spec.relative_tolerance) + " within " +
                    std::to_string(spec.max_subdivisions) + " subdivisions",
                total, total_err);
        }
        Segment worst = queue.top();
        queue.pop();
        total -= worst.integral;
        total_err -= worst.error;

        const double mid = 0.5 * (worst.a + worst.b);
        const Integrand& g = pieces[worst.piece].g;
        Segment lo = gauss_kronrod_15(worst.piece, g, worst.a, mid);
        Segment hi = gauss_kronrod_15(worst.piece, g, mid, worst.b);
        total += lo.integral + hi.integral;
        total_err += lo.error + hi.error;
        queue.push(lo);
        queue.push(hi);
        ++used;
    }
    return total;
}

}  // namespace runoff
