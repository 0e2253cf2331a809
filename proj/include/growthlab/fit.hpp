#pragma once

/* Least-squares log-log slope of a tabulated function, used to compare
 * observed growth and distortion against their predicted exponents.
 * Counts stay exact integers; the conversion to floating point happens
 * only here, at the fitting step. */

#include "growthlab/function_table.hpp"

#include <cmath>

namespace growthlab {

struct SlopeFit {
    double slope = 0.0;
    double intercept = 0.0;
    double rss = 0.0; // residual sum of squares in log space
    int points = 0;
};

inline SlopeFit fit_loglog_slope(const FunctionTable& t, int r_min, int r_max)
{
    if (r_min < 1 || r_max > t.horizon() || r_min >= r_max)
        throw std::invalid_argument("fit_loglog_slope: bad range");
    SlopeFit fit;
    double sx = 0, sy = 0, sxx = 0, sxy = 0;
    for (int r = r_min; r <= r_max; ++r) {
        if (t.at(r) <= 0)
            throw std::domain_error("fit_loglog_slope: table must be positive on the range");
        const double x = std::log(static_cast<double>(r));
        const double y = log_big(t.at(r));
        sx += x;
        sy += y;
        sxx += x * x;
        sxy += x * y;
        ++fit.points;
    }
    const double n = fit.points;
    const double denom = n * sxx - sx * sx;
    fit.slope = (n * sxy - sx * sy) / denom;
    fit.intercept = (sy - fit.slope * sx) / n;
    for (int r = r_min; r <= r_max; ++r) {
        const double x = std::log(static_cast<double>(r));
        const double e = log_big(t.at(r)) - (fit.slope * x + fit.intercept);
        fit.rss += e * e;
    }
    return fit;
}

} // namespace growthlab
