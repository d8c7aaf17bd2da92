#include "ellschub/residual.hpp"

#include <algorithm>
#include <cmath>

namespace ellschub {

Comparison compare(const std::complex<double> &a, const std::complex<double> &b, double tolerance)
{
    const double diff = std::abs(a - b);
    const double scale = std::max(std::abs(a), std::abs(b));
    if (scale == 0.0) {
        return {true, 0.0};
    }
    const double rel = diff / scale;
    return {std::isfinite(rel) && rel <= tolerance, rel};
}

Comparison compare(const QSeries &a, const QSeries &b, double)
{
    const QSeries d = a - b;
    return {d.is_zero(), magnitude(d)};
}

double magnitude(const std::complex<double> &v)
{
    return std::abs(v);
}

double magnitude(const QSeries &v)
{
    double m = 0.0;
    for (const auto &c : v.coefficients()) {
        m = std::max(m, std::abs(c.get_d()));
    }
    return m;
}

bool is_negligible(const std::complex<double> &v, double scale)
{
    return std::abs(v) <= zero_threshold * scale;
}

bool is_negligible(const QSeries &v, double)
{
    return v.is_zero();
}

} // namespace ellschub
