#pragma once

#include "ellschub/series.hpp"

#include <complex>
#include <string>

namespace ellschub {

struct Comparison {
    bool pass = false;
    double residual = 0.0; // relative (complex) or largest coefficient of the difference (exact)
};

// Complex values agree when |a - b| <= tolerance * max(|a|, |b|).
Comparison compare(const std::complex<double> &a, const std::complex<double> &b, double tolerance);
// Series agree only when equal coefficient by coefficient; tolerance is ignored.
Comparison compare(const QSeries &a, const QSeries &b, double tolerance);

double magnitude(const std::complex<double> &v);
double magnitude(const QSeries &v); // largest |coefficient|

// Zero test for table entries: exact zero for series, |v| < 1e-10 * scale for complex.
inline constexpr double zero_threshold = 1e-10;
bool is_negligible(const std::complex<double> &v, double scale);
bool is_negligible(const QSeries &v, double scale);

} // namespace ellschub
