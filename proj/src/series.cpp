#include "ellschub/series.hpp"

#include <algorithm>
#include <cmath>
#include <ostream>
#include <stdexcept>

namespace ellschub {

bool QSeries::is_zero() const
{
    return std::all_of(c_.begin(), c_.end(), [](const mpq_class &x) { return x == 0; });
}

void QSeries::check_order(const QSeries &rhs) const
{
    if (rhs.c_.size() != c_.size()) {
        throw std::invalid_argument("QSeries: truncation orders differ");
    }
}

QSeries &QSeries::operator+=(const QSeries &rhs)
{
    check_order(rhs);
    for (std::size_t k = 0; k < c_.size(); ++k) {
        c_[k] += rhs.c_[k];
    }
    return *this;
}

QSeries &QSeries::operator-=(const QSeries &rhs)
{
    check_order(rhs);
    for (std::size_t k = 0; k < c_.size(); ++k) {
        c_[k] -= rhs.c_[k];
    }
    return *this;
}

QSeries &QSeries::operator*=(const QSeries &rhs)
{
    check_order(rhs);
    const std::size_t n = c_.size();
    std::vector<mpq_class> out(n);
    mpq_class t;
    for (std::size_t i = 0; i < n; ++i) {
        if (c_[i] == 0) {
            continue;
        }
        for (std::size_t j = 0; i + j < n; ++j) {
            if (rhs.c_[j] == 0) {
                continue;
            }
            mpq_mul(t.get_mpq_t(), c_[i].get_mpq_t(), rhs.c_[j].get_mpq_t());
            out[i + j] += t;
        }
    }
    c_ = std::move(out);
    return *this;
}

QSeries &QSeries::operator*=(const mpq_class &rhs)
{
    for (auto &x : c_) {
        x *= rhs;
    }
    return *this;
}

QSeries QSeries::inverse() const
{
    if (!is_unit()) {
        throw std::domain_error("QSeries: inverse of a series with zero constant term");
    }
    const std::size_t n = c_.size();
    QSeries out(order());
    const mpq_class inv0 = 1 / c_[0];
    out.c_[0] = inv0;
    for (std::size_t k = 1; k < n; ++k) {
        mpq_class acc = 0;
        for (std::size_t j = 1; j <= k; ++j) {
            if (c_[j] != 0) {
                acc += c_[j] * out.c_[k - j];
            }
        }
        out.c_[k] = -acc * inv0;
    }
    return out;
}

QSeries &QSeries::operator/=(const QSeries &rhs)
{
    check_order(rhs);
    return *this *= rhs.inverse();
}

QSeries QSeries::operator-() const
{
    QSeries out = *this;
    for (auto &x : out.c_) {
        x = -x;
    }
    return out;
}

void QSeries::mul_one_minus(const mpq_class &c, int n)
{
    // descending so that c_[k - n] is still the old value
    for (std::size_t k = c_.size(); k-- > static_cast<std::size_t>(n);) {
        if (c_[k - static_cast<std::size_t>(n)] != 0) {
            c_[k] -= c * c_[k - static_cast<std::size_t>(n)];
        }
    }
}

void QSeries::div_one_minus(const mpq_class &c, int n)
{
    // g = f / (1 - c q^n)  <=>  g_k = f_k + c g_{k-n}
    if (n == 0) {
        if (c == 1) {
            throw std::domain_error("division by zero series");
        }
        const mpq_class inv = 1 / (1 - c);
        for (auto &x : c_) {
            x *= inv;
        }
        return;
    }
    for (std::size_t k = static_cast<std::size_t>(n); k < c_.size(); ++k) {
        if (c_[k - static_cast<std::size_t>(n)] != 0) {
            c_[k] += c * c_[k - static_cast<std::size_t>(n)];
        }
    }
}

double QSeries::evaluate_real(double q) const
{
    double acc = 0;
    for (std::size_t k = c_.size(); k-- > 0;) {
        acc = acc * q + c_[k].get_d();
    }
    return acc;
}

std::ostream &operator<<(std::ostream &os, const QSeries &s)
{
    bool first = true;
    for (std::size_t k = 0; k < s.coefficients().size(); ++k) {
        if (s[k] == 0) {
            continue;
        }
        os << (first ? "" : " + ") << '(' << s[k] << ')';
        if (k > 0) {
            os << "*q^" << k;
        }
        first = false;
    }
    if (first) {
        os << '0';
    }
    return os << " + O(q^" << s.order() + 1 << ')';
}

mpq_class parse_rational(const std::string &text)
{
    mpq_class x;
    if (text.empty() || x.set_str(text, 10) != 0) {
        throw std::invalid_argument("bad rational '" + text + "'");
    }
    if (x.get_den() == 0) {
        throw std::invalid_argument("zero denominator in '" + text + "'");
    }
    x.canonicalize();
    return x;
}

std::string to_string(const mpq_class &x)
{
    return x.get_str();
}

} // namespace ellschub
