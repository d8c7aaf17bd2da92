#pragma once

#include <gmpxx.h>

#include <cstddef>
#include <iosfwd>
#include <string>
#include <vector>

namespace ellschub {

// Power series in q with exact rational coefficients, truncated modulo
// q^{order+1}. Binary operations require equal orders.
class QSeries {
public:
    QSeries() = default;
    explicit QSeries(int order) : c_(static_cast<std::size_t>(order) + 1) {}
    QSeries(int order, const mpq_class &constant) : QSeries(order) { c_[0] = constant; }

    int order() const { return static_cast<int>(c_.size()) - 1; }
    const mpq_class &operator[](std::size_t k) const { return c_[k]; }
    mpq_class &operator[](std::size_t k) { return c_[k]; }
    const std::vector<mpq_class> &coefficients() const { return c_; }

    bool is_zero() const;
    bool is_unit() const { return !c_.empty() && c_[0] != 0; }

    QSeries &operator+=(const QSeries &rhs);
    QSeries &operator-=(const QSeries &rhs);
    QSeries &operator*=(const QSeries &rhs);
    QSeries &operator*=(const mpq_class &rhs);
    QSeries &operator/=(const QSeries &rhs);
    QSeries operator-() const;

    // Multiplicative inverse; std::domain_error if the constant term is zero.
    QSeries inverse() const;

    // In-place (1 - c q^n) multiplication / division, O(order).
    void mul_one_minus(const mpq_class &c, int n);
    void div_one_minus(const mpq_class &c, int n);

    // Sum at a numeric q (used to compare against the complex backend).
    double evaluate_real(double q) const;

    friend bool operator==(const QSeries &a, const QSeries &b) { return a.c_ == b.c_; }

private:
    void check_order(const QSeries &rhs) const;
    std::vector<mpq_class> c_;
};

inline QSeries operator+(QSeries a, const QSeries &b) { return a += b; }
inline QSeries operator-(QSeries a, const QSeries &b) { return a -= b; }
inline QSeries operator*(QSeries a, const QSeries &b) { return a *= b; }
inline QSeries operator/(QSeries a, const QSeries &b) { return a /= b; }

std::ostream &operator<<(std::ostream &os, const QSeries &s);

// Parses "p/q" or "p" into a canonical rational.
mpq_class parse_rational(const std::string &text);
std::string to_string(const mpq_class &x);

} // namespace ellschub
