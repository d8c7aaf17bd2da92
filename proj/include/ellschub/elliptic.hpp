#pragma once

#include "ellschub/lattice.hpp"
#include "ellschub/series.hpp"
#include "ellschub/weyl.hpp"

#include <gmpxx.h>

#include <complex>
#include <stdexcept>
#include <string>
#include <variant>
#include <vector>

namespace ellschub {

// A delta argument (or a denominator) hit a pole. Callers resample the point.
class SingularPoint : public std::domain_error {
public:
    using std::domain_error::domain_error;
};

// A theta/delta argument is exactly zero.
class ZeroArgument : public std::domain_error {
public:
    using std::domain_error::domain_error;
};

enum class BackendKind { Complex, Exact };

struct QContext {
    BackendKind backend = BackendKind::Exact;
    // complex backend
    std::complex<double> q{0.1, 0.0};
    double tail_tolerance = 1e-18;
    double singular_guard = 1e-3;
    // exact backend: work modulo q^{order+1}
    int order = 8;

    static QContext exact(int order);
    static QContext complex(std::complex<double> q);
    void validate() const;
};

// Scalar values as seen at the serialization boundary.
using Scalar = std::variant<std::complex<double>, QSeries>;

// Complex floating point backend: variables and class values are complex doubles.
class ComplexBackend {
public:
    using Coeff = std::complex<double>;
    using Value = std::complex<double>;
    static constexpr BackendKind kind = BackendKind::Complex;

    explicit ComplexBackend(QContext ctx);

    const QContext &context() const { return ctx_; }

    // Branch-free product form:
    // (ab-1)/((a-1)(b-1)) prod_n (1-q^n ab)(1-q^n/ab)(1-q^n)^2 / ((1-q^n a)(1-q^n/a)(1-q^n b)(1-q^n/b))
    Value delta(Coeff a, Coeff b) const;
    // x^{1/2}(1 - 1/x) prod_n (1-q^n x)(1-q^n/x), principal branch of the square root.
    Value theta(Coeff x) const;
    Value theta_prime_one() const;

    Value constant(const Coeff &c) const { return c; }
    Value zero() const { return 0.0; }
    Value one() const { return 1.0; }
    Value inverse(const Value &v) const;

private:
    int cutoff(double max_modulus) const;
    QContext ctx_;
};

// Exact backend: variables are rationals, class values are q-series with
// rational coefficients modulo q^{order+1}.
class ExactBackend {
public:
    using Coeff = mpq_class;
    using Value = QSeries;
    static constexpr BackendKind kind = BackendKind::Exact;

    explicit ExactBackend(QContext ctx);

    const QContext &context() const { return ctx_; }
    int order() const { return ctx_.order; }

    Value delta(const Coeff &a, const Coeff &b) const;
    // Same function for series arguments (constant terms must avoid 0 and 1).
    Value delta(const QSeries &a, const QSeries &b) const;
    Value theta_prime_one() const;

    Value constant(const Coeff &c) const { return QSeries(ctx_.order, c); }
    Value zero() const { return QSeries(ctx_.order); }
    Value one() const { return QSeries(ctx_.order, 1); }
    Value inverse(const Value &v) const;

private:
    QContext ctx_;
};

// delta computed literally as theta(ab) theta'(1) / (theta(a) theta(b)).
// Only equal to ComplexBackend::delta when the principal square roots satisfy
// sqrt(ab) = sqrt(a) sqrt(b); used to validate the product rearrangement.
std::complex<double> delta_from_theta(const ComplexBackend &backend, std::complex<double> a, std::complex<double> b);

// Layout of the formal variables of a rank-r group:
// zeta_1..zeta_r, nu_1..nu_r, h  (2r + 1 slots).
struct VariableLayout {
    int rank = 0;
    int size() const { return 2 * rank + 1; }
    int zeta(int i) const { return i; }
    int nu(int i) const { return rank + i; }
    int h() const { return 2 * rank; }
    std::string name(int slot) const;
    // Inverse of name(); throws std::invalid_argument.
    int slot(const std::string &name) const;
};

// Laurent monomial in the formal variables: an integer exponent vector.
class Monomial {
public:
    explicit Monomial(int rank) : rank_(rank), e_(static_cast<std::size_t>(2 * rank + 1), 0) {}
    Monomial(int rank, std::vector<int> exponents);

    // e^{-beta} for a root beta = sum c_t alpha_t, i.e. prod zeta_t^{c_t}.
    static Monomial zeta_of_root(const LatticeVector &root);
    // h^{beta^v} for a coroot beta^v = sum d_t alpha_t^v, i.e. prod nu_t^{d_t}.
    static Monomial nu_of_coroot(const LatticeVector &coroot);
    static Monomial h_power(int rank, int k);
    static Monomial variable(int rank, int slot, int power = 1);

    int rank() const { return rank_; }
    const std::vector<int> &exponents() const { return e_; }
    int operator[](int slot) const { return e_[static_cast<std::size_t>(slot)]; }
    bool is_one() const;

    Monomial &operator*=(const Monomial &rhs);
    Monomial inverse() const;

    friend Monomial operator*(Monomial a, const Monomial &b) { return a *= b; }
    friend bool operator==(const Monomial &, const Monomial &) = default;
    friend auto operator<=>(const Monomial &, const Monomial &) = default;

private:
    int rank_;
    std::vector<int> e_;
};

std::string to_string(const Monomial &m);

// Assignment of nonzero values to every formal variable of a rank-r group.
template <class Coeff>
class EvalPoint {
public:
    EvalPoint(int rank, std::vector<Coeff> values);

    int rank() const { return rank_; }
    VariableLayout layout() const { return {rank_}; }
    const std::vector<Coeff> &values() const { return v_; }
    const Coeff &operator[](int slot) const { return v_[static_cast<std::size_t>(slot)]; }
    const Coeff &zeta(int i) const { return v_[static_cast<std::size_t>(i)]; }
    const Coeff &nu(int i) const { return v_[static_cast<std::size_t>(rank_ + i)]; }
    const Coeff &h() const { return v_.back(); }

    friend bool operator==(const EvalPoint &, const EvalPoint &) = default;

private:
    int rank_;
    std::vector<Coeff> v_;
};

using ComplexPoint = EvalPoint<std::complex<double>>;
using ExactPoint = EvalPoint<mpq_class>;

template <class Coeff>
Coeff eval_monomial(const EvalPoint<Coeff> &p, const Monomial &m);

enum class Sector { Zeta, Nu };

// Precomposition with the action of w on one sector: in the nu-sector the new
// value of nu_t is the old value of h^{w(alpha_t^v)}, in the zeta-sector the new
// value of zeta_t is the old value of e^{-w(alpha_t)}. Other slots unchanged.
// Composition: twist(twist(p, g), s) == twist(p, g*s).
template <class Coeff>
EvalPoint<Coeff> twist_point(const WeylGroup &W, const EvalPoint<Coeff> &p, ElementId w, Sector sector);

template <class Coeff>
EvalPoint<Coeff> transform_point(const WeylGroup &W, const EvalPoint<Coeff> &p, int s, Sector sector)
{
    return twist_point(W, p, W.simple(s), sector);
}

} // namespace ellschub
