#include "ellschub/elliptic.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

namespace ellschub {

QContext QContext::exact(int order)
{
    QContext ctx;
    ctx.backend = BackendKind::Exact;
    ctx.order = order;
    ctx.validate();
    return ctx;
}

QContext QContext::complex(std::complex<double> q)
{
    QContext ctx;
    ctx.backend = BackendKind::Complex;
    ctx.q = q;
    ctx.validate();
    return ctx;
}

void QContext::validate() const
{
    if (backend == BackendKind::Complex) {
        if (!(std::abs(q) < 1.0)) {
            throw std::invalid_argument("complex backend needs |q| < 1");
        }
        if (!(tail_tolerance > 0.0)) {
            throw std::invalid_argument("tail tolerance must be positive");
        }
    } else if (order < 1) {
        throw std::invalid_argument("exact backend needs truncation order >= 1");
    }
}

// ---------------------------------------------------------------------------
// complex backend

ComplexBackend::ComplexBackend(QContext ctx) : ctx_(ctx)
{
    ctx_.backend = BackendKind::Complex;
    ctx_.validate();
}

int ComplexBackend::cutoff(double max_modulus) const
{
    const double aq = std::abs(ctx_.q);
    if (aq == 0.0) {
        return 0;
    }
    // smallest N with |q|^{N+1} * max_modulus below the tail tolerance
    int n = 0;
    double t = aq * max_modulus;
    while (t >= ctx_.tail_tolerance && n < 100000) {
        ++n;
        t *= aq;
    }
    return n;
}

ComplexBackend::Value ComplexBackend::delta(Coeff a, Coeff b) const
{
    if (a == 0.0 || b == 0.0) {
        throw ZeroArgument("delta: zero argument");
    }
    if (std::abs(a - 1.0) < ctx_.singular_guard || std::abs(b - 1.0) < ctx_.singular_guard) {
        throw SingularPoint("delta: argument too close to the pole at 1");
    }
    const Coeff ab = a * b;
    Value r = (ab - 1.0) / ((a - 1.0) * (b - 1.0));
    const double m = std::max({std::abs(a), 1 / std::abs(a), std::abs(b), 1 / std::abs(b), std::abs(ab), 1 / std::abs(ab)});
    const int n_max = cutoff(m);
    Coeff qn = 1.0;
    for (int n = 1; n <= n_max; ++n) {
        qn *= ctx_.q;
        const Coeff den = (1.0 - qn * a) * (1.0 - qn / a) * (1.0 - qn * b) * (1.0 - qn / b);
        if (std::abs(den) < ctx_.singular_guard) {
            throw SingularPoint("delta: argument too close to a pole q^n x = 1");
        }
        const Coeff one_minus_qn = 1.0 - qn;
        r *= (1.0 - qn * ab) * (1.0 - qn / ab) * one_minus_qn * one_minus_qn / den;
    }
    return r;
}

ComplexBackend::Value ComplexBackend::theta(Coeff x) const
{
    if (x == 0.0) {
        throw ZeroArgument("theta: zero argument");
    }
    Value r = std::sqrt(x) * (1.0 - 1.0 / x);
    const int n_max = cutoff(std::max(std::abs(x), 1 / std::abs(x)));
    Coeff qn = 1.0;
    for (int n = 1; n <= n_max; ++n) {
        qn *= ctx_.q;
        r *= (1.0 - qn * x) * (1.0 - qn / x);
    }
    return r;
}

ComplexBackend::Value ComplexBackend::theta_prime_one() const
{
    Value r = 1.0;
    const int n_max = cutoff(1.0);
    Coeff qn = 1.0;
    for (int n = 1; n <= n_max; ++n) {
        qn *= ctx_.q;
        r *= (1.0 - qn) * (1.0 - qn);
    }
    return r;
}

ComplexBackend::Value ComplexBackend::inverse(const Value &v) const
{
    if (!(std::abs(v) > 1e-300) || !std::isfinite(v.real()) || !std::isfinite(v.imag())) {
        throw SingularPoint("division by a vanishing delta value");
    }
    return 1.0 / v;
}

std::complex<double> delta_from_theta(const ComplexBackend &backend, std::complex<double> a, std::complex<double> b)
{
    return backend.theta(a * b) * backend.theta_prime_one() / (backend.theta(a) * backend.theta(b));
}

// ---------------------------------------------------------------------------
// exact backend

ExactBackend::ExactBackend(QContext ctx) : ctx_(ctx)
{
    ctx_.backend = BackendKind::Exact;
    ctx_.validate();
}

ExactBackend::Value ExactBackend::delta(const Coeff &a, const Coeff &b) const
{
    if (a == 0 || b == 0) {
        throw ZeroArgument("delta: zero argument");
    }
    if (a == 1 || b == 1) {
        throw SingularPoint("delta: argument equals the pole at 1");
    }
    const mpq_class ab = a * b;
    const mpq_class inv_ab = 1 / ab;
    const mpq_class inv_a = 1 / a;
    const mpq_class inv_b = 1 / b;
    const mpq_class one = 1;
    QSeries s(ctx_.order, (ab - 1) / ((a - 1) * (b - 1)));
    for (int n = 1; n <= ctx_.order; ++n) {
        s.mul_one_minus(ab, n);
        s.mul_one_minus(inv_ab, n);
        s.mul_one_minus(one, n);
        s.mul_one_minus(one, n);
        s.div_one_minus(a, n);
        s.div_one_minus(inv_a, n);
        s.div_one_minus(b, n);
        s.div_one_minus(inv_b, n);
    }
    return s;
}

namespace {

// 1 - q^n x
QSeries one_minus_shift(const QSeries &x, int n)
{
    QSeries out(x.order(), 1);
    for (int k = 0; k + n <= x.order(); ++k) {
        out[static_cast<std::size_t>(k + n)] -= x[static_cast<std::size_t>(k)];
    }
    return out;
}

} // namespace

ExactBackend::Value ExactBackend::delta(const QSeries &a, const QSeries &b) const
{
    if (a.order() != ctx_.order || b.order() != ctx_.order) {
        throw std::invalid_argument("delta: series order does not match the context");
    }
    if (a[0] == 0 || b[0] == 0) {
        throw ZeroArgument("delta: argument with zero constant term");
    }
    if (a[0] == 1 || b[0] == 1) {
        throw SingularPoint("delta: argument with constant term 1");
    }
    const QSeries one = this->one();
    const QSeries ab = a * b;
    const QSeries inv_a = a.inverse(), inv_b = b.inverse(), inv_ab = ab.inverse();
    QSeries r = (ab - one) / ((a - one) * (b - one));
    for (int n = 1; n <= ctx_.order; ++n) {
        QSeries num = one_minus_shift(ab, n) * one_minus_shift(inv_ab, n) * one_minus_shift(one, n)
                      * one_minus_shift(one, n);
        QSeries den = one_minus_shift(a, n) * one_minus_shift(inv_a, n) * one_minus_shift(b, n)
                      * one_minus_shift(inv_b, n);
        r *= num;
        r /= den;
    }
    return r;
}

ExactBackend::Value ExactBackend::theta_prime_one() const
{
    QSeries s = one();
    const mpq_class one_q = 1;
    for (int n = 1; n <= ctx_.order; ++n) {
        s.mul_one_minus(one_q, n);
        s.mul_one_minus(one_q, n);
    }
    return s;
}

ExactBackend::Value ExactBackend::inverse(const Value &v) const
{
    if (!v.is_unit()) {
        throw SingularPoint("division by a delta value with vanishing constant term");
    }
    return v.inverse();
}

// ---------------------------------------------------------------------------
// variables and monomials

std::string VariableLayout::name(int slot) const
{
    if (slot < rank) return "zeta" + std::to_string(slot + 1);
    if (slot < 2 * rank) return "nu" + std::to_string(slot - rank + 1);
    return "h";
}

int VariableLayout::slot(const std::string &name) const
{
    for (int s = 0; s < size(); ++s) {
        if (this->name(s) == name) {
            return s;
        }
    }
    throw std::invalid_argument("unknown variable '" + name + "'");
}

Monomial::Monomial(int rank, std::vector<int> exponents) : rank_(rank), e_(std::move(exponents))
{
    if (e_.size() != static_cast<std::size_t>(2 * rank + 1)) {
        throw std::invalid_argument("monomial exponent vector has the wrong length");
    }
}

Monomial Monomial::zeta_of_root(const LatticeVector &root)
{
    Monomial m(root.rank());
    for (int t = 0; t < root.rank(); ++t) {
        m.e_[static_cast<std::size_t>(t)] = root[t];
    }
    return m;
}

Monomial Monomial::nu_of_coroot(const LatticeVector &coroot)
{
    Monomial m(coroot.rank());
    for (int t = 0; t < coroot.rank(); ++t) {
        m.e_[static_cast<std::size_t>(coroot.rank() + t)] = coroot[t];
    }
    return m;
}

Monomial Monomial::h_power(int rank, int k)
{
    return variable(rank, 2 * rank, k);
}

Monomial Monomial::variable(int rank, int slot, int power)
{
    Monomial m(rank);
    m.e_.at(static_cast<std::size_t>(slot)) = power;
    return m;
}

bool Monomial::is_one() const
{
    return std::all_of(e_.begin(), e_.end(), [](int x) { return x == 0; });
}

Monomial &Monomial::operator*=(const Monomial &rhs)
{
    if (rhs.rank_ != rank_) {
        throw std::invalid_argument("monomials of different ranks");
    }
    for (std::size_t k = 0; k < e_.size(); ++k) {
        e_[k] += rhs.e_[k];
    }
    return *this;
}

Monomial Monomial::inverse() const
{
    Monomial m = *this;
    for (int &x : m.e_) {
        x = -x;
    }
    return m;
}

std::string to_string(const Monomial &m)
{
    const VariableLayout layout{m.rank()};
    std::string out;
    for (int s = 0; s < layout.size(); ++s) {
        if (m[s] == 0) {
            continue;
        }
        if (!out.empty()) {
            out += '*';
        }
        out += layout.name(s);
        if (m[s] != 1) {
            out += '^' + std::to_string(m[s]);
        }
    }
    return out.empty() ? "1" : out;
}

// ---------------------------------------------------------------------------
// points

template <class Coeff>
EvalPoint<Coeff>::EvalPoint(int rank, std::vector<Coeff> values) : rank_(rank), v_(std::move(values))
{
    if (v_.size() != static_cast<std::size_t>(2 * rank + 1)) {
        throw std::invalid_argument("evaluation point has the wrong number of values");
    }
    for (const auto &x : v_) {
        if (x == Coeff(0)) {
            throw std::invalid_argument("evaluation point values must be nonzero");
        }
    }
}

namespace {

template <class Coeff>
Coeff power(const Coeff &x, int e)
{
    Coeff base = e < 0 ? Coeff(1) / x : x;
    unsigned k = static_cast<unsigned>(e < 0 ? -e : e);
    Coeff acc = 1;
    while (k) {
        if (k & 1u) acc *= base;
        k >>= 1u;
        if (k) base *= base;
    }
    return acc;
}

} // namespace

template <class Coeff>
Coeff eval_monomial(const EvalPoint<Coeff> &p, const Monomial &m)
{
    if (m.rank() != p.rank()) {
        throw std::invalid_argument("monomial and point have different ranks");
    }
    Coeff acc = 1;
    for (int s = 0; s < 2 * p.rank() + 1; ++s) {
        if (m[s] != 0) {
            acc *= power(p[s], m[s]);
        }
    }
    return acc;
}

template <class Coeff>
EvalPoint<Coeff> twist_point(const WeylGroup &W, const EvalPoint<Coeff> &p, ElementId w, Sector sector)
{
    const int r = p.rank();
    std::vector<Coeff> v = p.values();
    for (int t = 0; t < r; ++t) {
        if (sector == Sector::Nu) {
            const auto img = W.act(w, W.root_system().simple_coroot(t));
            v[static_cast<std::size_t>(r + t)] = eval_monomial(p, Monomial::nu_of_coroot(img));
        } else {
            const auto img = W.act(w, W.root_system().simple_root(t));
            v[static_cast<std::size_t>(t)] = eval_monomial(p, Monomial::zeta_of_root(img));
        }
    }
    return EvalPoint<Coeff>(r, std::move(v));
}

template class EvalPoint<std::complex<double>>;
template class EvalPoint<mpq_class>;
template std::complex<double> eval_monomial(const ComplexPoint &, const Monomial &);
template mpq_class eval_monomial(const ExactPoint &, const Monomial &);
template ComplexPoint twist_point(const WeylGroup &, const ComplexPoint &, ElementId, Sector);
template ExactPoint twist_point(const WeylGroup &, const ExactPoint &, ElementId, Sector);

} // namespace ellschub
