#pragma once

#include "ellschub/classes.hpp"
#include "ellschub/elliptic.hpp"
#include "ellschub/rootsys.hpp"
#include "ellschub/weyl.hpp"

#include <complex>
#include <cstdint>
#include <functional>
#include <random>
#include <vector>

namespace testing {

using namespace ellschub;
using cplx = std::complex<double>;

// Generators ---------------------------------------------------------------

struct Gen {
    std::mt19937_64 rng;
    explicit Gen(std::uint64_t seed) : rng(seed) {}

    int integer(int lo, int hi) { return std::uniform_int_distribution<int>(lo, hi)(rng); }
    double real(double lo, double hi) { return std::uniform_real_distribution<double>(lo, hi)(rng); }

    // nonzero rational away from 1 and -1
    mpq_class rational()
    {
        for (;;) {
            mpq_class x(integer(-60, 60), integer(1, 60));
            x.canonicalize();
            if (x != 0 && x != 1 && x != -1) {
                return x;
            }
        }
    }
    // |x| in [0.5, 2], kept away from 1
    cplx complex_value()
    {
        for (;;) {
            const cplx x = std::polar(real(0.5, 2.0), real(-3.14159, 3.14159));
            if (std::abs(x - 1.0) > 0.05) {
                return x;
            }
        }
    }
    // right half-plane, away from 1 (principal branches multiply there)
    cplx right_half_plane()
    {
        for (;;) {
            const cplx x = std::polar(real(0.6, 1.6), real(-0.7, 0.7));
            if (std::abs(x - 1.0) > 0.05) {
                return x;
            }
        }
    }
    ExactPoint exact_point(int rank)
    {
        std::vector<mpq_class> v;
        for (int i = 0; i < 2 * rank + 1; ++i) {
            v.push_back(rational());
        }
        return ExactPoint(rank, v);
    }
    ComplexPoint complex_point(int rank)
    {
        std::vector<cplx> v;
        for (int i = 0; i < 2 * rank + 1; ++i) {
            v.push_back(complex_value());
        }
        return ComplexPoint(rank, v);
    }
    Monomial monomial(int rank, int spread = 2)
    {
        std::vector<int> e;
        for (int i = 0; i < 2 * rank + 1; ++i) {
            e.push_back(integer(-spread, spread));
        }
        return Monomial(rank, e);
    }
};

// Retries f on a fresh point while the point is singular.
template <class F>
void at_points(int count, std::uint64_t seed, F &&f)
{
    Gen g(seed);
    for (int done = 0, tries = 0; done < count; ++tries) {
        if (tries > 20 * count) {
            throw std::runtime_error("test point generator keeps hitting singular points");
        }
        try {
            f(g);
            ++done;
        } catch (const SingularPoint &) {
        } catch (const ZeroArgument &) {
        }
    }
}

// Independent oracles ---------------------------------------------------------

// Order of W from the classical formulas.
inline std::size_t classical_weyl_order(const CartanLabel &l)
{
    auto fact = [](int n) {
        std::size_t f = 1;
        for (int i = 2; i <= n; ++i) {
            f *= static_cast<std::size_t>(i);
        }
        return f;
    };
    switch (l.family) {
    case 'A': return fact(l.rank + 1);
    case 'B':
    case 'C': return (std::size_t{1} << l.rank) * fact(l.rank);
    case 'D': return (std::size_t{1} << (l.rank - 1)) * fact(l.rank);
    case 'G': return 12;
    case 'F': return 1152;
    case 'E': return l.rank == 6 ? 51840 : l.rank == 7 ? 2903040 : 696729600;
    }
    return 0;
}

inline std::size_t classical_positive_roots(const CartanLabel &l)
{
    const std::size_t n = static_cast<std::size_t>(l.rank);
    switch (l.family) {
    case 'A': return n * (n + 1) / 2;
    case 'B':
    case 'C': return n * n;
    case 'D': return n * (n - 1);
    case 'G': return 6;
    case 'F': return 24;
    }
    return 0;
}

// u <= w iff some subword of one reduced word of w multiplies to u.
inline bool bruhat_by_subwords(const WeylGroup &W, ElementId u, ElementId w)
{
    const Word word = W.reduced_word(w);
    const std::size_t n = word.size();
    for (std::size_t mask = 0; mask < (std::size_t{1} << n); ++mask) {
        Word sub;
        for (std::size_t k = 0; k < n; ++k) {
            if (mask & (std::size_t{1} << k)) {
                sub.push_back(word[k]);
            }
        }
        if (W.from_word(sub) == u) {
            return true;
        }
    }
    return false;
}

// Jacobi theta by its product, principal branch of the square root.
inline cplx naive_theta(cplx x, cplx q, int terms = 400)
{
    cplx v = std::sqrt(x) * (1.0 - 1.0 / x);
    cplx qn = 1.0;
    for (int n = 1; n <= terms; ++n) {
        qn *= q;
        v *= (1.0 - qn * x) * (1.0 - qn / x);
    }
    return v;
}

// Central difference of theta at 1.
inline cplx theta_derivative_fd(cplx q, double step = 1e-6)
{
    return (naive_theta(1.0 + step, q) - naive_theta(1.0 - step, q)) / (2.0 * step);
}

inline cplx naive_delta(cplx a, cplx b, cplx q)
{
    return naive_theta(a * b, q) * theta_derivative_fd(q) / (naive_theta(a, q) * naive_theta(b, q));
}

// Normalized classes by the Bott-Samelson recursion written out literally:
// branch into both terms at every letter, no tables, no caching.
template <class B>
typename B::Value naive_class(const WeylGroup &W, const B &backend, Word word, ElementId sigma,
                              const EvalPoint<typename B::Coeff> &p)
{
    using Coeff = typename B::Coeff;
    if (word.empty()) {
        if (sigma != W.identity()) {
            return backend.zero();
        }
        auto v = backend.one();
        for (const auto &co : W.root_system().positive_coroots()) {
            v *= backend.delta(Coeff(1) / eval_monomial(p, Monomial::nu_of_coroot(co)), p.h());
        }
        return v;
    }
    const int s = word.back();
    word.pop_back();
    // nu_t -> h^{s(alpha_t^v)}
    std::vector<Coeff> moved = p.values();
    for (int t = 0; t < W.rank(); ++t) {
        const auto img = reflect(W.root_system(), s, W.root_system().simple_coroot(t));
        moved[static_cast<std::size_t>(W.rank() + t)] = eval_monomial(p, Monomial::nu_of_coroot(img));
    }
    const EvalPoint<Coeff> q(p.rank(), moved);
    const Coeff z = eval_monomial(p, Monomial::zeta_of_root(W.act(sigma, W.root_system().simple_root(s))));
    auto first = backend.delta(z, p.nu(s));
    first *= naive_class(W, backend, word, sigma, q);
    auto second = backend.delta(z, p.h());
    second *= naive_class(W, backend, word, W.right_multiply(sigma, s), q);
    first += second;
    first *= backend.inverse(backend.delta(p.nu(s), p.h()));
    return first;
}

inline double rel(cplx a, cplx b)
{
    const double s = std::max(std::abs(a), std::abs(b));
    return s == 0.0 ? 0.0 : std::abs(a - b) / s;
}

inline const std::vector<CartanLabel> &small_types()
{
    static const std::vector<CartanLabel> v = {{'A', 1}, {'A', 2}, {'A', 3}, {'A', 4}, {'B', 2}, {'B', 3},
                                               {'B', 4}, {'C', 2}, {'C', 3}, {'C', 4}, {'D', 3}, {'D', 4},
                                               {'G', 2}, {'F', 4}};
    return v;
}

} // namespace testing
