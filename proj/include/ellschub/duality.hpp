#pragma once

#include "ellschub/classes.hpp"
#include "ellschub/elliptic.hpp"
#include "ellschub/weyl.hpp"

#include <vector>

namespace ellschub {

// The # substitution for G: every variable of G written as a monomial in the
// variables of the Langlands dual G^v,
//   zeta_s -> nubar_{s*}^{-1},  nu_s -> zetabar_s^{-1},  h -> h^{-1},
// with s* = tau0 s tau0. Elements of W(G) and W(G^v) share indices.
class DualitySubstitution {
public:
    explicit DualitySubstitution(WeylGroupPtr group);

    const WeylGroupPtr &group() const { return G_; }
    const WeylGroupPtr &dual_group() const { return Gv_; }
    int rank() const { return G_->rank(); }

    // Image of one G-variable slot as a monomial in G^v variables.
    const Monomial &image(int slot) const { return images_.at(static_cast<std::size_t>(slot)); }
    Monomial image(const Monomial &m) const;
    // zeta_s -> tau0(nubar_s) = h^{tau0(alpha_s)} read directly off the dual
    // group's coroot action, without going through s*.
    Monomial image_via_longest(int slot) const;

    // Point for G at which G-expressions equal their #-images at `dual_point`.
    template <class Coeff>
    EvalPoint<Coeff> pull_point(const EvalPoint<Coeff> &dual_point) const
    {
        std::vector<Coeff> v;
        v.reserve(images_.size());
        for (const auto &m : images_) {
            v.push_back(eval_monomial(dual_point, m));
        }
        return EvalPoint<Coeff>(rank(), std::move(v));
    }

private:
    WeylGroupPtr G_;
    WeylGroupPtr Gv_;
    std::vector<Monomial> images_;
};

// Sign (-1)^{l(tau0)} of the duality statement.
int duality_sign(const WeylGroup &W);

template <class B>
struct DualityResidual {
    ElementId omega = 0;
    ElementId sigma = 0;
    typename B::Value lhs; // sign * E_{tau0 omega^{-1}}(X_{tau0 sigma^{-1}}) at the pulled-back point
    typename B::Value rhs; // E_sigma(X^v_omega) at the dual point
    typename B::Value residual;
};

// Residual lhs - rhs for a single pair.
template <class B>
DualityResidual<B> verify_duality(const DualitySubstitution &sub, const B &backend, ElementId omega, ElementId sigma,
                                  const EvalPoint<typename B::Coeff> &dual_point, int sign);

// All |W|^2 pairs at one dual point; each table is computed once.
template <class B>
std::vector<DualityResidual<B>> duality_residuals(const DualitySubstitution &sub, const B &backend,
                                                  const EvalPoint<typename B::Coeff> &dual_point, int sign);

// (zeta_s, nu_s) -> (zeta_{s*}, nu_{s*}); this is #_{G^v} o #_G as a map on points.
template <class Coeff>
EvalPoint<Coeff> relabel_point(const WeylGroup &W, const EvalPoint<Coeff> &p);

template <class B>
struct DoubleDualResidual {
    ElementId omega = 0;
    ElementId sigma = 0;
    typename B::Value lhs; // E_sigma(X_omega)(p)
    typename B::Value rhs; // E_{tau0 sigma tau0}(X_{tau0 omega tau0}) at the relabeled point
    typename B::Value residual;
};

template <class B>
std::vector<DoubleDualResidual<B>> double_dual_residuals(const WeylGroupPtr &W, const B &backend,
                                                         const EvalPoint<typename B::Coeff> &point);

template <class B>
IdentitySides<B> double_dual_check(const WeylGroupPtr &W, const B &backend, ElementId omega, ElementId sigma,
                                    const EvalPoint<typename B::Coeff> &point);

// Inversion of the dynamical (nu) sector.
template <class Coeff>
EvalPoint<Coeff> invert_variables(const EvalPoint<Coeff> &p);

// The point of G^v given by the barred variables of a G-point:
// zetabar_s = nu_s^{-1}, nubar_s = zeta_s^{-1}, same h.
template <class Coeff>
EvalPoint<Coeff> barred_point(const EvalPoint<Coeff> &p);

// lhs c(G, omega)(p), rhs E_{omega^{-1} tau0}(X^v_{omega^{-1} tau0}) at barred_point(invert_variables(p)).
template <class B>
IdentitySides<B> f_interpretation_check(const DualitySubstitution &sub, const B &backend, ElementId omega,
                                            const EvalPoint<typename B::Coeff> &point);

} // namespace ellschub
