#include "ellschub/duality.hpp"

#include <stdexcept>

namespace ellschub {

DualitySubstitution::DualitySubstitution(WeylGroupPtr group)
    : G_(std::move(group)), Gv_(std::make_shared<const WeylGroup>(G_->dual()))
{
    const int r = G_->rank();
    const VariableLayout L{r};
    images_.assign(static_cast<std::size_t>(L.size()), Monomial(r));
    for (int s = 0; s < r; ++s) {
        images_[static_cast<std::size_t>(L.zeta(s))] = Monomial::variable(r, L.nu(G_->conjugate_by_longest(s)), -1);
        images_[static_cast<std::size_t>(L.nu(s))] = Monomial::variable(r, L.zeta(s), -1);
    }
    images_[static_cast<std::size_t>(L.h())] = Monomial::h_power(r, -1);
}

Monomial DualitySubstitution::image(const Monomial &m) const
{
    Monomial out(rank());
    for (int slot = 0; slot < 2 * rank() + 1; ++slot) {
        const int e = m[slot];
        if (e == 0) {
            continue;
        }
        std::vector<int> scaled = images_[static_cast<std::size_t>(slot)].exponents();
        for (int &x : scaled) {
            x *= e;
        }
        out *= Monomial(rank(), std::move(scaled));
    }
    return out;
}

Monomial DualitySubstitution::image_via_longest(int slot) const
{
    if (slot < rank()) {
        // the simple coroot s of G^v is the simple root alpha_s of G
        const LatticeVector img = Gv_->act(Gv_->longest(), Gv_->root_system().simple_coroot(slot));
        return Monomial::nu_of_coroot(img);
    }
    return image(slot);
}

int duality_sign(const WeylGroup &W)
{
    return W.length(W.longest()) % 2 == 0 ? 1 : -1;
}

namespace {

template <class B>
std::vector<ClassTable<B>> all_tables(const WeylGroupPtr &W, const B &backend, const EvalPoint<typename B::Coeff> &p)
{
    std::vector<ClassTable<B>> out;
    out.reserve(W->order());
    for (ElementId x = 0; x < W->order(); ++x) {
        out.push_back(bs_table(W, backend, W->reduced_word(x), p));
    }
    return out;
}

} // namespace

template <class B>
DualityResidual<B> verify_duality(const DualitySubstitution &sub, const B &backend, ElementId omega, ElementId sigma,
                                  const EvalPoint<typename B::Coeff> &dual_point, int sign)
{
    const WeylGroup &W = *sub.group();
    const ElementId t0 = W.longest();
    const auto pulled = sub.pull_point(dual_point);
    const ElementId lhs_omega = W.multiply(t0, W.inverse(sigma));
    const ElementId lhs_sigma = W.multiply(t0, W.inverse(omega));

    DualityResidual<B> r;
    r.omega = omega;
    r.sigma = sigma;
    r.lhs = bs_table(sub.group(), backend, W.reduced_word(lhs_omega), pulled).at(lhs_sigma);
    r.lhs *= typename B::Coeff(sign);
    r.rhs = bs_table(sub.dual_group(), backend, W.reduced_word(omega), dual_point).at(sigma);
    r.residual = r.lhs;
    r.residual -= r.rhs;
    return r;
}

template <class B>
std::vector<DualityResidual<B>> duality_residuals(const DualitySubstitution &sub, const B &backend,
                                                  const EvalPoint<typename B::Coeff> &dual_point, int sign)
{
    const WeylGroup &W = *sub.group();
    const ElementId t0 = W.longest();
    const auto lhs_tables = all_tables(sub.group(), backend, sub.pull_point(dual_point));
    const auto rhs_tables = all_tables(sub.dual_group(), backend, dual_point);

    std::vector<DualityResidual<B>> out;
    out.reserve(W.order() * W.order());
    for (ElementId omega = 0; omega < W.order(); ++omega) {
        for (ElementId sigma = 0; sigma < W.order(); ++sigma) {
            DualityResidual<B> r;
            r.omega = omega;
            r.sigma = sigma;
            r.lhs = lhs_tables[W.multiply(t0, W.inverse(sigma))].at(W.multiply(t0, W.inverse(omega)));
            r.lhs *= typename B::Coeff(sign);
            r.rhs = rhs_tables[omega].at(sigma);
            r.residual = r.lhs;
            r.residual -= r.rhs;
            out.push_back(std::move(r));
        }
    }
    return out;
}

template <class Coeff>
EvalPoint<Coeff> relabel_point(const WeylGroup &W, const EvalPoint<Coeff> &p)
{
    std::vector<Coeff> v = p.values();
    for (int s = 0; s < W.rank(); ++s) {
        const int t = W.conjugate_by_longest(s);
        v[static_cast<std::size_t>(s)] = p.zeta(t);
        v[static_cast<std::size_t>(W.rank() + s)] = p.nu(t);
    }
    return EvalPoint<Coeff>(p.rank(), std::move(v));
}

template <class B>
std::vector<DoubleDualResidual<B>> double_dual_residuals(const WeylGroupPtr &W, const B &backend,
                                                         const EvalPoint<typename B::Coeff> &point)
{
    const ElementId t0 = W->longest();
    const auto direct = all_tables(W, backend, point);
    const auto relabeled = all_tables(W, backend, relabel_point(*W, point));
    auto conj = [&](ElementId x) { return W->multiply(W->multiply(t0, x), t0); };

    std::vector<DoubleDualResidual<B>> out;
    for (ElementId omega = 0; omega < W->order(); ++omega) {
        for (ElementId sigma = 0; sigma < W->order(); ++sigma) {
            DoubleDualResidual<B> r;
            r.omega = omega;
            r.sigma = sigma;
            r.lhs = direct[omega].at(sigma);
            r.rhs = relabeled[conj(omega)].at(conj(sigma));
            r.residual = r.lhs;
            r.residual -= r.rhs;
            out.push_back(std::move(r));
        }
    }
    return out;
}

template <class B>
IdentitySides<B> double_dual_check(const WeylGroupPtr &W, const B &backend, ElementId omega, ElementId sigma,
                                    const EvalPoint<typename B::Coeff> &point)
{
    const ElementId t0 = W->longest();
    auto conj = [&](ElementId x) { return W->multiply(W->multiply(t0, x), t0); };
    return {bs_table(W, backend, W->reduced_word(omega), point).at(sigma),
            bs_table(W, backend, W->reduced_word(conj(omega)), relabel_point(*W, point)).at(conj(sigma))};
}

template <class Coeff>
EvalPoint<Coeff> invert_variables(const EvalPoint<Coeff> &p)
{
    std::vector<Coeff> v = p.values();
    for (int s = 0; s < p.rank(); ++s) {
        v[static_cast<std::size_t>(p.rank() + s)] = Coeff(1) / p.nu(s);
    }
    return EvalPoint<Coeff>(p.rank(), std::move(v));
}

template <class Coeff>
EvalPoint<Coeff> barred_point(const EvalPoint<Coeff> &p)
{
    std::vector<Coeff> v = p.values();
    for (int s = 0; s < p.rank(); ++s) {
        v[static_cast<std::size_t>(s)] = Coeff(1) / p.nu(s);
        v[static_cast<std::size_t>(p.rank() + s)] = Coeff(1) / p.zeta(s);
    }
    return EvalPoint<Coeff>(p.rank(), std::move(v));
}

template <class B>
IdentitySides<B> f_interpretation_check(const DualitySubstitution &sub, const B &backend, ElementId omega,
                                            const EvalPoint<typename B::Coeff> &point)
{
    const WeylGroup &W = *sub.group();
    const ElementId sigma = W.multiply(W.inverse(omega), W.longest());
    const auto dual_point = barred_point(invert_variables(point));
    const auto diag = unnormalized_table(sub.dual_group(), backend, W.reduced_word(sigma), dual_point).at(sigma);
    return {normalization_factor(W, backend, omega, point), diag};
}

#define ELLSCHUB_INSTANTIATE(B)                                                                                     \
    template DualityResidual<B> verify_duality(const DualitySubstitution &, const B &, ElementId, ElementId,        \
                                               const EvalPoint<B::Coeff> &, int);                                   \
    template std::vector<DualityResidual<B>> duality_residuals(const DualitySubstitution &, const B &,              \
                                                               const EvalPoint<B::Coeff> &, int);                   \
    template std::vector<DoubleDualResidual<B>> double_dual_residuals(const WeylGroupPtr &, const B &,              \
                                                                      const EvalPoint<B::Coeff> &);                 \
    template IdentitySides<B> double_dual_check(const WeylGroupPtr &, const B &, ElementId, ElementId,                      \
                                        const EvalPoint<B::Coeff> &);                                               \
    template IdentitySides<B> f_interpretation_check(const DualitySubstitution &, const B &, ElementId,                  \
                                                const EvalPoint<B::Coeff> &);                                       \
    template EvalPoint<B::Coeff> relabel_point(const WeylGroup &, const EvalPoint<B::Coeff> &);                     \
    template EvalPoint<B::Coeff> invert_variables(const EvalPoint<B::Coeff> &);                                     \
    template EvalPoint<B::Coeff> barred_point(const EvalPoint<B::Coeff> &);

ELLSCHUB_INSTANTIATE(ComplexBackend)
ELLSCHUB_INSTANTIATE(ExactBackend)

#undef ELLSCHUB_INSTANTIATE

} // namespace ellschub
