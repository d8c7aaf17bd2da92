#pragma once

#include "ellschub/elliptic.hpp"
#include "ellschub/weyl.hpp"

#include <map>
#include <tuple>
#include <vector>

namespace ellschub {

enum class Normalization {
    Normalized,   // c(G, omega) * E
    Unnormalized, // E
    Em,           // normalized class divided by the full delta product
};

const char *to_string(Normalization n);

// Values sigma -> class of X_omega at a fixed point, for every sigma in W.
template <class B>
struct ClassTable {
    using Value = typename B::Value;
    using Point = EvalPoint<typename B::Coeff>;

    WeylGroupPtr group;
    Word word;          // omega = product of the word (left to right)
    ElementId omega = 0;
    Point point;
    std::vector<Value> values; // indexed by sigma
    Normalization normalization = Normalization::Normalized;

    const Value &at(ElementId sigma) const { return values.at(sigma); }
};

// omega = id: value at id is prod over all positive coroots of delta(h^{-beta^v}, h),
// every other entry is zero.
template <class B>
ClassTable<B> initial_table(const WeylGroupPtr &W, const B &backend, const EvalPoint<typename B::Coeff> &point);

// One Bott-Samelson step omega -> omega*s of the normalized class. `inner` must be
// the table of omega at the nu-sector s-transform of `outer`.
template <class B>
ClassTable<B> bs_step(const B &backend, const ClassTable<B> &inner, int s, const EvalPoint<typename B::Coeff> &outer);

// Normalized table of X_omega, omega = product of `word` (reduced or not).
template <class B>
ClassTable<B> bs_table(const WeylGroupPtr &W, const B &backend, const Word &word,
                       const EvalPoint<typename B::Coeff> &point);

// R-matrix recursion: the word builds omega = s_{i1} s_{i2} ... s_{ik} by left
// multiplication, peeling the first letter. Memoized on (suffix position,
// sigma, accumulated zeta-twist), shared across sigma queries.
template <class B>
class RMatrixEvaluator {
public:
    using Value = typename B::Value;
    using Point = EvalPoint<typename B::Coeff>;

    RMatrixEvaluator(WeylGroupPtr W, const B &backend, Word word, Point point);

    Value operator()(ElementId sigma);
    ElementId omega() const { return omega_; }
    std::size_t memo_size() const { return memo_.size(); }

private:
    Value eval(std::size_t pos, ElementId sigma, ElementId twist);

    WeylGroupPtr W_;
    const B &backend_;
    Word word_;
    Point point_;
    ElementId omega_;
    std::vector<ElementId> suffix_inverse_; // (s_{i_pos} ... s_{i_k})^{-1}
    Value initial_;
    std::map<std::tuple<std::size_t, ElementId, ElementId>, Value> memo_;
};

template <class B>
typename B::Value rmatrix_eval(const WeylGroupPtr &W, const B &backend, const Word &word, ElementId sigma,
                               const EvalPoint<typename B::Coeff> &point);

// c(G, omega) = prod over positive roots beta with omega(beta) > 0 of delta(h^{-beta^v}, h).
template <class B>
typename B::Value normalization_factor(const WeylGroup &W, const B &backend, ElementId omega,
                                       const EvalPoint<typename B::Coeff> &point);

// Tangent weights at the central point T(G, omega) = Phi+ cap omega Phi- (roots)
// and the normalization index set F(G, omega) = Phi+^v cap omega^{-1} Phi+^v (coroots).
struct TangentSets {
    std::vector<LatticeVector> tangent;
    std::vector<LatticeVector> fixed;
};
TangentSets tangent_sets(const WeylGroup &W, ElementId omega);

// Set-level recurrences behind the normalization recursions, for one (omega, s).
struct TangentRecurrenceCheck {
    bool complement = false;     // F(G,omega) = Phi+^v \ T(G^v, omega^{-1})
    bool tangent_right = false;  // T(G^v, omega s) = T(G^v, omega) + {omega(alpha_s^v)}   (length up)
    bool tangent_left = false;   // T(G^v, s omega) = s T(G^v, omega) + {alpha_s^v}       (length up)
    bool fixed_right = false;    // F(G, omega s) = s F(G, omega) -/+ ...                 (both cases)
    bool fixed_left = false;     // F(G, s omega) = F(G, omega) - {omega^{-1}(alpha_s^v)}  (length up)
    bool all() const { return complement && tangent_right && tangent_left && fixed_right && fixed_left; }
};
TangentRecurrenceCheck check_tangent_recurrences(const WeylGroup &W, ElementId omega, int s);

// Both sides of an identity between class values.
template <class B>
struct IdentitySides {
    typename B::Value lhs;
    typename B::Value rhs;
};

// The two c(G, .) recursions at a point: lhs is c at omega*s (resp. s*omega),
// rhs its prediction from c at omega.
template <class B>
IdentitySides<B> right_normalization_check(const WeylGroup &W, const B &backend, ElementId omega, int s,
                                           const EvalPoint<typename B::Coeff> &point);
template <class B>
IdentitySides<B> left_normalization_check(const WeylGroup &W, const B &backend, ElementId omega, int s,
                                          const EvalPoint<typename B::Coeff> &point);

// Unnormalized E via the length-split Bott-Samelson recursion, E_id(X_id) = 1.
template <class B>
ClassTable<B> unnormalized_table(const WeylGroupPtr &W, const B &backend, const Word &word,
                                 const EvalPoint<typename B::Coeff> &point);

template <class B>
ClassTable<B> em_table(const WeylGroupPtr &W, const B &backend, const Word &word,
                       const EvalPoint<typename B::Coeff> &point);

// prod over positive roots beta with sigma^{-1}(beta) < 0 of delta(e^{beta}, h):
// closed form of the diagonal entry E_sigma(X_sigma).
template <class B>
typename B::Value diagonal_closed_form(const WeylGroup &W, const B &backend, ElementId sigma,
                                       const EvalPoint<typename B::Coeff> &point);

// prod over all positive coroots of delta(h^{-beta^v}, h) (the value of the
// normalized class at omega = sigma = id).
template <class B>
typename B::Value full_nu_product(const WeylGroup &W, const B &backend, const EvalPoint<typename B::Coeff> &point);

} // namespace ellschub
