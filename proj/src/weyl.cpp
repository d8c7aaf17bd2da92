#include "ellschub/weyl.hpp"

#include <algorithm>
#include <cmath>
#include <functional>
#include <stdexcept>
#include <string>

namespace ellschub {

namespace {

// Classical order of W; avoids starting an enumeration that would exceed the cap.
double classical_order(const CartanLabel &label)
{
    auto factorial = [](int n) {
        double f = 1;
        for (int k = 2; k <= n; ++k) f *= k;
        return f;
    };
    const int n = label.rank;
    switch (label.family) {
    case 'A': return factorial(n + 1);
    case 'B':
    case 'C': return std::ldexp(factorial(n), n);
    case 'D': return std::ldexp(factorial(n), n - 1);
    case 'E': return n == 6 ? 51840.0 : n == 7 ? 2903040.0 : 696729600.0;
    case 'F': return 1152.0;
    case 'G': return 12.0;
    }
    return 0;
}

IntMatrix reflection_matrix(const RootSystem &rs, int i, LatticeTag tag)
{
    const int n = rs.rank();
    IntMatrix m(n);
    for (int j = 0; j < n; ++j) {
        auto img = reflect(rs, i, LatticeVector::unit(n, j, tag));
        for (int r = 0; r < n; ++r) {
            m(r, j) = img[r];
        }
    }
    return m;
}

bool column_negative(const IntMatrix &m, int c)
{
    for (int r = 0; r < m.size(); ++r) {
        if (m(r, c) != 0) {
            return m(r, c) < 0;
        }
    }
    return false;
}

} // namespace

WeylGroup::WeylGroup(RootSystem rs, std::size_t order_cap) : rs_(std::move(rs))
{
    const double expected = classical_order(rs_.label());
    if (expected > static_cast<double>(order_cap)) {
        throw std::length_error("Weyl group of " + rs_.label().str() + " has order "
                                + std::to_string(static_cast<long long>(expected))
                                + ", above the enumeration cap of " + std::to_string(order_cap));
    }
    const int n = rs_.rank();
    std::vector<IntMatrix> gen_root, gen_coroot;
    for (int i = 0; i < n; ++i) {
        gen_root.push_back(reflection_matrix(rs_, i, LatticeTag::Root));
        gen_coroot.push_back(reflection_matrix(rs_, i, LatticeTag::Coroot));
    }

    // BFS from the identity by right multiplication; BFS depth is the length.
    elements_.push_back({IntMatrix::identity(n), IntMatrix::identity(n)});
    lengths_.push_back(0);
    lookup_.emplace(elements_[0].root_matrix, 0);
    inverse_.push_back(0);
    for (std::size_t k = 0; k < elements_.size(); ++k) {
        right_.emplace_back(static_cast<std::size_t>(n));
        for (int i = 0; i < n; ++i) {
            IntMatrix m = elements_[k].root_matrix * gen_root[static_cast<std::size_t>(i)];
            auto it = lookup_.find(m);
            if (it == lookup_.end()) {
                if (elements_.size() >= order_cap) {
                    throw std::length_error("Weyl group enumeration exceeded cap " + std::to_string(order_cap));
                }
                const ElementId id = elements_.size();
                elements_.push_back({m, elements_[k].coroot_matrix * gen_coroot[static_cast<std::size_t>(i)]});
                lengths_.push_back(lengths_[k] + 1);
                it = lookup_.emplace(std::move(m), id).first;
                // (parent * s_i)^{-1} = s_i * parent^{-1}, filled in below
                inverse_.push_back(k);
            }
            right_[k][static_cast<std::size_t>(i)] = it->second;
        }
    }

    left_.assign(elements_.size(), std::vector<ElementId>(static_cast<std::size_t>(n)));
    for (std::size_t k = 0; k < elements_.size(); ++k) {
        for (int i = 0; i < n; ++i) {
            left_[k][static_cast<std::size_t>(i)] = lookup_.at(gen_root[static_cast<std::size_t>(i)] * elements_[k].root_matrix);
        }
    }
    // inverse_ currently holds the BFS parent; parents precede children.
    std::vector<ElementId> inv(elements_.size(), 0);
    for (std::size_t k = 1; k < elements_.size(); ++k) {
        const ElementId parent = inverse_[k];
        int letter = -1;
        for (int i = 0; i < n; ++i) {
            if (right_[parent][static_cast<std::size_t>(i)] == k) {
                letter = i;
                break;
            }
        }
        inv[k] = left_[inv[parent]][static_cast<std::size_t>(letter)];
    }
    inverse_ = std::move(inv);

    longest_ = static_cast<ElementId>(std::max_element(lengths_.begin(), lengths_.end()) - lengths_.begin());
    compute_star();
}

void WeylGroup::compute_star()
{
    star_.clear();
    for (int i = 0; i < rank(); ++i) {
        const ElementId c = multiply(multiply(longest_, simple(i)), longest_);
        int found = -1;
        for (int t = 0; t < rank(); ++t) {
            if (simple(t) == c) {
                found = t;
            }
        }
        if (found < 0) {
            throw std::logic_error("tau0 s tau0 is not a simple reflection; Weyl group construction is broken");
        }
        star_.push_back(found);
    }
}

ElementId WeylGroup::multiply(ElementId u, ElementId w) const
{
    // Walk a word of w; cheaper than a matrix product plus lookup.
    ElementId out = u;
    for (int i : reduced_word(w)) {
        out = right_multiply(out, i);
    }
    return out;
}

ElementId WeylGroup::from_word(const Word &word) const
{
    ElementId w = identity();
    for (int i : word) {
        if (i < 0 || i >= rank()) {
            throw std::out_of_range("simple index " + std::to_string(i + 1) + " out of range for "
                                    + rs_.label().str());
        }
        w = right_multiply(w, i);
    }
    return w;
}

ElementId WeylGroup::find(const IntMatrix &root_matrix) const
{
    auto it = lookup_.find(root_matrix);
    if (it == lookup_.end()) {
        throw std::invalid_argument("matrix is not an element of the Weyl group");
    }
    return it->second;
}

bool WeylGroup::is_right_descent(ElementId w, int i) const
{
    return column_negative(elements_[w].root_matrix, i);
}

bool WeylGroup::is_left_descent(ElementId w, int i) const
{
    return column_negative(elements_[inverse_[w]].root_matrix, i);
}

Word WeylGroup::reduced_word(ElementId w) const
{
    Word word;
    while (w != identity()) {
        for (int i = 0; i < rank(); ++i) {
            if (is_left_descent(w, i)) {
                word.push_back(i);
                w = left_multiply(i, w);
                break;
            }
        }
    }
    return word;
}

std::vector<Word> WeylGroup::reduced_words(ElementId w) const
{
    std::vector<Word> out;
    Word prefix;
    std::function<void(ElementId)> rec = [&](ElementId x) {
        if (x == identity()) {
            out.push_back(prefix);
            return;
        }
        for (int i = 0; i < rank(); ++i) {
            if (is_left_descent(x, i)) {
                prefix.push_back(i);
                rec(left_multiply(i, x));
                prefix.pop_back();
            }
        }
    };
    rec(w);
    return out;
}

bool WeylGroup::bruhat_leq(ElementId u, ElementId w) const
{
    // Deodhar's property Z: for a right descent s of w,
    //   u <= w  iff  us <= ws  (s a descent of u)  or  u <= ws  (otherwise).
    while (true) {
        if (u == w || u == identity()) {
            return true;
        }
        if (lengths_[u] >= lengths_[w]) {
            return false;
        }
        int s = 0;
        while (!is_right_descent(w, s)) {
            ++s;
        }
        if (is_right_descent(u, s)) {
            u = right_multiply(u, s);
        }
        w = right_multiply(w, s);
    }
}

LatticeVector WeylGroup::act(ElementId w, const LatticeVector &v) const
{
    const auto &m = v.tag() == LatticeTag::Root ? elements_[w].root_matrix : elements_[w].coroot_matrix;
    return LatticeVector(m.apply(v.coords()), v.tag());
}

std::vector<std::size_t> WeylGroup::inversion_set(ElementId w) const
{
    std::vector<std::size_t> out;
    const auto &roots = rs_.positive_roots();
    for (std::size_t k = 0; k < roots.size(); ++k) {
        if (!act(w, roots[k]).is_positive()) {
            out.push_back(k);
        }
    }
    return out;
}

WeylGroup WeylGroup::dual() const
{
    WeylGroup d;
    d.rs_ = langlands_dual(rs_);
    d.elements_.reserve(elements_.size());
    for (const auto &e : elements_) {
        d.elements_.push_back({e.coroot_matrix, e.root_matrix});
    }
    d.lengths_ = lengths_;
    d.right_ = right_;
    d.left_ = left_;
    d.inverse_ = inverse_;
    for (std::size_t k = 0; k < d.elements_.size(); ++k) {
        d.lookup_.emplace(d.elements_[k].root_matrix, k);
    }
    d.longest_ = longest_;
    d.star_ = star_;
    return d;
}

WeylGroupPtr make_weyl_group(const CartanLabel &label)
{
    return std::make_shared<const WeylGroup>(build_root_system(label));
}

} // namespace ellschub
