#pragma once

#include "ellschub/lattice.hpp"
#include "ellschub/rootsys.hpp"

#include <cstddef>
#include <map>
#include <memory>
#include <vector>

namespace ellschub {

// Index of an element inside its WeylGroup.
using ElementId = std::size_t;
using Word = std::vector<int>; // 0-based simple indices

// Element of W as integer matrices: root_matrix column i is the image of
// alpha_i in simple-root coordinates, coroot_matrix likewise for alpha_i^v.
struct WeylElement {
    IntMatrix root_matrix;
    IntMatrix coroot_matrix;
};

// Exhaustively enumerated Weyl group. Immutable after construction.
//
// dual() returns the group of the Langlands dual root system with the same
// element indexing (simple indices are shared, so every table carries over).
class WeylGroup {
public:
    static constexpr std::size_t default_order_cap = 1'000'000;

    explicit WeylGroup(RootSystem rs, std::size_t order_cap = default_order_cap);

    const RootSystem &root_system() const { return rs_; }
    int rank() const { return rs_.rank(); }
    std::size_t order() const { return elements_.size(); }

    const WeylElement &element(ElementId w) const { return elements_.at(w); }
    int length(ElementId w) const { return lengths_.at(w); }

    ElementId identity() const { return 0; }
    ElementId longest() const { return longest_; }
    ElementId simple(int i) const { return right_.at(0).at(static_cast<std::size_t>(i)); }

    ElementId right_multiply(ElementId w, int i) const { return right_[w][static_cast<std::size_t>(i)]; }
    ElementId left_multiply(int i, ElementId w) const { return left_[w][static_cast<std::size_t>(i)]; }
    ElementId multiply(ElementId u, ElementId w) const;
    ElementId inverse(ElementId w) const { return inverse_[w]; }
    ElementId from_word(const Word &word) const;

    bool is_right_descent(ElementId w, int i) const;
    bool is_left_descent(ElementId w, int i) const;

    // Lexicographically first reduced word (greedy on left descents).
    Word reduced_word(ElementId w) const;
    // Every reduced word, lexicographically sorted.
    std::vector<Word> reduced_words(ElementId w) const;

    bool bruhat_leq(ElementId u, ElementId w) const;

    // Index t with tau0 s_i tau0 = s_t.
    int conjugate_by_longest(int i) const { return star_.at(static_cast<std::size_t>(i)); }

    // Root lattice vectors use root_matrix; coroot lattice vectors use coroot_matrix.
    LatticeVector act(ElementId w, const LatticeVector &v) const;

    // Positive roots alpha with w(alpha) negative; its size is length(w).
    std::vector<std::size_t> inversion_set(ElementId w) const;

    WeylGroup dual() const;

    ElementId find(const IntMatrix &root_matrix) const;

private:
    WeylGroup() = default;
    void compute_star();

    RootSystem rs_;
    std::vector<WeylElement> elements_;
    std::vector<int> lengths_;
    std::vector<std::vector<ElementId>> right_;
    std::vector<std::vector<ElementId>> left_;
    std::vector<ElementId> inverse_;
    std::map<IntMatrix, ElementId> lookup_;
    ElementId longest_ = 0;
    std::vector<int> star_;
};

using WeylGroupPtr = std::shared_ptr<const WeylGroup>;

WeylGroupPtr make_weyl_group(const CartanLabel &label);

} // namespace ellschub
