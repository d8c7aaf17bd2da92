#pragma once

#include "ellschub/lattice.hpp"

#include <map>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

namespace ellschub {

struct CartanLabel {
    char family = 'A';
    int rank = 1;

    // Throws std::invalid_argument unless the family/rank pair names a simple
    // finite type (A1+, B2+, C2+, D3+, E6-8, F4, G2).
    void validate() const;
    std::string str() const;

    friend bool operator==(const CartanLabel &, const CartanLabel &) = default;
};

// Parses "B2", "A3", "G2", ... (family letter + decimal rank).
CartanLabel parse_cartan_label(std::string_view text);

// Standard Cartan matrix in Bourbaki numbering, with entry (i, j) equal to the
// pairing <alpha_i^v, alpha_j>. In particular s_i(alpha_j) = alpha_j - A(i,j) alpha_i.
IntMatrix cartan_matrix(const CartanLabel &label);

// Finite crystallographic root system of a simple type, in simple-root and
// simple-coroot integer coordinates. Immutable after construction.
class RootSystem {
public:
    const CartanLabel &label() const { return label_; }
    const IntMatrix &cartan() const { return cartan_; }
    int rank() const { return cartan_.size(); }

    // Index-compatible: positive_coroots()[k] is the coroot of positive_roots()[k].
    const std::vector<LatticeVector> &positive_roots() const { return roots_; }
    const std::vector<LatticeVector> &positive_coroots() const { return coroots_; }
    std::size_t num_positive_roots() const { return roots_.size(); }

    LatticeVector simple_root(int i) const { return LatticeVector::unit(rank(), i, LatticeTag::Root); }
    LatticeVector simple_coroot(int i) const { return LatticeVector::unit(rank(), i, LatticeTag::Coroot); }

    // For a root or coroot v (as tagged) returns the index k of the positive
    // root/coroot equal to +v or -v together with the sign, or nullopt if v is
    // not a root.
    struct RootRef {
        std::size_t index;
        int sign;
    };
    std::optional<RootRef> locate(const LatticeVector &v) const;

    friend bool operator==(const RootSystem &a, const RootSystem &b)
    {
        return a.cartan_ == b.cartan_ && a.roots_ == b.roots_ && a.coroots_ == b.coroots_;
    }

private:
    friend RootSystem build_root_system(const CartanLabel &);
    friend RootSystem build_root_system(const CartanLabel &, const IntMatrix &);
    friend RootSystem langlands_dual(const RootSystem &);
    void index();

    CartanLabel label_;
    IntMatrix cartan_;
    std::vector<LatticeVector> roots_;
    std::vector<LatticeVector> coroots_;
    std::map<std::vector<int>, std::size_t> root_index_;
    std::map<std::vector<int>, std::size_t> coroot_index_;
};

RootSystem build_root_system(const CartanLabel &label);
// Uses the supplied Cartan matrix instead of the standard one for the label
// (the label is only descriptive). Used for Langlands duals of non-simply-laced
// types where the dual Cartan matrix is a relabeling of the standard one.
RootSystem build_root_system(const CartanLabel &label, const IntMatrix &cartan);

// Transposed Cartan matrix; roots and coroots exchanged index-for-index.
RootSystem langlands_dual(const RootSystem &rs);

// Simple reflection s_i in the lattice the vector is tagged with. Throws
// std::out_of_range for a bad index.
LatticeVector reflect(const RootSystem &rs, int i, const LatticeVector &v);

} // namespace ellschub
