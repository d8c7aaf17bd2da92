#pragma once

#include <compare>
#include <cstddef>
#include <iosfwd>
#include <span>
#include <vector>

namespace ellschub {

// Square integer matrix, row-major. Used for Cartan matrices and for the
// action of Weyl group elements on root/coroot coordinates.
class IntMatrix {
public:
    IntMatrix() = default;
    explicit IntMatrix(int n) : n_(n), a_(static_cast<std::size_t>(n) * n, 0) {}
    IntMatrix(int n, std::vector<int> row_major);

    static IntMatrix identity(int n);

    int size() const { return n_; }
    int &operator()(int r, int c) { return a_[static_cast<std::size_t>(r) * n_ + c]; }
    int operator()(int r, int c) const { return a_[static_cast<std::size_t>(r) * n_ + c]; }

    IntMatrix operator*(const IntMatrix &rhs) const;
    std::vector<int> apply(std::span<const int> v) const;
    IntMatrix transposed() const;
    std::vector<int> column(int c) const;

    const std::vector<int> &data() const { return a_; }

    friend bool operator==(const IntMatrix &, const IntMatrix &) = default;
    friend auto operator<=>(const IntMatrix &, const IntMatrix &) = default;

private:
    int n_ = 0;
    std::vector<int> a_;
};

std::ostream &operator<<(std::ostream &os, const IntMatrix &m);

enum class LatticeTag { Root, Coroot };

// Integer coordinates in the basis of simple roots (Root) or simple coroots
// (Coroot). The tag never changes after construction.
class LatticeVector {
public:
    LatticeVector(std::vector<int> coords, LatticeTag tag)
        : coords_(std::move(coords)), tag_(tag) {}

    static LatticeVector unit(int rank, int i, LatticeTag tag);

    const std::vector<int> &coords() const { return coords_; }
    LatticeTag tag() const { return tag_; }
    int rank() const { return static_cast<int>(coords_.size()); }
    int operator[](int i) const { return coords_[static_cast<std::size_t>(i)]; }

    LatticeVector operator-() const;
    bool is_zero() const;
    // All coordinates >= 0 and not all zero.
    bool is_positive() const;

    friend bool operator==(const LatticeVector &, const LatticeVector &) = default;

private:
    std::vector<int> coords_;
    LatticeTag tag_;
};

std::ostream &operator<<(std::ostream &os, const LatticeVector &v);

} // namespace ellschub
