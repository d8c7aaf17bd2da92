#include "ellschub/lattice.hpp"

#include <algorithm>
#include <ostream>
#include <stdexcept>

namespace ellschub {

IntMatrix::IntMatrix(int n, std::vector<int> row_major) : n_(n), a_(std::move(row_major))
{
    if (a_.size() != static_cast<std::size_t>(n) * n) {
        throw std::invalid_argument("IntMatrix: entry count does not match size");
    }
}

IntMatrix IntMatrix::identity(int n)
{
    IntMatrix m(n);
    for (int i = 0; i < n; ++i) {
        m(i, i) = 1;
    }
    return m;
}

IntMatrix IntMatrix::operator*(const IntMatrix &rhs) const
{
    IntMatrix out(n_);
    for (int i = 0; i < n_; ++i) {
        for (int k = 0; k < n_; ++k) {
            const int a = (*this)(i, k);
            if (a == 0) {
                continue;
            }
            for (int j = 0; j < n_; ++j) {
                out(i, j) += a * rhs(k, j);
            }
        }
    }
    return out;
}

std::vector<int> IntMatrix::apply(std::span<const int> v) const
{
    std::vector<int> out(static_cast<std::size_t>(n_), 0);
    for (int i = 0; i < n_; ++i) {
        int acc = 0;
        for (int j = 0; j < n_; ++j) {
            acc += (*this)(i, j) * v[static_cast<std::size_t>(j)];
        }
        out[static_cast<std::size_t>(i)] = acc;
    }
    return out;
}

IntMatrix IntMatrix::transposed() const
{
    IntMatrix t(n_);
    for (int i = 0; i < n_; ++i) {
        for (int j = 0; j < n_; ++j) {
            t(j, i) = (*this)(i, j);
        }
    }
    return t;
}

std::vector<int> IntMatrix::column(int c) const
{
    std::vector<int> out(static_cast<std::size_t>(n_));
    for (int i = 0; i < n_; ++i) {
        out[static_cast<std::size_t>(i)] = (*this)(i, c);
    }
    return out;
}

std::ostream &operator<<(std::ostream &os, const IntMatrix &m)
{
    os << '[';
    for (int i = 0; i < m.size(); ++i) {
        os << (i ? ",[" : "[");
        for (int j = 0; j < m.size(); ++j) {
            os << (j ? "," : "") << m(i, j);
        }
        os << ']';
    }
    return os << ']';
}

LatticeVector LatticeVector::unit(int rank, int i, LatticeTag tag)
{
    std::vector<int> c(static_cast<std::size_t>(rank), 0);
    c.at(static_cast<std::size_t>(i)) = 1;
    return LatticeVector(std::move(c), tag);
}

LatticeVector LatticeVector::operator-() const
{
    std::vector<int> c = coords_;
    for (int &x : c) {
        x = -x;
    }
    return LatticeVector(std::move(c), tag_);
}

bool LatticeVector::is_zero() const
{
    return std::all_of(coords_.begin(), coords_.end(), [](int x) { return x == 0; });
}

bool LatticeVector::is_positive() const
{
    return !is_zero() && std::all_of(coords_.begin(), coords_.end(), [](int x) { return x >= 0; });
}

std::ostream &operator<<(std::ostream &os, const LatticeVector &v)
{
    os << (v.tag() == LatticeTag::Root ? "root(" : "coroot(");
    for (int i = 0; i < v.rank(); ++i) {
        os << (i ? "," : "") << v[i];
    }
    return os << ')';
}

} // namespace ellschub
