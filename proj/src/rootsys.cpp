#include "ellschub/rootsys.hpp"

#include <charconv>
#include <deque>
#include <stdexcept>

namespace ellschub {

void CartanLabel::validate() const
{
    bool ok = false;
    switch (family) {
    case 'A': ok = rank >= 1; break;
    case 'B':
    case 'C': ok = rank >= 2; break;
    case 'D': ok = rank >= 3; break;
    case 'E': ok = rank >= 6 && rank <= 8; break;
    case 'F': ok = rank == 4; break;
    case 'G': ok = rank == 2; break;
    default:
        throw std::invalid_argument(std::string("unknown Cartan family '") + family
                                    + "' (expected one of A,B,C,D,E,F,G)");
    }
    if (!ok) {
        throw std::invalid_argument("invalid rank " + std::to_string(rank) + " for Cartan family "
                                    + std::string(1, family));
    }
}

std::string CartanLabel::str() const
{
    return std::string(1, family) + std::to_string(rank);
}

CartanLabel parse_cartan_label(std::string_view text)
{
    if (text.size() < 2) {
        throw std::invalid_argument("bad Cartan label '" + std::string(text) + "'");
    }
    CartanLabel label;
    label.family = text[0];
    const char *first = text.data() + 1;
    const char *last = text.data() + text.size();
    auto [ptr, ec] = std::from_chars(first, last, label.rank);
    if (ec != std::errc() || ptr != last) {
        throw std::invalid_argument("bad Cartan label '" + std::string(text) + "'");
    }
    label.validate();
    return label;
}

IntMatrix cartan_matrix(const CartanLabel &label)
{
    label.validate();
    const int n = label.rank;
    IntMatrix a(n);
    for (int i = 0; i < n; ++i) {
        a(i, i) = 2;
    }
    auto bond = [&](int i, int j) {
        a(i, j) = -1;
        a(j, i) = -1;
    };
    switch (label.family) {
    case 'A':
        for (int i = 0; i + 1 < n; ++i) bond(i, i + 1);
        break;
    case 'B':
        for (int i = 0; i + 1 < n; ++i) bond(i, i + 1);
        a(n - 1, n - 2) = -2; // alpha_n short
        break;
    case 'C':
        for (int i = 0; i + 1 < n; ++i) bond(i, i + 1);
        a(n - 2, n - 1) = -2; // alpha_n long
        break;
    case 'D':
        for (int i = 0; i + 2 < n; ++i) bond(i, i + 1);
        bond(n - 3, n - 1);
        break;
    case 'E':
        bond(0, 2);
        bond(1, 3);
        for (int i = 2; i + 1 < n; ++i) bond(i, i + 1);
        break;
    case 'F':
        bond(0, 1);
        bond(1, 2);
        bond(2, 3);
        a(2, 1) = -2;
        break;
    case 'G':
        a(0, 1) = -3; // alpha_1 short
        a(1, 0) = -1;
        break;
    }
    return a;
}

namespace {

std::vector<int> reflect_coords(const IntMatrix &cartan, int i, const std::vector<int> &v, LatticeTag tag)
{
    const int n = cartan.size();
    int pairing = 0;
    for (int j = 0; j < n; ++j) {
        // <alpha_i^v, v> on the root lattice, <v, alpha_i> on the coroot lattice.
        pairing += (tag == LatticeTag::Root ? cartan(i, j) : cartan(j, i)) * v[static_cast<std::size_t>(j)];
    }
    std::vector<int> out = v;
    out[static_cast<std::size_t>(i)] -= pairing;
    return out;
}

void check_cartan(const IntMatrix &a)
{
    for (int i = 0; i < a.size(); ++i) {
        for (int j = 0; j < a.size(); ++j) {
            if (i == j ? a(i, j) != 2 : a(i, j) > 0) {
                throw std::invalid_argument("not a Cartan matrix: diagonal must be 2, off-diagonal <= 0");
            }
            if (i != j && (a(i, j) == 0) != (a(j, i) == 0)) {
                throw std::invalid_argument("not a Cartan matrix: zero pattern is not symmetric");
            }
        }
    }
}

} // namespace

void RootSystem::index()
{
    root_index_.clear();
    coroot_index_.clear();
    for (std::size_t k = 0; k < roots_.size(); ++k) {
        root_index_.emplace(roots_[k].coords(), k);
        coroot_index_.emplace(coroots_[k].coords(), k);
    }
}

std::optional<RootSystem::RootRef> RootSystem::locate(const LatticeVector &v) const
{
    const auto &table = v.tag() == LatticeTag::Root ? root_index_ : coroot_index_;
    if (auto it = table.find(v.coords()); it != table.end()) {
        return RootRef{it->second, 1};
    }
    if (auto it = table.find((-v).coords()); it != table.end()) {
        return RootRef{it->second, -1};
    }
    return std::nullopt;
}

RootSystem build_root_system(const CartanLabel &label)
{
    return build_root_system(label, cartan_matrix(label));
}

RootSystem build_root_system(const CartanLabel &label, const IntMatrix &cartan)
{
    label.validate();
    if (cartan.size() != label.rank) {
        throw std::invalid_argument("Cartan matrix size does not match rank of " + label.str());
    }
    check_cartan(cartan);

    RootSystem rs;
    rs.label_ = label;
    rs.cartan_ = cartan;
    const int n = label.rank;

    // Breadth-first closure of the simple roots under simple reflections,
    // keeping positive images only. The coroot of s_i(beta) is s_i(beta^v).
    std::map<std::vector<int>, std::size_t> seen;
    std::deque<std::size_t> queue;
    for (int i = 0; i < n; ++i) {
        rs.roots_.push_back(LatticeVector::unit(n, i, LatticeTag::Root));
        rs.coroots_.push_back(LatticeVector::unit(n, i, LatticeTag::Coroot));
        seen.emplace(rs.roots_.back().coords(), rs.roots_.size() - 1);
        queue.push_back(rs.roots_.size() - 1);
    }
    constexpr std::size_t max_roots = 1000;
    while (!queue.empty()) {
        const std::size_t k = queue.front();
        queue.pop_front();
        for (int i = 0; i < n; ++i) {
            auto image = reflect_coords(cartan, i, rs.roots_[k].coords(), LatticeTag::Root);
            LatticeVector img(image, LatticeTag::Root);
            if (!img.is_positive() || seen.contains(image)) {
                continue;
            }
            auto co = reflect_coords(cartan, i, rs.coroots_[k].coords(), LatticeTag::Coroot);
            rs.roots_.push_back(std::move(img));
            rs.coroots_.emplace_back(std::move(co), LatticeTag::Coroot);
            seen.emplace(std::move(image), rs.roots_.size() - 1);
            queue.push_back(rs.roots_.size() - 1);
            if (rs.roots_.size() > max_roots) {
                throw std::invalid_argument("root closure does not terminate; Cartan matrix is not of finite type");
            }
        }
    }
    rs.index();
    return rs;
}

RootSystem langlands_dual(const RootSystem &rs)
{
    RootSystem dual;
    dual.label_ = rs.label_;
    if (rs.label_.family == 'B') {
        dual.label_.family = 'C';
    } else if (rs.label_.family == 'C') {
        dual.label_.family = 'B';
    }
    dual.cartan_ = rs.cartan_.transposed();
    dual.roots_.reserve(rs.roots_.size());
    dual.coroots_.reserve(rs.roots_.size());
    for (std::size_t k = 0; k < rs.roots_.size(); ++k) {
        dual.roots_.emplace_back(rs.coroots_[k].coords(), LatticeTag::Root);
        dual.coroots_.emplace_back(rs.roots_[k].coords(), LatticeTag::Coroot);
    }
    dual.index();
    return dual;
}

LatticeVector reflect(const RootSystem &rs, int i, const LatticeVector &v)
{
    if (i < 0 || i >= rs.rank()) {
        throw std::out_of_range("simple reflection index " + std::to_string(i) + " out of range for "
                                + rs.label().str());
    }
    if (v.rank() != rs.rank()) {
        throw std::invalid_argument("lattice vector rank does not match root system");
    }
    return LatticeVector(reflect_coords(rs.cartan(), i, v.coords(), v.tag()), v.tag());
}

} // namespace ellschub
