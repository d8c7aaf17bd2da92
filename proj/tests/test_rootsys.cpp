#include "support.hpp"

#include <doctest.h>

#include <set>

using namespace ellschub;
using testing::small_types;

namespace {

std::set<std::vector<int>> coords(const std::vector<LatticeVector> &vs)
{
    std::set<std::vector<int>> s;
    for (const auto &v : vs) {
        s.insert(v.coords());
    }
    return s;
}

} // namespace

TEST_CASE("cartan labels parse and validate")
{
    CHECK(parse_cartan_label("B2").family == 'B');
    CHECK(parse_cartan_label("E8").rank == 8);
    for (const char *bad : {"B1", "C1", "D2", "E5", "E9", "F3", "G3", "A0", "H3", "", "B", "2B", "A-1"}) {
        CHECK_THROWS_AS(parse_cartan_label(bad), std::invalid_argument);
    }
}

TEST_CASE("B2 positive roots and coroots")
{
    const RootSystem rs = build_root_system({'B', 2});
    CHECK(rs.cartan() == IntMatrix(2, {2, -1, -2, 2}));
    CHECK(coords(rs.positive_roots()) == std::set<std::vector<int>>{{1, 0}, {0, 1}, {1, 1}, {1, 2}});
    // coroot of a root, listed at the same index
    std::set<std::pair<std::vector<int>, std::vector<int>>> pairs;
    for (std::size_t k = 0; k < rs.num_positive_roots(); ++k) {
        pairs.insert({rs.positive_roots()[k].coords(), rs.positive_coroots()[k].coords()});
    }
    CHECK(pairs == std::set<std::pair<std::vector<int>, std::vector<int>>>{
                       {{1, 0}, {1, 0}}, {{0, 1}, {0, 1}}, {{1, 1}, {2, 1}}, {{1, 2}, {1, 1}}});
}

TEST_CASE("small root systems")
{
    CHECK(coords(build_root_system({'A', 1}).positive_roots()) == std::set<std::vector<int>>{{1}});
    CHECK(coords(build_root_system({'A', 2}).positive_roots()) ==
          std::set<std::vector<int>>{{1, 0}, {0, 1}, {1, 1}});
}

TEST_CASE("positive root counts match the classical formulas")
{
    for (const auto &l : small_types()) {
        const RootSystem rs = build_root_system(l);
        CAPTURE(l.str());
        CHECK(rs.num_positive_roots() == testing::classical_positive_roots(l));
        for (const auto &r : rs.positive_roots()) {
            CHECK(r.is_positive());
        }
        for (int i = 0; i < l.rank; ++i) {
            CHECK(rs.locate(rs.simple_root(i)).has_value());
            CHECK(rs.cartan()(i, i) == 2);
            for (int j = 0; j < l.rank; ++j) {
                if (i != j) {
                    CHECK(rs.cartan()(i, j) <= 0);
                }
            }
        }
    }
}

TEST_CASE("Langlands dual")
{
    const RootSystem b2 = build_root_system({'B', 2});
    const RootSystem c2 = build_root_system({'C', 2});
    CHECK(langlands_dual(b2).label().str() == "C2");
    CHECK(langlands_dual(b2).cartan() == c2.cartan());
    CHECK(langlands_dual(c2).cartan() == b2.cartan());
    CHECK(langlands_dual(build_root_system({'A', 2})) == build_root_system({'A', 2}));
    for (const auto &l : small_types()) {
        const RootSystem rs = build_root_system(l);
        const RootSystem d = langlands_dual(rs);
        CAPTURE(l.str());
        CHECK(d.cartan() == rs.cartan().transposed());
        for (std::size_t k = 0; k < rs.num_positive_roots(); ++k) {
            CHECK(d.positive_roots()[k].coords() == rs.positive_coroots()[k].coords());
            CHECK(d.positive_coroots()[k].coords() == rs.positive_roots()[k].coords());
        }
        CHECK(langlands_dual(d) == rs);
    }
}

TEST_CASE("simple reflections")
{
    const RootSystem b2 = build_root_system({'B', 2});
    CHECK(reflect(b2, 1, b2.simple_root(0)).coords() == std::vector<int>{1, 2});
    CHECK_THROWS_AS(reflect(b2, 2, b2.simple_root(0)), std::out_of_range);
    CHECK_THROWS_AS(reflect(b2, -1, b2.simple_root(0)), std::out_of_range);

    for (const auto &l : small_types()) {
        const RootSystem rs = build_root_system(l);
        for (int s = 0; s < l.rank; ++s) {
            CHECK(reflect(rs, s, rs.simple_root(s)) == -rs.simple_root(s));
            CHECK(reflect(rs, s, rs.simple_coroot(s)) == -rs.simple_coroot(s));
            for (const auto *set : {&rs.positive_roots(), &rs.positive_coroots()}) {
                for (const auto &v : *set) {
                    const LatticeVector w = reflect(rs, s, v);
                    CHECK(w.tag() == v.tag());
                    CHECK(reflect(rs, s, w) == v);
                    CHECK(rs.locate(w).has_value());
                }
            }
        }
    }
}

TEST_CASE("each positive root is sent to its negative by exactly one reflection")
{
    for (const auto &l : small_types()) {
        if (l.family == 'F') {
            continue; // |W| = 1152 x 24 roots: covered by the smaller types
        }
        const auto W = make_weyl_group(l);
        const RootSystem &rs = W->root_system();
        // reflections: conjugates w s w^{-1}
        std::set<ElementId> reflections;
        for (ElementId w = 0; w < W->order(); ++w) {
            for (int s = 0; s < l.rank; ++s) {
                reflections.insert(W->multiply(W->multiply(w, W->simple(s)), W->inverse(w)));
            }
        }
        CAPTURE(l.str());
        CHECK(reflections.size() == rs.num_positive_roots());
        for (const auto &beta : rs.positive_roots()) {
            int hits = 0;
            for (ElementId t : reflections) {
                hits += W->act(t, beta) == -beta ? 1 : 0;
            }
            CHECK(hits == 1);
        }
    }
}
