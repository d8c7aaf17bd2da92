#include "support.hpp"

#include "ellschub/campaign.hpp"
#include "ellschub/chart.hpp"
#include "ellschub/corpus.hpp"
#include "ellschub/residual.hpp"
#include "ellschub/sampling.hpp"
#include "ellschub/serialize.hpp"

#include <doctest.h>

#include <sstream>

using namespace ellschub;

TEST_CASE("chart monomial parser")
{
    const Chart so5 = *chart_for({'B', 2});
    CHECK(so5.parse("mu1^2").exponents == std::vector<int>{0, 0, 2, 0, 0});
    CHECK(so5.parse("z2/z1").exponents == std::vector<int>{-1, 1, 0, 0, 0});
    CHECK(so5.parse("1/(mu1*mu2)").exponents == std::vector<int>{0, 0, -1, -1, 0});
    CHECK(so5.parse("1/mu2^2").exponents == std::vector<int>{0, 0, 0, -2, 0});
    CHECK(so5.parse(" h ").exponents == std::vector<int>{0, 0, 0, 0, 1});
    CHECK(so5.parse("(z1*z2)^-1").exponents == std::vector<int>{-1, -1, 0, 0, 0});
    CHECK(so5.parse("1").exponents == std::vector<int>(5, 0));
    for (const char *bad : {"", "zb1", "mu1^", "(z1", "z1)", "z1+z2", "mu1^x"}) {
        CHECK_THROWS_AS(so5.parse(bad), std::invalid_argument);
    }
    for (const char *text : {"mu1^2", "z2/z1", "1/(mu1*mu2)", "1/mu2^2", "h", "z1*mu2^3/(z2*h^2)"}) {
        CHECK(so5.parse(so5.format(so5.parse(text))) == so5.parse(text));
    }
    const Chart sp2 = *chart_for({'C', 2});
    CHECK(sp2.parse("zb1^2").exponents == std::vector<int>{2, 0, 0, 0, 0});
    CHECK_FALSE(chart_for({'G', 2}).has_value());
}

TEST_CASE("charts map to canonical variables")
{
    const Chart so5 = *chart_for({'B', 2});
    const std::vector<mpq_class> v = {mpq_class(2), mpq_class(3), mpq_class(5), mpq_class(7), mpq_class(11)};
    const ExactPoint p = so5.to_canonical(v);
    CHECK(p.zeta(0) == mpq_class(3, 2));
    CHECK(p.zeta(1) == mpq_class(1, 3));
    CHECK(p.nu(0) == mpq_class(7, 5));
    CHECK(p.nu(1) == mpq_class(1, 49));
    CHECK(p.h() == 11);

    const Chart sl3 = *chart_for({'A', 2});
    CHECK(sl3.size() == 7);
    const auto q = sl3.to_canonical(std::vector<mpq_class>{1, 2, 3, 4, 5, 6, 7});
    CHECK(q.zeta(1) == mpq_class(3, 2));
    CHECK(q.nu(1) == mpq_class(6, 5));

    // mu1^2 = nu1^-2 nu2^-1 in SO(5); mu1 alone needs a square root
    const auto m = so5.solve(so5.parse("mu1^2"));
    REQUIRE(m.has_value());
    CHECK(m->exponents() == std::vector<int>{0, 0, -2, -1, 0});
    CHECK_FALSE(so5.solve(so5.parse("mu1")).has_value());
    CHECK_FALSE(chart_for({'A', 1})->solve(chart_for({'A', 1})->parse("z1")).has_value());
}

TEST_CASE("words")
{
    CHECK(parse_word("id", 2).empty());
    CHECK(parse_word("", 2).empty());
    CHECK(parse_word("1,2,1", 2) == Word{0, 1, 0});
    CHECK_THROWS_AS(parse_word("1,3", 2), std::invalid_argument);
    CHECK_THROWS_AS(parse_word("0", 2), std::invalid_argument);
    CHECK_THROWS_AS(parse_word("1,,2", 2), std::invalid_argument);
    CHECK_THROWS_AS(parse_word("a", 2), std::invalid_argument);
    CHECK(format_word({0, 1}) == "1,2");
    CHECK(format_word({}) == "id");
}

TEST_CASE("corpus lines")
{
    std::istringstream in("# comment\n"
                          "\n"
                          "B2 1,2 id (mu1^2|h)(z2/z1|1/(mu1*mu2))\n"
                          "B2 1 2 0\n"
                          "C2 1,2 1,2 - (zb1|h) + (zb2|h)(mub1|h)\n");
    const auto entries = parse_corpus(in, "inline");
    REQUIRE(entries.size() == 3);
    CHECK(entries[0].source == "inline:3");
    CHECK(entries[0].omega == Word{0, 1});
    CHECK(entries[0].sigma.empty());
    CHECK(entries[0].terms.size() == 1);
    CHECK(entries[0].terms[0].size() == 2);
    CHECK(entries[1].zero);
    CHECK(entries[2].sign == -1);
    CHECK(entries[2].terms.size() == 2);
    CHECK(entries[2].terms[1].size() == 2);

    for (const char *bad : {"B2 1,2\n", "B2 1,2 id (mu1|h\n", "B2 1,2 id mu1|h\n", "G2 1 1 (z1|h)\n",
                            "B2 1,3 id 0\n", "X2 1 1 0\n", "B2 1 1 (q1|h)\n"}) {
        std::istringstream bad_in(bad);
        CHECK_THROWS(parse_corpus(bad_in, "bad"));
    }

    // expected value: sign times sum of products
    const ExactBackend e(QContext::exact(4));
    const Chart sp2 = *chart_for({'C', 2});
    const std::vector<mpq_class> v = {mpq_class(2), mpq_class(3), mpq_class(5), mpq_class(7), mpq_class(11)};
    const QSeries expect = -(e.delta(mpq_class(2), mpq_class(11)) +
                             e.delta(mpq_class(3), mpq_class(11)) * e.delta(mpq_class(5), mpq_class(11)));
    CHECK(expected_value(sp2, e, entries[2], v) == expect);
}

TEST_CASE("shipped corpus")
{
    const auto entries = load_corpus_dir(ELLSCHUB_CORPUS_DIR);
    std::size_t zeros = 0;
    std::size_t sums = 0;
    for (const auto &e : entries) {
        zeros += e.zero ? 1 : 0;
        sums += e.terms.size() > 1 ? 1 : 0;
    }
    CHECK(entries.size() == 37);
    CHECK(zeros == 15);
    CHECK(sums == 1);
    CHECK(check_chart_naturality(entries, 3) > 100);
    CHECK_THROWS(load_corpus_dir("/nonexistent-corpus-dir"));
}

TEST_CASE("sampler")
{
    Sampler a(5);
    Sampler b(5);
    for (int i = 0; i < 200; ++i) {
        const mpq_class x = a.rational();
        CHECK(x == b.rational());
        CHECK(x != 0);
        CHECK(abs(x.get_num()) <= 99);
        CHECK(x.get_den() <= 99);
        const auto z = a.complex_value();
        CHECK(z == b.complex_value());
        CHECK(std::abs(z) >= 0.5);
        CHECK(std::abs(z) <= 2.0);
    }
    int calls = 0;
    CHECK(with_resampling(a, [&](Sampler &) {
              if (++calls < 4) {
                  throw SingularPoint("test");
              }
              return calls;
          }) == 4);
    CHECK_THROWS_AS(with_resampling(a, [](Sampler &) -> int { throw ZeroArgument("test"); }), SamplingFailure);
}

TEST_CASE("comparisons")
{
    CHECK(compare(std::complex<double>(1.0), std::complex<double>(1.0 + 1e-12), 1e-9).pass);
    CHECK_FALSE(compare(std::complex<double>(1.0), std::complex<double>(1.0 + 1e-6), 1e-9).pass);
    CHECK(compare(std::complex<double>(0.0), std::complex<double>(0.0), 1e-9).pass);
    CHECK_FALSE(compare(std::complex<double>(0.0), std::complex<double>(1e-30), 1e-9).pass);
    QSeries a(2, mpq_class(1, 3));
    CHECK(compare(a, a, 0).pass);
    QSeries b = a;
    b[2] = mpq_class(1, 1000000);
    CHECK_FALSE(compare(a, b, 1.0).pass);
    CHECK(is_negligible(std::complex<double>(1e-12), 1.0));
    CHECK_FALSE(is_negligible(std::complex<double>(1e-9), 1.0));
}

TEST_CASE("json output")
{
    const auto W = make_weyl_group({'B', 2});
    const ExactBackend e(QContext::exact(3));
    const ExactPoint p(2, {mpq_class(2), mpq_class(3, 5), mpq_class(-5), mpq_class(7), mpq_class(11, 13)});
    const auto t = bs_table(W, e, {0, 1}, p);
    const Json j = table_to_json(t, e.context());
    CHECK(j["type"] == "B2");
    CHECK(j["word"] == Json::array({1, 2}));
    CHECK(j["context"]["qorder"] == 3);
    CHECK(j["point"]["zeta2"] == "3/5");
    CHECK(j["entries"].size() == 8);
    int zeros = 0;
    for (const auto &entry : j["entries"]) {
        zeros += entry["zero"].get<bool>() ? 1 : 0;
        CHECK(entry["value"].size() == 4);
    }
    CHECK(zeros == 4);
    CHECK(table_to_json(t, e.context()).dump() == j.dump());
    CHECK(table_to_csv(t).rfind("sigma,q0,q1,q2,q3\nid,", 0) == 0);
    CHECK(table_to_pretty(t).find("s1s2") != std::string::npos);

    const ComplexBackend c(QContext::complex(0.1));
    const ComplexPoint cp(1, {{1.5, 0.5}, {0.7, -0.2}, {1.3, 0.0}});
    const Json cj = table_to_json(bs_table(make_weyl_group({'A', 1}), c, {0}, cp), c.context());
    CHECK(cj["point"]["zeta1"] == Json::array({1.5, 0.5}));
    CHECK(cj["entries"][0]["value"].size() == 2);
    CHECK(cj["context"]["backend"] == "complex");
}

TEST_CASE("campaign reports")
{
    CampaignOptions o;
    o.label = {'A', 2};
    o.points = 1;
    const auto report = run_campaign(CampaignKind::Duality, o);
    CHECK(report.ok());
    CHECK(report.records.size() == 36);
    const Json line = record_to_json(report.records.front(), o);
    CHECK(line["check"] == "duality");
    CHECK(line["dual_type"] == "A2");
    CHECK(line["qorder"] == 8);
    CHECK(line["pass"] == true);
    o.flip_sign = true;
    CHECK_FALSE(run_campaign(CampaignKind::Duality, o).ok());
    CHECK(parse_campaign_kind("double-dual") == CampaignKind::DoubleDual);
    CHECK_THROWS(parse_campaign_kind("nope"));
    o.points = 0;
    CHECK_THROWS(run_campaign(CampaignKind::Duality, o));
}
