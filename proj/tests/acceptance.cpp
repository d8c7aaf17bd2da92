// One PASS/FAIL line per acceptance criterion; exit status 1 if any fails.
#include "support.hpp"

#include "ellschub/campaign.hpp"
#include "ellschub/corpus.hpp"
#include "ellschub/duality.hpp"
#include "ellschub/residual.hpp"
#include "ellschub/sampling.hpp"

#include <algorithm>
#include <chrono>
#include <cstdio>
#include <functional>
#include <set>
#include <sstream>
#include <string>

using namespace ellschub;
using testing::cplx;

namespace {

struct Outcome {
    bool pass = true;
    std::ostringstream detail;

    void require(bool ok, const std::string &what)
    {
        if (!ok) {
            if (pass) {
                detail << "failed: ";
            } else {
                detail << "; ";
            }
            detail << what;
            pass = false;
        }
    }
};

using Body = std::function<void(Outcome &)>;

bool run(int number, const char *name, double limit_seconds, const Body &body)
{
    Outcome out;
    const auto start = std::chrono::steady_clock::now();
    try {
        body(out);
    } catch (const std::exception &e) {
        out.require(false, std::string("exception: ") + e.what());
    }
    const double elapsed = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    out.require(elapsed < limit_seconds, "over time limit");
    std::printf("criterion %d: %s  %s  [%.2fs / limit %.0fs]  %s\n", number, out.pass ? "PASS" : "FAIL", name,
                elapsed, limit_seconds, out.detail.str().c_str());
    std::fflush(stdout);
    return out.pass;
}

std::vector<CorpusEntry> corpus_for(std::initializer_list<const char *> types)
{
    std::vector<CorpusEntry> out;
    for (auto &e : load_corpus_dir(ELLSCHUB_CORPUS_DIR)) {
        for (const char *t : types) {
            if (e.label == parse_cartan_label(t)) {
                out.push_back(e);
            }
        }
    }
    return out;
}

std::size_t failed(const std::vector<CorpusCheck> &checks)
{
    return static_cast<std::size_t>(std::count_if(checks.begin(), checks.end(), [](const auto &c) { return !c.pass; }));
}

std::size_t failed(const std::vector<CheckRecord> &records, const std::string &check)
{
    return static_cast<std::size_t>(std::count_if(records.begin(), records.end(), [&](const auto &r) {
        return r.check == check && !r.pass;
    }));
}

std::size_t counted(const std::vector<CheckRecord> &records, const std::string &check)
{
    return static_cast<std::size_t>(
        std::count_if(records.begin(), records.end(), [&](const auto &r) { return r.check == check; }));
}

void sl2_corpus(Outcome &out)
{
    const auto entries = corpus_for({"A1"});
    out.require(entries.size() == 4, "expected 4 SL2 entries");
    CorpusOptions exact;
    exact.qorder = 8;
    const auto e = run_corpus(entries, exact);
    CorpusOptions complex;
    complex.backend = BackendKind::Complex;
    complex.points = 10;
    complex.tolerance = 1e-9;
    const auto c = run_corpus(entries, complex);
    out.require(failed(e) == 0, std::to_string(failed(e)) + " exact mismatches");
    out.require(failed(c) == 0, std::to_string(failed(c)) + " complex mismatches");
    out.detail << e.size() << " exact + " << c.size() << " complex checks";
}

void rank_two_corpus(Outcome &out)
{
    const auto entries = corpus_for({"B2", "C2"});
    std::size_t zeros = 0;
    std::size_t sums = 0;
    for (const auto &e : entries) {
        zeros += e.zero ? 1 : 0;
        sums += e.terms.size() == 3 ? 1 : 0;
    }
    out.require(entries.size() == 33, "expected 33 rank-two entries");
    out.require(sums == 1, "three-term sum missing");
    CorpusOptions exact;
    exact.qorder = 8;
    const auto checks = run_corpus(entries, exact);
    std::size_t cross = 0;
    for (const auto &c : checks) {
        cross += c.kind == "cross" ? 1 : 0;
    }
    out.require(failed(checks) == 0, std::to_string(failed(checks)) + " mismatches");
    out.require(cross > 0, "no cross-table checks");
    out.detail << entries.size() << " entries (" << zeros << " zeros), " << checks.size() << " checks incl. "
               << cross << " cross";
}

void duality(Outcome &out)
{
    for (const char *type : {"A1", "A2", "B2", "C2", "G2"}) {
        CampaignOptions o;
        o.label = parse_cartan_label(type);
        o.points = 3;
        o.qorder = 8;
        const auto report = run_campaign(CampaignKind::Duality, o);
        const std::size_t n = make_weyl_group(o.label)->order();
        out.require(report.records.size() == 3 * n * n, std::string(type) + " pair count");
        out.require(report.ok(), std::string(type) + ": " + std::to_string(report.failures()) + " failures");
        o.flip_sign = true;
        const auto control = run_campaign(CampaignKind::Duality, o);
        out.require(!control.ok(), std::string(type) + ": flipped sign not detected");
        out.detail << type << " " << report.records.size() << " ok, control " << control.failures() << " fail; ";
    }
}

void recursions(Outcome &out)
{
    for (const char *type : {"A1", "A2", "B2", "G2", "A3"}) {
        CampaignOptions o;
        o.label = parse_cartan_label(type);
        o.points = 3;
        if (o.label.rank == 3) {
            o.backend = BackendKind::Complex;
            o.tolerance = 1e-8;
        }
        const auto report = run_campaign(CampaignKind::Recursions, o);
        const std::size_t n = counted(report.records, "bs-vs-rmatrix");
        const std::size_t bad = failed(report.records, "bs-vs-rmatrix");
        out.require(n > 0 && bad == 0, std::string(type) + ": " + std::to_string(bad) + " of " + std::to_string(n));
        out.detail << type << " " << n << "; ";
    }
}

template <class B>
bool same_table(const WeylGroupPtr &W, const B &backend, const Word &a, const Word &b,
                const EvalPoint<typename B::Coeff> &p)
{
    return bs_table(W, backend, a, p).values == bs_table(W, backend, b, p).values;
}

void word_independence(Outcome &out)
{
    const ExactBackend exact(QContext::exact(8));
    Sampler sampler(515);

    const auto b2 = make_weyl_group({'B', 2});
    const auto a3 = make_weyl_group({'A', 3});
    const Word b2_first = {0, 1, 0, 1};
    const Word b2_second = {1, 0, 1, 0};
    out.require(b2->from_word(b2_first) == b2->longest() && b2->from_word(b2_second) == b2->longest(),
                "B2 words are not tau0");

    auto a3_words = a3->reduced_words(a3->longest());
    std::shuffle(a3_words.begin(), a3_words.end(), sampler.engine());
    a3_words.resize(3);

    int points = 0;
    int round_trips = 0;
    for (int k = 0; k < 3; ++k) {
        with_resampling(sampler, [&](Sampler &s) {
            const auto pb = s.point<mpq_class>(2);
            out.require(same_table(b2, exact, b2_first, b2_second, pb), "B2 tau0 words disagree");
            const auto pa = s.point<mpq_class>(3);
            const auto reference = bs_table(a3, exact, a3_words[0], pa).values;
            for (std::size_t i = 1; i < a3_words.size(); ++i) {
                out.require(bs_table(a3, exact, a3_words[i], pa).values == reference, "A3 tau0 words disagree");
            }
            for (const auto &W : {b2, a3}) {
                const auto p = W == b2 ? pb : pa;
                for (ElementId w = 0; w < W->order(); ++w) {
                    const Word word = W->reduced_word(w);
                    const auto before = bs_table(W, exact, word, p).values;
                    for (int r = 0; r < W->rank(); ++r) {
                        Word longer = word;
                        longer.push_back(r);
                        longer.push_back(r);
                        out.require(bs_table(W, exact, longer, p).values == before, "s*s round trip changed a table");
                        ++round_trips;
                    }
                }
            }
            return 0;
        });
        ++points;
    }
    out.detail << points << " points, A3 words";
    for (const auto &w : a3_words) {
        out.detail << " " << format_word(w);
    }
    out.detail << ", " << round_trips << " round trips";
}

void normalization(Outcome &out)
{
    CampaignOptions o;
    o.label = {'B', 2};
    o.points = 3;
    const auto report = run_campaign(CampaignKind::Normalization, o);
    for (const char *check : {"right-normalization", "left-normalization", "f-interpretation", "c-times-E"}) {
        const std::size_t n = counted(report.records, check);
        const std::size_t bad = failed(report.records, check);
        out.require(n > 0 && bad == 0, std::string(check) + ": " + std::to_string(bad) + " of " + std::to_string(n));
        out.detail << check << " " << n << "; ";
    }
    out.require(report.ok(), std::to_string(report.failures()) + " failures overall");
}

void delta_suite(Outcome &out)
{
    const ExactBackend exact(QContext::exact(8));
    testing::Gen g(77);
    int pairs = 0;
    while (pairs < 100) {
        const mpq_class a = g.rational();
        const mpq_class b = g.rational();
        if (a * b == 1) {
            continue;
        }
        const QSeries d = exact.delta(a, b);
        out.require(d == exact.delta(b, a), "symmetry");
        out.require(exact.delta(1 / a, 1 / b) == -d, "inversion");
        out.require(d[0] == (a * b - 1) / ((a - 1) * (b - 1)), "q^0 coefficient");
        out.require(d[1] == 1 / (a * b) - a * b, "q^1 coefficient");
        ++pairs;
    }

    const double q = 0.05;
    const ComplexBackend complex(QContext::complex(q));
    const ExactBackend deep(QContext::exact(14));
    int agreed = 0;
    double worst = 0;
    while (agreed < 100) {
        const mpq_class a(g.integer(-40, 40), g.integer(1, 40));
        const mpq_class b(g.integer(-40, 40), g.integer(1, 40));
        const double ad = a.get_d();
        const double bd = b.get_d();
        if (std::abs(ad) < 0.5 || std::abs(ad) > 2 || std::abs(bd) < 0.5 || std::abs(bd) > 2 ||
            std::abs(ad - 1) < 0.05 || std::abs(bd - 1) < 0.05) {
            continue;
        }
        const double r = testing::rel(complex.delta(ad, bd), deep.delta(a, b).evaluate_real(q));
        worst = std::max(worst, r);
        out.require(r < 1e-9, "backend agreement");
        ++agreed;
    }

    double worst_fd = 0;
    for (cplx qq : {cplx(0.1), cplx(0.3, 0.2), cplx(-0.5), cplx(0.05, -0.4)}) {
        const double r =
            testing::rel(ComplexBackend(QContext::complex(qq)).theta_prime_one(), testing::theta_derivative_fd(qq));
        worst_fd = std::max(worst_fd, r);
        out.require(r < 1e-8, "theta'(1) vs finite differences");
    }
    out.detail << pairs << " exact pairs, backends " << agreed << " pairs max rel " << worst << ", theta' max rel "
               << worst_fd;
}

void double_dual(Outcome &out)
{
    for (const char *type : {"A2", "B2"}) {
        CampaignOptions o;
        o.label = parse_cartan_label(type);
        o.points = 3;
        const auto report = run_campaign(CampaignKind::DoubleDual, o);
        const std::size_t n = make_weyl_group(o.label)->order();
        out.require(report.records.size() == 3 * n * n, std::string(type) + " pair count");
        out.require(report.ok(), std::string(type) + ": " + std::to_string(report.failures()) + " failures");
        out.detail << type << " " << report.records.size() << "; ";
    }
    const auto a2 = make_weyl_group({'A', 2});
    const auto b2 = make_weyl_group({'B', 2});
    out.require(a2->conjugate_by_longest(0) == 1, "A2 relabeling is trivial");
    out.require(b2->conjugate_by_longest(0) == 0 && b2->conjugate_by_longest(1) == 1, "B2 relabeling is not trivial");
}

void vanishing(Outcome &out)
{
    const ExactBackend exact(QContext::exact(8));
    Sampler sampler(909);
    std::size_t zeros = 0;
    for (const char *type : {"A2", "B2"}) {
        const auto W = make_weyl_group(parse_cartan_label(type));
        with_resampling(sampler, [&](Sampler &s) {
            const auto p = s.point<mpq_class>(W->rank());
            for (ElementId w = 0; w < W->order(); ++w) {
                const auto t = bs_table(W, exact, W->reduced_word(w), p);
                for (ElementId sigma = 0; sigma < W->order(); ++sigma) {
                    const bool zero = t.at(sigma).is_zero();
                    zeros += zero ? 1 : 0;
                    out.require(zero == !testing::bruhat_by_subwords(*W, sigma, w),
                                std::string(type) + " zero pattern differs from Bruhat order");
                }
            }
            return 0;
        });
    }
    std::size_t tabulated = 0;
    for (const auto &e : corpus_for({"B2", "C2"})) {
        const auto W = make_weyl_group(e.label);
        const bool below = W->bruhat_leq(W->from_word(e.sigma), W->from_word(e.omega));
        out.require(e.zero == !below, e.source + " zero flag differs from Bruhat order");
        tabulated += e.zero ? 1 : 0;
    }
    out.detail << zeros << " computed zeros, " << tabulated << " tabulated zeros";
}

} // namespace

int main()
{
    bool ok = true;
    ok &= run(1, "SL2 corpus, exact q^8 and complex 10 points", 1, sl2_corpus);
    ok &= run(2, "SO(5)/Sp(2) corpus with sum and zeros", 10, rank_two_corpus);
    ok &= run(3, "duality on A1 A2 B2 C2 G2 with sign control", 120, duality);
    ok &= run(4, "Bott-Samelson vs R-matrix", 120, recursions);
    ok &= run(5, "word independence and s*s round trip", 60, word_independence);
    ok &= run(6, "normalization suite on B2", 60, normalization);
    ok &= run(7, "delta suite", 30, delta_suite);
    ok &= run(8, "double-dual constraint on A2 and B2", 60, double_dual);
    ok &= run(9, "vanishing equals Bruhat order", 30, vanishing);
    return ok ? 0 : 1;
}
