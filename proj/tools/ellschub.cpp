// ellschub: local elliptic classes of Schubert varieties and their duality.
#include "ellschub/campaign.hpp"
#include "ellschub/chart.hpp"
#include "ellschub/classes.hpp"
#include "ellschub/corpus.hpp"
#include "ellschub/sampling.hpp"
#include "ellschub/serialize.hpp"

#include <CLI11.hpp>

#include <cstdlib>
#include <iostream>
#include <optional>
#include <sstream>

using namespace ellschub;

namespace {

enum Exit { ok = 0, check_failed = 1, bad_input = 2, singular = 3 };

struct Common {
    std::string backend = "exact";
    int qorder = 8;
    std::string q = "0.1";
    std::uint64_t seed = 1;
};

int default_qorder()
{
    if (const char *env = std::getenv("ELLSCHUB_QORDER")) {
        try {
            const int n = std::stoi(env);
            if (n >= 1) {
                return n;
            }
        } catch (const std::exception &) {
        }
        std::cerr << "ignoring invalid ELLSCHUB_QORDER='" << env << "'\n";
    }
    return 8;
}

std::complex<double> parse_q(const std::string &text)
{
    std::stringstream ss(text);
    double re = 0.0;
    double im = 0.0;
    char comma = 0;
    if (!(ss >> re)) {
        throw std::invalid_argument("bad --q '" + text + "'");
    }
    if (ss >> comma) {
        if (comma != ',' || !(ss >> im)) {
            throw std::invalid_argument("bad --q '" + text + "' (use re or re,im)");
        }
    }
    return {re, im};
}

BackendKind parse_backend(const std::string &s)
{
    if (s == "exact") {
        return BackendKind::Exact;
    }
    if (s == "complex") {
        return BackendKind::Complex;
    }
    throw std::invalid_argument("unknown backend '" + s + "'");
}

void add_common(CLI::App *cmd, Common &c)
{
    cmd->add_option("--backend", c.backend, "exact or complex")->check(CLI::IsMember({"exact", "complex"}));
    cmd->add_option("--qorder", c.qorder, "exact backend: work modulo q^(qorder+1) [env ELLSCHUB_QORDER]")
        ->check(CLI::PositiveNumber);
    cmd->add_option("--q", c.q, "complex backend: nome as re or re,im");
    cmd->add_option("--seed", c.seed, "random seed");
}

struct TableArgs {
    Common common;
    std::string type;
    std::string word;
    std::string normalization = "normalized";
    std::string format = "json";
    bool no_chart = false;
};

template <class B>
ClassTable<B> compute_table(const WeylGroupPtr &W, const B &backend, const Word &word, const EvalPoint<typename B::Coeff> &p,
                            const std::string &norm)
{
    if (norm == "unnormalized") {
        return unnormalized_table(W, backend, word, p);
    }
    if (norm == "em") {
        return em_table(W, backend, word, p);
    }
    return bs_table(W, backend, word, p);
}

template <class B>
int table_with(const TableArgs &a, const B &backend)
{
    using Coeff = typename B::Coeff;
    const CartanLabel label = parse_cartan_label(a.type);
    const WeylGroupPtr W = make_weyl_group(label);
    const Word word = parse_word(a.word, label.rank);
    const std::optional<Chart> chart = a.no_chart ? std::nullopt : chart_for(label);

    Sampler sampler(a.common.seed);
    std::vector<Coeff> chart_values;
    auto table = with_resampling(sampler, [&](Sampler &s) {
        std::optional<EvalPoint<Coeff>> p;
        if (chart) {
            chart_values = s.values<Coeff>(chart->size());
            p = chart->to_canonical(chart_values);
        } else {
            p = s.point<Coeff>(label.rank);
        }
        return compute_table(W, backend, word, *p, a.normalization);
    });

    if (a.format == "csv") {
        std::cout << table_to_csv(table);
    } else if (a.format == "pretty") {
        std::cout << table_to_pretty(table);
    } else {
        Json j = table_to_json(table, backend.context());
        if (chart) {
            j["chart"] = chart->name();
            j["chart_point"] = chart_point_to_json(*chart, chart_values);
        }
        std::cout << j.dump() << '\n';
    }
    return ok;
}

int run_table(const TableArgs &a)
{
    if (parse_backend(a.common.backend) == BackendKind::Exact) {
        return table_with(a, ExactBackend(QContext::exact(a.common.qorder)));
    }
    return table_with(a, ComplexBackend(QContext::complex(parse_q(a.common.q))));
}

struct VerifyArgs {
    Common common;
    std::string kind;
    std::string type;
    int points = 3;
    double tolerance = 1e-9;
    bool flip_sign = false;
    bool failures_only = false;
};

int run_verify(const VerifyArgs &a)
{
    CampaignOptions o;
    o.label = parse_cartan_label(a.type);
    o.backend = parse_backend(a.common.backend);
    o.qorder = a.common.qorder;
    o.q = parse_q(a.common.q);
    o.points = a.points;
    o.seed = a.common.seed;
    o.tolerance = a.tolerance;
    o.flip_sign = a.flip_sign;
    const CampaignKind kind = parse_campaign_kind(a.kind);
    const CampaignReport report = run_campaign(kind, o);
    for (const auto &r : report.records) {
        if (!a.failures_only || !r.pass) {
            std::cout << record_to_json(r, o).dump() << '\n';
        }
    }
    const std::size_t total = report.records.size();
    std::cerr << to_string(kind) << ' ' << o.label.str() << ": " << total - report.failures() << '/' << total
              << " pass\n";
    return report.ok() ? ok : check_failed;
}

struct CorpusArgs {
    Common common;
    std::string dir = ELLSCHUB_CORPUS_DIR;
    int points = 3;
    double tolerance = 1e-9;
    bool failures_only = false;
};

int run_corpus_cmd(const CorpusArgs &a)
{
    const auto entries = load_corpus_dir(a.dir);
    CorpusOptions o;
    o.backend = parse_backend(a.common.backend);
    o.qorder = a.common.qorder;
    o.q = parse_q(a.common.q);
    o.seed = a.common.seed;
    o.points = a.points;
    o.tolerance = a.tolerance;

    const std::size_t monomials = check_chart_naturality(entries, a.common.seed);
    const auto checks = run_corpus(entries, o);
    std::size_t failed = 0;
    for (const auto &c : checks) {
        failed += c.pass ? 0 : 1;
        if (!a.failures_only || !c.pass) {
            std::cout << corpus_check_to_json(c, o).dump() << '\n';
        }
    }
    std::cerr << "corpus: " << entries.size() << " entries, " << monomials << " chart monomials natural, "
              << checks.size() - failed << '/' << checks.size() << " checks pass\n";
    return failed == 0 ? ok : check_failed;
}

int run_charts(const std::string &type)
{
    std::vector<CartanLabel> labels;
    if (type.empty()) {
        labels = {{'A', 1}, {'A', 2}, {'B', 2}, {'C', 2}};
    } else {
        labels.push_back(parse_cartan_label(type));
    }
    for (const auto &l : labels) {
        const auto chart = chart_for(l);
        if (!chart) {
            std::cout << l.str() << ": no chart (canonical variables are sampled directly)\n";
            continue;
        }
        const VariableLayout L{l.rank};
        std::cout << l.str() << ": " << chart->name() << '\n';
        for (int slot = 0; slot < L.size(); ++slot) {
            std::cout << "  " << L.name(slot) << " = " << chart->format(chart->canonical(slot)) << '\n';
        }
    }
    return ok;
}

} // namespace

int main(int argc, char **argv)
{
    CLI::App app{"Local elliptic classes of Schubert varieties and Langlands duality"};
    app.require_subcommand(1);

    const int qorder = default_qorder();

    TableArgs table;
    table.common.qorder = qorder;
    auto *t = app.add_subcommand("table", "sigma-indexed table of one class at a seeded point");
    t->add_option("--type", table.type, "Cartan type, e.g. A1, B2, G2")->required();
    t->add_option("--word", table.word, "word for omega: 1-based letters '1,2' (empty or 'id' for the identity)");
    t->add_option("--normalization", table.normalization)->check(CLI::IsMember({"normalized", "unnormalized", "em"}));
    t->add_option("--format", table.format)->check(CLI::IsMember({"json", "csv", "pretty"}));
    t->add_flag("--no-chart", table.no_chart, "sample canonical variables even when a chart exists");
    add_common(t, table.common);

    VerifyArgs verify;
    verify.common.qorder = qorder;
    auto *v = app.add_subcommand("verify", "residual campaign over all pairs; exit 0 iff every check passes");
    v->add_option("kind", verify.kind, "duality | recursions | normalization | double-dual")
        ->required()
        ->check(CLI::IsMember({"duality", "recursions", "normalization", "double-dual"}));
    v->add_option("--type", verify.type, "Cartan type")->required();
    v->add_option("--points", verify.points, "number of seeded points")->check(CLI::PositiveNumber);
    v->add_option("--tolerance", verify.tolerance, "complex backend: relative tolerance");
    v->add_flag("--flip-sign", verify.flip_sign, "duality with the opposite sign (negative control)");
    v->add_flag("--failures-only", verify.failures_only, "print failing records only");
    add_common(v, verify.common);

    CorpusArgs corpus;
    corpus.common.qorder = qorder;
    auto *c = app.add_subcommand("corpus", "check the stored tables against the engine");
    c->add_option("--dir", corpus.dir, "corpus directory");
    c->add_option("--points", corpus.points, "number of seeded points per type")->check(CLI::PositiveNumber);
    c->add_option("--tolerance", corpus.tolerance, "complex backend: relative tolerance");
    c->add_flag("--failures-only", corpus.failures_only, "print failing checks only");
    add_common(c, corpus.common);

    std::string chart_type;
    auto *ch = app.add_subcommand("charts", "list coordinate charts");
    ch->add_option("--type", chart_type, "Cartan type");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError &e) {
        const int code = app.exit(e);
        return code == 0 ? ok : bad_input;
    }

    try {
        if (*t) {
            return run_table(table);
        }
        if (*v) {
            return run_verify(verify);
        }
        if (*c) {
            return run_corpus_cmd(corpus);
        }
        return run_charts(chart_type);
    } catch (const SamplingFailure &e) {
        std::cerr << "error: " << e.what() << '\n';
        return singular;
    } catch (const std::exception &e) {
        std::cerr << "error: " << e.what() << '\n';
        return bad_input;
    }
}
