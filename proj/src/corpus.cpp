#include "ellschub/corpus.hpp"

#include "ellschub/classes.hpp"
#include "ellschub/residual.hpp"
#include "ellschub/sampling.hpp"

#include <algorithm>
#include <fstream>
#include <map>
#include <sstream>
#include <stdexcept>

namespace ellschub {

Word parse_word(const std::string &text, int rank)
{
    Word w;
    if (text.empty() || text == "id" || text == "e") {
        return w;
    }
    std::stringstream ss(text);
    std::string item;
    while (std::getline(ss, item, ',')) {
        std::size_t used = 0;
        int i = 0;
        try {
            i = std::stoi(item, &used);
        } catch (const std::exception &) {
            throw std::invalid_argument("bad word '" + text + "'");
        }
        if (used != item.size() || i < 1 || i > rank) {
            throw std::invalid_argument("bad letter '" + item + "' in word '" + text + "' (rank " +
                                        std::to_string(rank) + ")");
        }
        w.push_back(i - 1);
    }
    return w;
}

std::string format_word(const Word &w)
{
    if (w.empty()) {
        return "id";
    }
    std::string out;
    for (std::size_t k = 0; k < w.size(); ++k) {
        if (k) {
            out += ',';
        }
        out += std::to_string(w[k] + 1);
    }
    return out;
}

namespace {

std::string trim(const std::string &s)
{
    const auto b = s.find_first_not_of(" \t\r");
    if (b == std::string::npos) {
        return {};
    }
    const auto e = s.find_last_not_of(" \t\r");
    return s.substr(b, e - b + 1);
}

// "(a|b)(c|d)..." -> factors
std::vector<DeltaFactor> parse_product(const Chart &chart, const std::string &text, const std::string &where)
{
    std::vector<DeltaFactor> out;
    std::size_t i = 0;
    auto fail = [&](const std::string &msg) { throw std::invalid_argument(where + ": " + msg); };
    while (i < text.size()) {
        if (text[i] == ' ' || text[i] == '\t') {
            ++i;
            continue;
        }
        if (text[i] != '(') {
            fail("expected '(' in '" + text + "'");
        }
        int depth = 0;
        std::size_t bar = std::string::npos;
        std::size_t j = i;
        for (; j < text.size(); ++j) {
            if (text[j] == '(') {
                ++depth;
            } else if (text[j] == ')') {
                if (--depth == 0) {
                    break;
                }
            } else if (text[j] == '|' && depth == 1) {
                bar = j;
            }
        }
        if (j == text.size() || bar == std::string::npos) {
            fail("unbalanced factor in '" + text + "'");
        }
        out.push_back({chart.parse(text.substr(i + 1, bar - i - 1)), chart.parse(text.substr(bar + 1, j - bar - 1))});
        i = j + 1;
    }
    if (out.empty()) {
        fail("empty product");
    }
    return out;
}

// split on '+' outside parentheses
std::vector<std::string> split_terms(const std::string &text)
{
    std::vector<std::string> out;
    int depth = 0;
    std::string cur;
    for (char c : text) {
        if (c == '(') {
            ++depth;
        } else if (c == ')') {
            --depth;
        }
        if (c == '+' && depth == 0) {
            out.push_back(trim(cur));
            cur.clear();
        } else {
            cur += c;
        }
    }
    out.push_back(trim(cur));
    return out;
}

} // namespace

std::vector<CorpusEntry> parse_corpus(std::istream &in, const std::string &name)
{
    std::vector<CorpusEntry> out;
    std::string line;
    int lineno = 0;
    while (std::getline(in, line)) {
        ++lineno;
        const std::string t = trim(line);
        if (t.empty() || t[0] == '#') {
            continue;
        }
        const std::string where = name + ":" + std::to_string(lineno);
        std::istringstream ss(t);
        std::string type, om, sg;
        if (!(ss >> type >> om >> sg)) {
            throw std::invalid_argument(where + ": expected TYPE omega sigma");
        }
        CorpusEntry e;
        e.source = where;
        e.text = t;
        e.label = parse_cartan_label(type);
        e.omega = parse_word(om, e.label.rank);
        e.sigma = parse_word(sg, e.label.rank);
        std::string rest;
        std::getline(ss, rest);
        rest = trim(rest);
        if (rest == "0") {
            e.zero = true;
            out.push_back(std::move(e));
            continue;
        }
        if (!rest.empty() && (rest[0] == '-' || rest[0] == '+') && rest.size() > 1 &&
            (rest[1] == ' ' || rest[1] == '(')) {
            e.sign = rest[0] == '-' ? -1 : 1;
            rest = trim(rest.substr(1));
        }
        const auto chart = chart_for(e.label);
        if (!chart) {
            throw std::invalid_argument(where + ": no chart for type " + e.label.str());
        }
        for (const auto &term : split_terms(rest)) {
            e.terms.push_back(parse_product(*chart, term, where));
        }
        out.push_back(std::move(e));
    }
    return out;
}

std::vector<CorpusEntry> load_corpus_file(const std::filesystem::path &path)
{
    std::ifstream in(path);
    if (!in) {
        throw std::runtime_error("cannot open corpus file " + path.string());
    }
    return parse_corpus(in, path.filename().string());
}

std::vector<CorpusEntry> load_corpus_dir(const std::filesystem::path &dir)
{
    std::vector<std::filesystem::path> files;
    for (const auto &f : std::filesystem::directory_iterator(dir)) {
        if (f.is_regular_file() && f.path().extension() == ".txt") {
            files.push_back(f.path());
        }
    }
    if (files.empty()) {
        throw std::runtime_error("no corpus files in " + dir.string());
    }
    std::sort(files.begin(), files.end());
    std::vector<CorpusEntry> out;
    for (const auto &f : files) {
        auto part = load_corpus_file(f);
        out.insert(out.end(), std::make_move_iterator(part.begin()), std::make_move_iterator(part.end()));
    }
    return out;
}

template <class B>
typename B::Value expected_value(const Chart &chart, const B &backend, const CorpusEntry &entry,
                                 const std::vector<typename B::Coeff> &chart_values)
{
    auto total = backend.zero();
    if (entry.zero) {
        return total;
    }
    for (const auto &term : entry.terms) {
        auto prod = backend.one();
        for (const auto &f : term) {
            prod *= backend.delta(chart.evaluate(chart_values, f.a), chart.evaluate(chart_values, f.b));
        }
        total += prod;
    }
    if (entry.sign < 0) {
        total *= typename B::Coeff(-1);
    }
    return total;
}

namespace {

std::string family_key(const CartanLabel &l)
{
    return l.str();
}

template <class B>
B make_backend(const CorpusOptions &o)
{
    if constexpr (std::is_same_v<B, ExactBackend>) {
        return ExactBackend(QContext::exact(o.qorder));
    } else {
        return ComplexBackend(QContext::complex(o.q));
    }
}

template <class B>
void run_entries(const std::vector<const CorpusEntry *> &entries, const CorpusOptions &opt, std::uint64_t salt,
                 std::vector<CorpusCheck> &out)
{
    using Coeff = typename B::Coeff;
    const CartanLabel label = entries.front()->label;
    const Chart chart = *chart_for(label);
    const WeylGroupPtr W = make_weyl_group(label);
    const B backend = make_backend<B>(opt);

    for (int k = 0; k < opt.points; ++k) {
        Sampler sampler(opt.seed * 1000003ULL + salt * 7919ULL + static_cast<std::uint64_t>(k));
        auto checks = with_resampling(sampler, [&](Sampler &s) {
            const auto values = s.values<Coeff>(chart.size());
            const auto point = chart.to_canonical(values);
            std::map<ElementId, ClassTable<B>> tables;
            std::vector<CorpusCheck> local;
            for (const CorpusEntry *e : entries) {
                const ElementId omega = W->from_word(e->omega);
                auto it = tables.find(omega);
                if (it == tables.end()) {
                    it = tables.emplace(omega, bs_table(W, backend, e->omega, point)).first;
                }
                double scale = 0.0;
                for (const auto &v : it->second.values) {
                    scale = std::max(scale, magnitude(v));
                }
                const auto &engine = it->second.at(W->from_word(e->sigma));
                CorpusCheck c{"entry", e->source, label.str(), e->omega, e->sigma, k, e->zero, false, 0.0, {}};
                if (e->zero) {
                    c.pass = is_negligible(engine, scale);
                    c.residual = magnitude(engine);
                    if (!c.pass) {
                        c.detail = "engine value is not zero";
                    }
                } else {
                    const auto expected = expected_value(chart, backend, *e, values);
                    const Comparison cmp = compare(engine, expected, opt.tolerance);
                    c.pass = cmp.pass;
                    c.residual = cmp.residual;
                    if (!c.pass) {
                        c.detail = "engine value differs from the tabulated product";
                    }
                }
                local.push_back(std::move(c));
            }
            return local;
        });
        out.insert(out.end(), checks.begin(), checks.end());
    }
}

template <class B>
void run_cross(const std::vector<const CorpusEntry *> &dual_entries, const std::vector<const CorpusEntry *> &entries,
               const CorpusOptions &opt, std::vector<CorpusCheck> &out)
{
    using Coeff = typename B::Coeff;
    const CartanLabel label = entries.front()->label;
    const CartanLabel dual_label = dual_entries.front()->label;
    const Chart chart = *chart_for(label);
    const Chart dual_chart = *chart_for(dual_label);
    const WeylGroupPtr W = make_weyl_group(label);
    const B backend = make_backend<B>(opt);
    const ElementId t0 = W->longest();
    const int sign = W->length(t0) % 2 == 0 ? 1 : -1;

    std::map<std::pair<ElementId, ElementId>, const CorpusEntry *> by_pair;
    for (const CorpusEntry *e : entries) {
        by_pair.emplace(std::make_pair(W->from_word(e->omega), W->from_word(e->sigma)), e);
    }
    const int r = label.rank;
    // chart variables: z_1..z_r, mu_1..mu_r, h on both sides
    auto pulled = [&](const std::vector<Coeff> &dual_values) {
        std::vector<Coeff> v(chart.size());
        for (int i = 0; i < r; ++i) {
            v[static_cast<std::size_t>(i)] = Coeff(1) / dual_values[static_cast<std::size_t>(r + i)];
            v[static_cast<std::size_t>(r + i)] = Coeff(1) / dual_values[static_cast<std::size_t>(i)];
        }
        v.back() = Coeff(1) / dual_values.back();
        return v;
    };

    for (int k = 0; k < opt.points; ++k) {
        Sampler sampler(opt.seed * 1000003ULL + 424242ULL + static_cast<std::uint64_t>(k));
        auto checks = with_resampling(sampler, [&](Sampler &s) {
            const auto dual_values = s.values<Coeff>(dual_chart.size());
            const auto values = pulled(dual_values);
            std::vector<CorpusCheck> local;
            for (const CorpusEntry *e : dual_entries) {
                const ElementId omega = W->from_word(e->omega);
                const ElementId sigma = W->from_word(e->sigma);
                const auto key = std::make_pair(W->multiply(t0, W->inverse(sigma)), W->multiply(t0, W->inverse(omega)));
                const auto it = by_pair.find(key);
                if (it == by_pair.end()) {
                    continue;
                }
                const CorpusEntry &partner = *it->second;
                auto lhs = expected_value(chart, backend, partner, values);
                lhs *= Coeff(sign);
                const auto rhs = expected_value(dual_chart, backend, *e, dual_values);
                const Comparison cmp = compare(lhs, rhs, opt.tolerance);
                CorpusCheck c{"cross", e->source + " ~ " + partner.source, dual_label.str(), e->omega, e->sigma, k,
                              e->zero && partner.zero, cmp.pass, cmp.residual, {}};
                if (e->zero != partner.zero) {
                    c.pass = false;
                    c.detail = "zero pattern differs between the tables";
                } else if (!cmp.pass) {
                    c.detail = "tabulated products differ after the substitution";
                }
                local.push_back(std::move(c));
            }
            return local;
        });
        out.insert(out.end(), checks.begin(), checks.end());
    }
}

template <class B>
std::vector<CorpusCheck> run_all(const std::vector<CorpusEntry> &entries, const CorpusOptions &opt)
{
    std::map<std::string, std::vector<const CorpusEntry *>> groups;
    for (const auto &e : entries) {
        groups[family_key(e.label)].push_back(&e);
    }
    std::vector<CorpusCheck> out;
    std::uint64_t salt = 0;
    for (const auto &[key, list] : groups) {
        run_entries<B>(list, opt, salt++, out);
    }
    const auto b2 = groups.find("B2");
    const auto c2 = groups.find("C2");
    if (b2 != groups.end() && c2 != groups.end()) {
        run_cross<B>(c2->second, b2->second, opt, out);
    }
    return out;
}

} // namespace

std::vector<CorpusCheck> run_corpus(const std::vector<CorpusEntry> &entries, const CorpusOptions &options)
{
    if (options.points < 1) {
        throw std::invalid_argument("corpus: points must be positive");
    }
    if (entries.empty()) {
        return {};
    }
    if (options.backend == BackendKind::Exact) {
        return run_all<ExactBackend>(entries, options);
    }
    return run_all<ComplexBackend>(entries, options);
}

std::size_t check_chart_naturality(const std::vector<CorpusEntry> &entries, std::uint64_t seed)
{
    std::size_t checked = 0;
    Sampler sampler(seed);
    for (const auto &e : entries) {
        const Chart chart = *chart_for(e.label);
        const auto values = sampler.values<mpq_class>(chart.size());
        const ExactPoint point = chart.to_canonical(values);
        for (const auto &term : e.terms) {
            for (const auto &f : term) {
                for (const ChartMonomial *m : {&f.a, &f.b}) {
                    const auto canon = chart.solve(*m);
                    if (!canon) {
                        throw std::runtime_error(e.source + ": " + chart.format(*m) +
                                                 " is not a monomial in the canonical variables");
                    }
                    if (chart.evaluate(values, *m) != eval_monomial(point, *canon)) {
                        throw std::runtime_error(e.source + ": chart and canonical evaluation differ for " +
                                                 chart.format(*m));
                    }
                    ++checked;
                }
            }
        }
    }
    return checked;
}

template QSeries expected_value(const Chart &, const ExactBackend &, const CorpusEntry &,
                                const std::vector<mpq_class> &);
template std::complex<double> expected_value(const Chart &, const ComplexBackend &, const CorpusEntry &,
                                             const std::vector<std::complex<double>> &);

} // namespace ellschub
