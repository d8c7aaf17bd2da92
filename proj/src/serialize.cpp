#include "ellschub/serialize.hpp"

#include "ellschub/residual.hpp"

#include <iomanip>
#include <sstream>

namespace ellschub {

Json word_to_json(const Word &w)
{
    Json a = Json::array();
    for (int i : w) {
        a.push_back(i + 1);
    }
    return a;
}

Json scalar_to_json(const std::complex<double> &v)
{
    return Json::array({v.real(), v.imag()});
}

Json scalar_to_json(const QSeries &v)
{
    Json a = Json::array();
    for (const auto &c : v.coefficients()) {
        a.push_back(to_string(c));
    }
    return a;
}

Json scalar_to_json(const mpq_class &v)
{
    return to_string(v);
}

Json context_to_json(const QContext &ctx)
{
    Json j;
    if (ctx.backend == BackendKind::Exact) {
        j["backend"] = "exact";
        j["qorder"] = ctx.order;
    } else {
        j["backend"] = "complex";
        j["q"] = scalar_to_json(ctx.q);
    }
    return j;
}

template <class Coeff>
Json point_to_json(const EvalPoint<Coeff> &p)
{
    Json j = Json::object();
    const VariableLayout L = p.layout();
    for (int slot = 0; slot < L.size(); ++slot) {
        j[L.name(slot)] = scalar_to_json(p[slot]);
    }
    return j;
}

template <class Coeff>
Json chart_point_to_json(const Chart &chart, const std::vector<Coeff> &values)
{
    Json j = Json::object();
    for (std::size_t i = 0; i < values.size(); ++i) {
        j[chart.variables()[i]] = scalar_to_json(values[i]);
    }
    return j;
}

template <class B>
Json table_to_json(const ClassTable<B> &t, const QContext &ctx)
{
    const WeylGroup &W = *t.group;
    double scale = 0.0;
    for (const auto &v : t.values) {
        scale = std::max(scale, magnitude(v));
    }
    Json j;
    j["type"] = W.root_system().label().str();
    j["word"] = word_to_json(t.word);
    j["omega_word"] = word_to_json(W.reduced_word(t.omega));
    j["normalization"] = to_string(t.normalization);
    j["context"] = context_to_json(ctx);
    j["point"] = point_to_json(t.point);
    Json entries = Json::array();
    for (ElementId sigma = 0; sigma < W.order(); ++sigma) {
        Json e;
        e["sigma_word"] = word_to_json(W.reduced_word(sigma));
        e["value"] = scalar_to_json(t.values[sigma]);
        e["zero"] = is_negligible(t.values[sigma], scale);
        entries.push_back(std::move(e));
    }
    j["entries"] = std::move(entries);
    return j;
}

namespace {

std::string word_text(const Word &w)
{
    if (w.empty()) {
        return "id";
    }
    std::string s;
    for (int i : w) {
        s += "s" + std::to_string(i + 1);
    }
    return s;
}

std::string word_csv(const Word &w)
{
    if (w.empty()) {
        return "id";
    }
    std::string s;
    for (std::size_t k = 0; k < w.size(); ++k) {
        s += (k ? " " : "") + std::to_string(w[k] + 1);
    }
    return s;
}

} // namespace

std::string scalar_to_text(const std::complex<double> &v)
{
    std::ostringstream os;
    os << std::setprecision(17) << v.real() << (v.imag() < 0 ? " - " : " + ") << std::abs(v.imag()) << "i";
    return os.str();
}

std::string scalar_to_text(const QSeries &v)
{
    std::ostringstream os;
    os << v;
    return os.str();
}

template <class B>
std::string table_to_csv(const ClassTable<B> &t)
{
    const WeylGroup &W = *t.group;
    std::ostringstream os;
    os << std::setprecision(17);
    if constexpr (std::is_same_v<typename B::Value, QSeries>) {
        os << "sigma";
        const int n = t.values.empty() ? 0 : t.values.front().order();
        for (int k = 0; k <= n; ++k) {
            os << ",q" << k;
        }
        os << '\n';
        for (ElementId sigma = 0; sigma < W.order(); ++sigma) {
            os << word_csv(W.reduced_word(sigma));
            for (const auto &c : t.values[sigma].coefficients()) {
                os << ',' << to_string(c);
            }
            os << '\n';
        }
    } else {
        os << "sigma,re,im\n";
        for (ElementId sigma = 0; sigma < W.order(); ++sigma) {
            os << word_csv(W.reduced_word(sigma)) << ',' << t.values[sigma].real() << ',' << t.values[sigma].imag()
               << '\n';
        }
    }
    return os.str();
}

template <class B>
std::string table_to_pretty(const ClassTable<B> &t)
{
    const WeylGroup &W = *t.group;
    std::ostringstream os;
    os << W.root_system().label().str() << "  omega = " << word_text(W.reduced_word(t.omega)) << "  ("
       << to_string(t.normalization) << ", word " << word_text(t.word) << ")\n";
    std::size_t width = 5;
    for (ElementId sigma = 0; sigma < W.order(); ++sigma) {
        width = std::max(width, word_text(W.reduced_word(sigma)).size());
    }
    for (ElementId sigma = 0; sigma < W.order(); ++sigma) {
        os << "  " << std::left << std::setw(static_cast<int>(width)) << word_text(W.reduced_word(sigma)) << "  "
           << scalar_to_text(t.values[sigma]) << '\n';
    }
    return os.str();
}

namespace {

void put_backend(Json &j, BackendKind backend, int qorder, std::complex<double> q)
{
    if (backend == BackendKind::Exact) {
        j["backend"] = "exact";
        j["qorder"] = qorder;
    } else {
        j["backend"] = "complex";
        j["q"] = scalar_to_json(q);
    }
}

} // namespace

Json record_to_json(const CheckRecord &r, const CampaignOptions &opt)
{
    Json j;
    j["check"] = r.check;
    j["type"] = r.type;
    if (!r.dual_type.empty()) {
        j["dual_type"] = r.dual_type;
    }
    if (r.omega) {
        j["omega_word"] = word_to_json(*r.omega);
    }
    if (r.sigma) {
        j["sigma_word"] = word_to_json(*r.sigma);
    }
    if (r.simple) {
        j["s"] = *r.simple + 1;
    }
    if (r.word) {
        j["word"] = word_to_json(*r.word);
    }
    put_backend(j, opt.backend, opt.qorder, opt.q);
    j["point"] = r.point;
    j["residual"] = r.residual;
    j["pass"] = r.pass;
    return j;
}

Json corpus_check_to_json(const CorpusCheck &c, const CorpusOptions &opt)
{
    Json j;
    j["check"] = c.kind;
    j["source"] = c.source;
    j["type"] = c.type;
    j["omega_word"] = word_to_json(c.omega);
    j["sigma_word"] = word_to_json(c.sigma);
    j["zero"] = c.zero;
    put_backend(j, opt.backend, opt.qorder, opt.q);
    j["point"] = c.point;
    j["residual"] = c.residual;
    j["pass"] = c.pass;
    if (!c.detail.empty()) {
        j["detail"] = c.detail;
    }
    return j;
}

template Json point_to_json(const ExactPoint &);
template Json point_to_json(const ComplexPoint &);
template Json chart_point_to_json(const Chart &, const std::vector<mpq_class> &);
template Json chart_point_to_json(const Chart &, const std::vector<std::complex<double>> &);
template Json table_to_json(const ClassTable<ExactBackend> &, const QContext &);
template Json table_to_json(const ClassTable<ComplexBackend> &, const QContext &);
template std::string table_to_csv(const ClassTable<ExactBackend> &);
template std::string table_to_csv(const ClassTable<ComplexBackend> &);
template std::string table_to_pretty(const ClassTable<ExactBackend> &);
template std::string table_to_pretty(const ClassTable<ComplexBackend> &);

} // namespace ellschub
