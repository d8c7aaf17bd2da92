#include "ellschub/campaign.hpp"

#include "ellschub/classes.hpp"
#include "ellschub/duality.hpp"
#include "ellschub/residual.hpp"
#include "ellschub/sampling.hpp"

#include <algorithm>
#include <stdexcept>

namespace ellschub {

const char *to_string(CampaignKind k)
{
    switch (k) {
    case CampaignKind::Duality: return "duality";
    case CampaignKind::Recursions: return "recursions";
    case CampaignKind::Normalization: return "normalization";
    case CampaignKind::DoubleDual: return "double-dual";
    }
    return "?";
}

CampaignKind parse_campaign_kind(const std::string &text)
{
    for (auto k : {CampaignKind::Duality, CampaignKind::Recursions, CampaignKind::Normalization,
                   CampaignKind::DoubleDual}) {
        if (text == to_string(k)) {
            return k;
        }
    }
    throw std::invalid_argument("unknown verification kind '" + text + "'");
}

std::size_t CampaignReport::failures() const
{
    return static_cast<std::size_t>(std::count_if(records.begin(), records.end(), [](const CheckRecord &r) { return !r.pass; }));
}

namespace {

template <class B>
B make_backend(const CampaignOptions &o)
{
    if constexpr (std::is_same_v<B, ExactBackend>) {
        return ExactBackend(QContext::exact(o.qorder));
    } else {
        return ComplexBackend(QContext::complex(o.q));
    }
}

struct Context {
    const CampaignOptions &opt;
    WeylGroupPtr W;
    std::string type;
    std::string dual_type;
    int point = 0;

    CheckRecord record(const char *check) const
    {
        CheckRecord r;
        r.check = check;
        r.type = type;
        r.dual_type = dual_type;
        r.point = point;
        return r;
    }
};

template <class B>
void push(std::vector<CheckRecord> &out, CheckRecord r, const typename B::Value &lhs, const typename B::Value &rhs,
          double tolerance)
{
    const Comparison c = compare(lhs, rhs, tolerance);
    r.pass = c.pass;
    r.residual = c.residual;
    out.push_back(std::move(r));
}

template <class B>
std::vector<CheckRecord> duality_at(const Context &ctx, const B &backend, Sampler &s)
{
    const DualitySubstitution sub(ctx.W);
    const auto p = s.point<typename B::Coeff>(ctx.W->rank());
    int sign = duality_sign(*ctx.W);
    if (ctx.opt.flip_sign) {
        sign = -sign;
    }
    std::vector<CheckRecord> out;
    for (const auto &r : duality_residuals(sub, backend, p, sign)) {
        CheckRecord rec = ctx.record("duality");
        rec.omega = ctx.W->reduced_word(r.omega);
        rec.sigma = ctx.W->reduced_word(r.sigma);
        push<B>(out, std::move(rec), r.lhs, r.rhs, ctx.opt.tolerance);
    }
    return out;
}

template <class B>
std::vector<CheckRecord> recursions_at(const Context &ctx, const B &backend, Sampler &s)
{
    const WeylGroup &W = *ctx.W;
    const auto p = s.point<typename B::Coeff>(W.rank());
    std::vector<CheckRecord> out;
    for (ElementId omega = 0; omega < W.order(); ++omega) {
        const Word word = W.reduced_word(omega);
        const auto table = bs_table(ctx.W, backend, word, p);
        RMatrixEvaluator<B> rm(ctx.W, backend, word, p);
        for (ElementId sigma = 0; sigma < W.order(); ++sigma) {
            CheckRecord rec = ctx.record("bs-vs-rmatrix");
            rec.omega = word;
            rec.sigma = W.reduced_word(sigma);
            push<B>(out, std::move(rec), table.at(sigma), rm(sigma), ctx.opt.tolerance);
        }
        // other reduced words of omega, at most three
        auto words = W.reduced_words(omega);
        words.erase(std::remove(words.begin(), words.end(), word), words.end());
        if (words.size() > 3) {
            words.resize(3);
        }
        for (const auto &alt : words) {
            const auto other = bs_table(ctx.W, backend, alt, p);
            CheckRecord rec = ctx.record("word-independence");
            rec.omega = word;
            rec.word = alt;
            rec.pass = true;
            for (ElementId sigma = 0; sigma < W.order(); ++sigma) {
                const Comparison c = compare(table.at(sigma), other.at(sigma), ctx.opt.tolerance);
                rec.pass = rec.pass && c.pass;
                rec.residual = std::max(rec.residual, c.residual);
            }
            out.push_back(std::move(rec));
        }
    }
    return out;
}

template <class B>
std::vector<CheckRecord> normalization_at(const Context &ctx, const B &backend, Sampler &s)
{
    const WeylGroup &W = *ctx.W;
    const auto p = s.point<typename B::Coeff>(W.rank());
    const double tol = ctx.opt.tolerance;
    const DualitySubstitution sub(ctx.W);
    std::vector<CheckRecord> out;
    for (ElementId omega = 0; omega < W.order(); ++omega) {
        const Word word = W.reduced_word(omega);
        for (int si = 0; si < W.rank(); ++si) {
            for (const char *name : {"right-normalization", "left-normalization"}) {
                const bool right = name[0] == 'r';
                const auto sides = right ? right_normalization_check(W, backend, omega, si, p)
                                         : left_normalization_check(W, backend, omega, si, p);
                CheckRecord rec = ctx.record(name);
                rec.omega = word;
                rec.simple = si;
                push<B>(out, std::move(rec), sides.lhs, sides.rhs, tol);
            }
            if (ctx.point == 0) {
                CheckRecord rec = ctx.record("tangent-sets");
                rec.omega = word;
                rec.simple = si;
                rec.pass = check_tangent_recurrences(W, omega, si).all();
                rec.residual = rec.pass ? 0.0 : 1.0;
                out.push_back(std::move(rec));
            }
        }

        const auto normalized = bs_table(ctx.W, backend, word, p);
        const auto unnormalized = unnormalized_table(ctx.W, backend, word, p);
        const auto c = normalization_factor(W, backend, omega, p);
        for (ElementId sigma = 0; sigma < W.order(); ++sigma) {
            auto rhs = c;
            rhs *= unnormalized.at(sigma);
            CheckRecord rec = ctx.record("c-times-E");
            rec.omega = word;
            rec.sigma = W.reduced_word(sigma);
            push<B>(out, std::move(rec), normalized.at(sigma), rhs, tol);
        }
        {
            CheckRecord rec = ctx.record("diagonal");
            rec.omega = word;
            rec.sigma = word;
            push<B>(out, std::move(rec), unnormalized.at(omega), diagonal_closed_form(W, backend, omega, p), tol);
        }
        {
            const auto sides = f_interpretation_check(sub, backend, omega, p);
            CheckRecord rec = ctx.record("f-interpretation");
            rec.omega = word;
            push<B>(out, std::move(rec), sides.lhs, sides.rhs, tol);
        }
    }
    const auto em = em_table(ctx.W, backend, {}, p);
    CheckRecord rec = ctx.record("em-identity");
    rec.omega = Word{};
    rec.sigma = Word{};
    push<B>(out, std::move(rec), em.at(W.identity()), backend.one(), tol);
    return out;
}

template <class B>
std::vector<CheckRecord> double_dual_at(const Context &ctx, const B &backend, Sampler &s)
{
    const auto p = s.point<typename B::Coeff>(ctx.W->rank());
    std::vector<CheckRecord> out;
    for (const auto &r : double_dual_residuals(ctx.W, backend, p)) {
        CheckRecord rec = ctx.record("double-dual");
        rec.omega = ctx.W->reduced_word(r.omega);
        rec.sigma = ctx.W->reduced_word(r.sigma);
        push<B>(out, std::move(rec), r.lhs, r.rhs, ctx.opt.tolerance);
    }
    return out;
}

template <class B>
CampaignReport run(CampaignKind kind, const CampaignOptions &opt)
{
    CampaignReport report;
    report.kind = kind;
    report.options = opt;
    const B backend = make_backend<B>(opt);
    Context ctx{opt, make_weyl_group(opt.label), opt.label.str(), {}, 0};
    if (kind == CampaignKind::Duality) {
        ctx.dual_type = langlands_dual(ctx.W->root_system()).label().str();
    }
    for (int k = 0; k < opt.points; ++k) {
        ctx.point = k;
        Sampler sampler(opt.seed * 1000003ULL + static_cast<std::uint64_t>(k));
        auto records = with_resampling(sampler, [&](Sampler &s) {
            switch (kind) {
            case CampaignKind::Duality: return duality_at(ctx, backend, s);
            case CampaignKind::Recursions: return recursions_at(ctx, backend, s);
            case CampaignKind::Normalization: return normalization_at(ctx, backend, s);
            case CampaignKind::DoubleDual: return double_dual_at(ctx, backend, s);
            }
            return std::vector<CheckRecord>{};
        });
        report.records.insert(report.records.end(), std::make_move_iterator(records.begin()),
                              std::make_move_iterator(records.end()));
    }
    return report;
}

} // namespace

CampaignReport run_campaign(CampaignKind kind, const CampaignOptions &options)
{
    options.label.validate();
    if (options.points < 1) {
        throw std::invalid_argument("points must be positive");
    }
    if (options.backend == BackendKind::Exact) {
        return run<ExactBackend>(kind, options);
    }
    return run<ComplexBackend>(kind, options);
}

} // namespace ellschub
