#include "ellschub/chart.hpp"

#include <gmpxx.h>

#include <cctype>
#include <complex>
#include <sstream>
#include <stdexcept>

namespace ellschub {

Chart::Chart(std::string name, CartanLabel label, std::vector<std::string> variables,
             std::vector<ChartMonomial> canonical)
    : name_(std::move(name)), label_(label), vars_(std::move(variables)), canonical_(std::move(canonical))
{
    if (canonical_.size() != static_cast<std::size_t>(2 * label_.rank + 1)) {
        throw std::invalid_argument("chart " + name_ + ": wrong number of canonical monomials");
    }
    for (const auto &m : canonical_) {
        if (m.exponents.size() != vars_.size()) {
            throw std::invalid_argument("chart " + name_ + ": monomial length mismatch");
        }
    }
}

int Chart::variable_index(std::string_view name) const
{
    for (std::size_t i = 0; i < vars_.size(); ++i) {
        if (vars_[i] == name) {
            return static_cast<int>(i);
        }
    }
    return -1;
}

namespace {

class Parser {
public:
    Parser(const Chart &chart, std::string_view text) : chart_(chart), text_(text) {}

    ChartMonomial run()
    {
        ChartMonomial m = expr();
        skip();
        if (pos_ != text_.size()) {
            fail("unexpected '" + std::string(1, text_[pos_]) + "'");
        }
        return m;
    }

private:
    ChartMonomial expr()
    {
        ChartMonomial acc = power();
        for (;;) {
            skip();
            if (pos_ >= text_.size() || (text_[pos_] != '*' && text_[pos_] != '/')) {
                return acc;
            }
            const int sign = text_[pos_++] == '*' ? 1 : -1;
            const ChartMonomial rhs = power();
            for (std::size_t i = 0; i < acc.exponents.size(); ++i) {
                acc.exponents[i] += sign * rhs.exponents[i];
            }
        }
    }

    ChartMonomial power()
    {
        ChartMonomial base = atom();
        skip();
        if (pos_ < text_.size() && text_[pos_] == '^') {
            ++pos_;
            const int e = integer();
            for (int &x : base.exponents) {
                x *= e;
            }
        }
        return base;
    }

    ChartMonomial atom()
    {
        skip();
        ChartMonomial m{std::vector<int>(chart_.size(), 0)};
        if (pos_ >= text_.size()) {
            fail("unexpected end");
        }
        const char c = text_[pos_];
        if (c == '(') {
            ++pos_;
            m = expr();
            skip();
            if (pos_ >= text_.size() || text_[pos_] != ')') {
                fail("missing ')'");
            }
            ++pos_;
            return m;
        }
        if (c == '1') {
            ++pos_;
            return m;
        }
        if (std::isalpha(static_cast<unsigned char>(c))) {
            const std::size_t start = pos_;
            while (pos_ < text_.size() && std::isalnum(static_cast<unsigned char>(text_[pos_]))) {
                ++pos_;
            }
            const std::string_view name = text_.substr(start, pos_ - start);
            const int idx = chart_.variable_index(name);
            if (idx < 0) {
                fail("unknown variable '" + std::string(name) + "'");
            }
            m.exponents[static_cast<std::size_t>(idx)] = 1;
            return m;
        }
        fail("unexpected '" + std::string(1, c) + "'");
        return m;
    }

    int integer()
    {
        skip();
        int sign = 1;
        if (pos_ < text_.size() && text_[pos_] == '-') {
            sign = -1;
            ++pos_;
        }
        const std::size_t start = pos_;
        while (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_]))) {
            ++pos_;
        }
        if (start == pos_) {
            fail("expected exponent");
        }
        return sign * std::stoi(std::string(text_.substr(start, pos_ - start)));
    }

    void skip()
    {
        while (pos_ < text_.size() && std::isspace(static_cast<unsigned char>(text_[pos_]))) {
            ++pos_;
        }
    }

    [[noreturn]] void fail(const std::string &what) const
    {
        throw std::invalid_argument("monomial '" + std::string(text_) + "' (" + chart_.name() + "): " + what);
    }

    const Chart &chart_;
    std::string_view text_;
    std::size_t pos_ = 0;
};

} // namespace

ChartMonomial Chart::parse(std::string_view text) const
{
    return Parser(*this, text).run();
}

std::string Chart::format(const ChartMonomial &m) const
{
    std::ostringstream num;
    std::ostringstream den;
    int nden = 0;
    for (std::size_t i = 0; i < vars_.size(); ++i) {
        const int e = m.exponents[i];
        if (e == 0) {
            continue;
        }
        std::ostringstream &os = e > 0 ? num : den;
        if (os.tellp() > 0) {
            os << '*';
        }
        os << vars_[i];
        if (std::abs(e) != 1) {
            os << '^' << std::abs(e);
        }
        if (e < 0) {
            ++nden;
        }
    }
    std::string out = num.str().empty() ? "1" : num.str();
    if (nden == 1) {
        out += "/" + den.str();
    } else if (nden > 1) {
        out += "/(" + den.str() + ")";
    }
    return out;
}

template <class Coeff>
Coeff Chart::evaluate(const std::vector<Coeff> &values, const ChartMonomial &m) const
{
    if (values.size() != vars_.size()) {
        throw std::invalid_argument("chart " + name_ + ": wrong number of values");
    }
    Coeff acc(1);
    for (std::size_t i = 0; i < values.size(); ++i) {
        const int e = m.exponents[i];
        for (int k = 0; k < std::abs(e); ++k) {
            if (e > 0) {
                acc *= values[i];
            } else {
                acc /= values[i];
            }
        }
    }
    return acc;
}

template <class Coeff>
EvalPoint<Coeff> Chart::to_canonical(const std::vector<Coeff> &values) const
{
    std::vector<Coeff> v;
    v.reserve(canonical_.size());
    for (const auto &m : canonical_) {
        v.push_back(evaluate(values, m));
    }
    return EvalPoint<Coeff>(rank(), std::move(v));
}

std::optional<Monomial> Chart::solve(const ChartMonomial &m) const
{
    // Columns: canonical slots; rows: chart variables.
    const std::size_t rows = vars_.size();
    const std::size_t cols = canonical_.size();
    std::vector<std::vector<mpq_class>> a(rows, std::vector<mpq_class>(cols + 1));
    for (std::size_t i = 0; i < rows; ++i) {
        for (std::size_t j = 0; j < cols; ++j) {
            a[i][j] = canonical_[j].exponents[i];
        }
        a[i][cols] = m.exponents.at(i);
    }
    std::vector<std::size_t> pivot_col;
    std::size_t r = 0;
    for (std::size_t c = 0; c < cols && r < rows; ++c) {
        std::size_t p = r;
        while (p < rows && a[p][c] == 0) {
            ++p;
        }
        if (p == rows) {
            continue;
        }
        std::swap(a[p], a[r]);
        const mpq_class inv = 1 / a[r][c];
        for (auto &x : a[r]) {
            x *= inv;
        }
        for (std::size_t i = 0; i < rows; ++i) {
            if (i != r && a[i][c] != 0) {
                const mpq_class f = a[i][c];
                for (std::size_t j = c; j <= cols; ++j) {
                    a[i][j] -= f * a[r][j];
                }
            }
        }
        pivot_col.push_back(c);
        ++r;
    }
    for (std::size_t i = r; i < rows; ++i) {
        if (a[i][cols] != 0) {
            return std::nullopt;
        }
    }
    std::vector<int> e(cols, 0);
    for (std::size_t i = 0; i < r; ++i) {
        const mpq_class &x = a[i][cols];
        if (x.get_den() != 1) {
            return std::nullopt;
        }
        e[pivot_col[i]] = static_cast<int>(x.get_num().get_si());
    }
    return Monomial(rank(), std::move(e));
}

namespace {

ChartMonomial mono(std::size_t n, std::initializer_list<std::pair<std::size_t, int>> terms)
{
    ChartMonomial m{std::vector<int>(n, 0)};
    for (auto [i, e] : terms) {
        m.exponents[i] += e;
    }
    return m;
}

Chart sl_chart(int n)
{
    // z_1..z_{n+1}, mu_1..mu_{n+1}, h ; zeta_s = z_{s+1}/z_s, nu_s = mu_{s+1}/mu_s
    std::vector<std::string> vars;
    const std::size_t m = static_cast<std::size_t>(n + 1);
    for (std::size_t i = 1; i <= m; ++i) {
        vars.push_back("z" + std::to_string(i));
    }
    for (std::size_t i = 1; i <= m; ++i) {
        vars.push_back("mu" + std::to_string(i));
    }
    vars.push_back("h");
    const std::size_t N = vars.size();
    std::vector<ChartMonomial> can;
    for (std::size_t s = 0; s < static_cast<std::size_t>(n); ++s) {
        can.push_back(mono(N, {{s + 1, 1}, {s, -1}}));
    }
    for (std::size_t s = 0; s < static_cast<std::size_t>(n); ++s) {
        can.push_back(mono(N, {{m + s + 1, 1}, {m + s, -1}}));
    }
    can.push_back(mono(N, {{N - 1, 1}}));
    return Chart("SL" + std::to_string(n + 1), CartanLabel{'A', n}, std::move(vars), std::move(can));
}

Chart so5_chart()
{
    // zeta1 = z2/z1, zeta2 = 1/z2, nu1 = mu2/mu1, nu2 = 1/mu2^2
    const std::size_t N = 5;
    return Chart("SO5", CartanLabel{'B', 2}, {"z1", "z2", "mu1", "mu2", "h"},
                 {mono(N, {{1, 1}, {0, -1}}), mono(N, {{1, -1}}), mono(N, {{3, 1}, {2, -1}}), mono(N, {{3, -2}}),
                  mono(N, {{4, 1}})});
}

Chart sp2_chart()
{
    // zeta1 = zb2/zb1, zeta2 = 1/zb2^2, nu1 = mub2/mub1, nu2 = 1/mub2
    const std::size_t N = 5;
    return Chart("Sp2", CartanLabel{'C', 2}, {"zb1", "zb2", "mub1", "mub2", "h"},
                 {mono(N, {{1, 1}, {0, -1}}), mono(N, {{1, -2}}), mono(N, {{3, 1}, {2, -1}}), mono(N, {{3, -1}}),
                  mono(N, {{4, 1}})});
}

} // namespace

std::optional<Chart> chart_for(const CartanLabel &label)
{
    if (label.family == 'A') {
        return sl_chart(label.rank);
    }
    if (label.family == 'B' && label.rank == 2) {
        return so5_chart();
    }
    if (label.family == 'C' && label.rank == 2) {
        return sp2_chart();
    }
    return std::nullopt;
}

std::vector<std::string> chart_names()
{
    return {"SL(n+1) for An", "SO5 for B2", "Sp2 for C2"};
}

template mpq_class Chart::evaluate(const std::vector<mpq_class> &, const ChartMonomial &) const;
template std::complex<double> Chart::evaluate(const std::vector<std::complex<double>> &, const ChartMonomial &) const;
template ExactPoint Chart::to_canonical(const std::vector<mpq_class> &) const;
template ComplexPoint Chart::to_canonical(const std::vector<std::complex<double>> &) const;

} // namespace ellschub
