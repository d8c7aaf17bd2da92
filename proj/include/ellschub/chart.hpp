#pragma once

#include "ellschub/elliptic.hpp"
#include "ellschub/rootsys.hpp"

#include <optional>
#include <string>
#include <string_view>
#include <vector>

namespace ellschub {

// Laurent monomial in the variables of a chart (exponent per chart variable).
struct ChartMonomial {
    std::vector<int> exponents;
    friend bool operator==(const ChartMonomial &, const ChartMonomial &) = default;
};

// Coordinates in which tables are written by hand: z_i, mu_i, h for the
// classical groups. Each canonical variable (zeta_s, nu_s, h) is a monomial
// in the chart variables; the converse need not exist (square roots).
class Chart {
public:
    Chart(std::string name, CartanLabel label, std::vector<std::string> variables, std::vector<ChartMonomial> canonical);

    const std::string &name() const { return name_; }
    const CartanLabel &label() const { return label_; }
    int rank() const { return label_.rank; }
    const std::vector<std::string> &variables() const { return vars_; }
    std::size_t size() const { return vars_.size(); }
    int variable_index(std::string_view name) const; // -1 if unknown

    // The chart monomial for canonical slot `slot` (layout of VariableLayout).
    const ChartMonomial &canonical(int slot) const { return canonical_.at(static_cast<std::size_t>(slot)); }

    // Parses products and quotients of variables with integer powers:
    // "mu1^2", "z2/z1", "1/(zb1*zb2)", "h". Throws std::invalid_argument.
    ChartMonomial parse(std::string_view text) const;
    std::string format(const ChartMonomial &m) const;

    template <class Coeff>
    Coeff evaluate(const std::vector<Coeff> &values, const ChartMonomial &m) const;

    template <class Coeff>
    EvalPoint<Coeff> to_canonical(const std::vector<Coeff> &values) const;

    // Canonical exponents c with prod canonical(slot)^{c_slot} = m, if integral.
    std::optional<Monomial> solve(const ChartMonomial &m) const;

private:
    std::string name_;
    CartanLabel label_;
    std::vector<std::string> vars_;
    std::vector<ChartMonomial> canonical_;
};

// SL_{n+1} for A_n, SO(5) for B2, Sp(2) for C2 (barred names zb_i, mub_i).
std::optional<Chart> chart_for(const CartanLabel &label);
std::vector<std::string> chart_names();

} // namespace ellschub
