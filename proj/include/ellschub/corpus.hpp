#pragma once

#include "ellschub/chart.hpp"
#include "ellschub/elliptic.hpp"
#include "ellschub/weyl.hpp"

#include <complex>
#include <cstdint>
#include <filesystem>
#include <iosfwd>
#include <string>
#include <vector>

namespace ellschub {

// One line of a corpus file:
//   TYPE omega sigma [sign] (a|b)(a|b)... [+ (a|b)...]
// omega/sigma are 1-based comma-separated words or "id"; "0" marks a zero entry;
// (a|b) is delta(a, b) with a, b monomials in the chart of TYPE.
struct DeltaFactor {
    ChartMonomial a;
    ChartMonomial b;
};

struct CorpusEntry {
    std::string source; // file:line
    CartanLabel label;
    Word omega;
    Word sigma;
    int sign = 1;
    bool zero = false;
    std::vector<std::vector<DeltaFactor>> terms; // sum of products
    std::string text;
};

// Parses "id" or "1,2,1" into a 0-based word; throws std::invalid_argument.
Word parse_word(const std::string &text, int rank);
std::string format_word(const Word &w); // "id" or "1,2,1"

std::vector<CorpusEntry> parse_corpus(std::istream &in, const std::string &name);
std::vector<CorpusEntry> load_corpus_file(const std::filesystem::path &path);
// All *.txt files of the directory in name order.
std::vector<CorpusEntry> load_corpus_dir(const std::filesystem::path &dir);

// sign * sum of products of deltas at the chart point.
template <class B>
typename B::Value expected_value(const Chart &chart, const B &backend, const CorpusEntry &entry,
                                 const std::vector<typename B::Coeff> &chart_values);

struct CorpusOptions {
    BackendKind backend = BackendKind::Exact;
    int qorder = 8;
    std::complex<double> q{0.1, 0.0};
    std::uint64_t seed = 1;
    int points = 3;
    double tolerance = 1e-9;
};

struct CorpusCheck {
    std::string kind; // "entry" or "cross"
    std::string source;
    std::string type;
    Word omega;
    Word sigma;
    int point = 0;
    bool zero = false;
    bool pass = false;
    double residual = 0.0;
    std::string detail;
};

// Engine vs corpus for every entry at `points` seeded chart points, then the
// chart-level duality between the B2 and C2 entries:
//   G^v entry (omega, sigma) at (zb, mub, h) against the G entry
//   (tau0 sigma^{-1}, tau0 omega^{-1}) at z_i = 1/mub_i, mu_i = 1/zb_i, h -> 1/h.
std::vector<CorpusCheck> run_corpus(const std::vector<CorpusEntry> &entries, const CorpusOptions &options);

// Chart naturality: each chart monomial of every factor, evaluated in chart
// coordinates, equals its canonical expression evaluated at the mapped point.
// Returns the number of monomials checked; throws std::runtime_error on mismatch.
std::size_t check_chart_naturality(const std::vector<CorpusEntry> &entries, std::uint64_t seed);

} // namespace ellschub
