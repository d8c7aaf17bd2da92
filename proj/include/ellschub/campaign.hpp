#pragma once

#include "ellschub/elliptic.hpp"
#include "ellschub/rootsys.hpp"
#include "ellschub/weyl.hpp"

#include <complex>
#include <cstdint>
#include <optional>
#include <string>
#include <vector>

namespace ellschub {

enum class CampaignKind { Duality, Recursions, Normalization, DoubleDual };

const char *to_string(CampaignKind k);
// "duality", "recursions", "normalization", "double-dual"; throws std::invalid_argument.
CampaignKind parse_campaign_kind(const std::string &text);

struct CampaignOptions {
    CartanLabel label;
    BackendKind backend = BackendKind::Exact;
    int qorder = 8;
    std::complex<double> q{0.1, 0.0};
    int points = 3;
    std::uint64_t seed = 1;
    double tolerance = 1e-9;
    bool flip_sign = false; // duality: negative control
};

struct CheckRecord {
    std::string check; // e.g. "duality", "bs-vs-rmatrix", "right-normalization"
    std::string type;
    std::string dual_type;
    std::optional<Word> omega;
    std::optional<Word> sigma;
    std::optional<int> simple; // 0-based
    std::optional<Word> word;  // alternative word (word independence)
    int point = 0;
    bool pass = false;
    double residual = 0.0;
};

struct CampaignReport {
    CampaignKind kind = CampaignKind::Duality;
    CampaignOptions options;
    std::vector<CheckRecord> records;

    std::size_t failures() const;
    bool ok() const { return failures() == 0; }
};

// Every (omega, sigma) pair (or (omega, s) pair) of the type at `points`
// seeded points. Points are resampled when singular.
CampaignReport run_campaign(CampaignKind kind, const CampaignOptions &options);

} // namespace ellschub
