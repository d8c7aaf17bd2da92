#pragma once

#include "ellschub/campaign.hpp"
#include "ellschub/chart.hpp"
#include "ellschub/classes.hpp"
#include "ellschub/corpus.hpp"

#include <json.hpp>

#include <string>
#include <vector>

namespace ellschub {

using Json = nlohmann::ordered_json;

Json word_to_json(const Word &w); // 1-based letters
Json scalar_to_json(const std::complex<double> &v); // [re, im]
Json scalar_to_json(const QSeries &v);              // ["c0", "c1", ...] rational strings
Json scalar_to_json(const mpq_class &v);            // "p/q"
Json context_to_json(const QContext &ctx);

template <class Coeff>
Json point_to_json(const EvalPoint<Coeff> &p);

// Chart coordinates by variable name.
template <class Coeff>
Json chart_point_to_json(const Chart &chart, const std::vector<Coeff> &values);

template <class B>
Json table_to_json(const ClassTable<B> &t, const QContext &ctx);

// Formatting helpers shared by the csv and pretty writers.
std::string scalar_to_text(const std::complex<double> &v);
std::string scalar_to_text(const QSeries &v);

template <class B>
std::string table_to_csv(const ClassTable<B> &t);
template <class B>
std::string table_to_pretty(const ClassTable<B> &t);

Json record_to_json(const CheckRecord &r, const CampaignOptions &opt);
Json corpus_check_to_json(const CorpusCheck &c, const CorpusOptions &opt);

} // namespace ellschub
