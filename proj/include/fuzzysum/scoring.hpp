#ifndef FUZZYSUM_SCORING_HPP
#define FUZZYSUM_SCORING_HPP

#include <array>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "fuzzysum/features.hpp"
#include "fuzzysum/fuzzy.hpp"

namespace fuzzysum {

enum class Method { Gsm, Fuzzy, Baseline };

std::string method_name(Method method);
std::optional<Method> method_from_name(const std::string& name);

struct ScoredSentence {
    std::size_t sentence_index = 0;
    double score = 0.0;
    Method method = Method::Gsm;
};

// Plain sum of the eight features, optionally weighted.
double score_gsm(const FeatureVector& features);
double score_gsm(const FeatureVector& features, const std::array<double, 8>& weights);

// Crisp inputs for the fuzzy system, keyed by feature name.
std::map<std::string, double> feature_inputs(const FeatureVector& features);

double score_fuzzy(const FuzzySystem& system, const FeatureVector& features);

std::vector<ScoredSentence> score_gsm_all(const std::vector<FeatureVector>& features,
                                          const std::optional<std::array<double, 8>>& weights);
std::vector<ScoredSentence> score_fuzzy_all(const FuzzySystem& system,
                                            const std::vector<FeatureVector>& features);

// Lead order: earlier sentences score higher. Feeds the word-budget
// selector to reproduce a first-N-words summary.
std::vector<ScoredSentence> baseline_scores(std::size_t sentence_count);

} // namespace fuzzysum

#endif
