#include "fuzzysum/scoring.hpp"

namespace fuzzysum {

std::string method_name(Method method) {
    switch (method) {
        case Method::Gsm: return "gsm";
        case Method::Fuzzy: return "fuzzy";
        case Method::Baseline: return "baseline";
    }
    return "unknown";
}

std::optional<Method> method_from_name(const std::string& name) {
    if (name == "gsm") return Method::Gsm;
    if (name == "fuzzy") return Method::Fuzzy;
    if (name == "baseline") return Method::Baseline;
    return std::nullopt;
}

double score_gsm(const FeatureVector& features) {
    double sum = 0.0;
    for (double f : features.as_array()) sum += f;
    return sum;
}

double score_gsm(const FeatureVector& features, const std::array<double, 8>& weights) {
    const auto values = features.as_array();
    double sum = 0.0;
    for (std::size_t i = 0; i < values.size(); ++i) sum += weights[i] * values[i];
    return sum;
}

std::map<std::string, double> feature_inputs(const FeatureVector& features) {
    std::map<std::string, double> inputs;
    const auto values = features.as_array();
    for (std::size_t i = 0; i < values.size(); ++i) inputs[feature_names()[i]] = values[i];
    return inputs;
}

double score_fuzzy(const FuzzySystem& system, const FeatureVector& features) {
    return system.evaluate(feature_inputs(features));
}

std::vector<ScoredSentence> score_gsm_all(const std::vector<FeatureVector>& features,
                                          const std::optional<std::array<double, 8>>& weights) {
    std::vector<ScoredSentence> scores;
    scores.reserve(features.size());
    for (std::size_t i = 0; i < features.size(); ++i) {
        const double s = weights ? score_gsm(features[i], *weights) : score_gsm(features[i]);
        scores.push_back({i, s, Method::Gsm});
    }
    return scores;
}

std::vector<ScoredSentence> score_fuzzy_all(const FuzzySystem& system,
                                            const std::vector<FeatureVector>& features) {
    std::vector<ScoredSentence> scores;
    scores.reserve(features.size());
    for (std::size_t i = 0; i < features.size(); ++i)
        scores.push_back({i, score_fuzzy(system, features[i]), Method::Fuzzy});
    return scores;
}

std::vector<ScoredSentence> baseline_scores(std::size_t sentence_count) {
    std::vector<ScoredSentence> scores;
    scores.reserve(sentence_count);
    for (std::size_t i = 0; i < sentence_count; ++i)
        scores.push_back({i, double(sentence_count - i), Method::Baseline});
    return scores;
}

} // namespace fuzzysum
