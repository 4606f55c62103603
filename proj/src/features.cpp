#include "fuzzysum/features.hpp"

#include <algorithm>
#include <cmath>
#include <map>

namespace fuzzysum {

const std::array<std::string, 8>& feature_names() {
    static const std::array<std::string, 8> names = {
        "f1_title",      "f2_length",  "f3_term_weight", "f4_position",
        "f5_similarity", "f6_proper_noun", "f7_thematic", "f8_numeric",
    };
    return names;
}

TermWeightTable build_term_weights(const Document& doc) {
    TermWeightTable table;
    table.sentence_count = doc.sentences.size();
    for (const Sentence& s : doc.sentences) {
        std::vector<const std::string*> seen;
        for (const std::string& stem : s.content_stems) {
            auto& e = table.entries[stem];
            ++e.term_frequency;
            if (std::none_of(seen.begin(), seen.end(),
                             [&](const std::string* p) { return *p == stem; })) {
                ++e.sentence_frequency;
                seen.push_back(&stem);
            }
        }
    }
    const double n_sentences = double(table.sentence_count);
    for (auto& [stem, e] : table.entries) {
        e.isf = std::log10(n_sentences / double(e.sentence_frequency));
        e.weight = double(e.term_frequency) * e.isf;
    }
    return table;
}

double score_title(const Sentence& s, const std::vector<std::string>& title_stems) {
    if (title_stems.empty()) return 0.0;
    std::size_t matches = 0;
    for (const std::string& t : title_stems)
        if (std::find(s.content_stems.begin(), s.content_stems.end(), t) !=
            s.content_stems.end())
            ++matches;
    return double(matches) / double(title_stems.size());
}

double score_length(const Sentence& s, std::size_t longest_sentence_word_count) {
    if (longest_sentence_word_count == 0) return 0.0;
    return double(s.tokens.size()) / double(longest_sentence_word_count);
}

double score_position(const Sentence& s) {
    if (s.index_in_paragraph < 5)
        return double(5 - s.index_in_paragraph) / 5.0;
    return 0.0;
}

double term_weight_sum(const Sentence& s, const TermWeightTable& table) {
    double sum = 0.0;
    for (const std::string& stem : s.content_stems) sum += table.weight(stem);
    return sum;
}

double score_term_weight(const Sentence& s, const TermWeightTable& table,
                         double max_sentence_sum) {
    if (max_sentence_sum <= 0.0) return 0.0;
    return term_weight_sum(s, table) / max_sentence_sum;
}

double cosine_similarity(const Sentence& a, const Sentence& b, const TermWeightTable& table) {
    // sorted union keeps the summation order (and thus the result) identical
    // for (a,b) and (b,a) and across platforms
    std::map<std::string, std::pair<std::size_t, std::size_t>> tf;
    for (const std::string& stem : a.content_stems) ++tf[stem].first;
    for (const std::string& stem : b.content_stems) ++tf[stem].second;

    double dot = 0.0, norm_a = 0.0, norm_b = 0.0;
    for (const auto& [stem, counts] : tf) {
        const double isf = table.isf(stem);
        const double wa = double(counts.first) * isf;
        const double wb = double(counts.second) * isf;
        dot += wa * wb;
        norm_a += wa * wa;
        norm_b += wb * wb;
    }
    if (norm_a <= 0.0 || norm_b <= 0.0) return 0.0;
    return dot / (std::sqrt(norm_a) * std::sqrt(norm_b));
}

double similarity_sum(const Sentence& s, const Document& doc, const TermWeightTable& table) {
    double sum = 0.0;
    for (const Sentence& other : doc.sentences)
        if (other.index != s.index) sum += cosine_similarity(s, other, table);
    return sum;
}

double score_similarity(const Sentence& s, const Document& doc, const TermWeightTable& table) {
    if (doc.sentences.size() < 2) return 0.0;
    double max_sum = 0.0;
    for (const Sentence& other : doc.sentences)
        max_sum = std::max(max_sum, similarity_sum(other, doc, table));
    if (max_sum <= 0.0) return 0.0;
    return similarity_sum(s, doc, table) / max_sum;
}

namespace {

bool is_all_caps_acronym(const Token& t) {
    if (t.surface.size() < 2) return false;
    for (char c : t.surface)
        if (c < 'A' || c > 'Z') return false;
    return true;
}

// A sentence-initial capitalized token only counts when the same word shows
// up capitalized mid-sentence somewhere in the document.
bool capitalized_mid_sentence_elsewhere(const std::string& lower, const Document& doc) {
    for (const Sentence& s : doc.sentences)
        for (std::size_t i = 1; i < s.tokens.size(); ++i)
            if (s.tokens[i].is_capitalized && s.tokens[i].lower == lower) return true;
    return false;
}

bool is_proper_noun(const Token& t, std::size_t position, const Document& doc) {
    if (is_all_caps_acronym(t)) return true;
    if (!t.is_capitalized) return false;
    if (position > 0) return true;
    return capitalized_mid_sentence_elsewhere(t.lower, doc);
}

} // namespace

double score_proper_noun(const Sentence& s, const Document& doc) {
    if (s.tokens.empty()) return 0.0;
    std::size_t count = 0;
    for (std::size_t i = 0; i < s.tokens.size(); ++i)
        if (is_proper_noun(s.tokens[i], i, doc)) ++count;
    return double(count) / double(s.tokens.size());
}

double score_numeric(const Sentence& s) {
    if (s.tokens.empty()) return 0.0;
    std::size_t count = 0;
    for (const Token& t : s.tokens)
        if (t.is_numeric) ++count;
    return double(count) / double(s.tokens.size());
}

double thematic_count(const Sentence& s, const Document& doc) {
    std::size_t count = 0;
    for (const std::string& stem : s.content_stems)
        if (std::find(doc.thematic_stems.begin(), doc.thematic_stems.end(), stem) !=
            doc.thematic_stems.end())
            ++count;
    return double(count);
}

double score_thematic(const Sentence& s, const Document& doc, double max_count) {
    if (max_count <= 0.0) return 0.0;
    return thematic_count(s, doc) / max_count;
}

std::vector<FeatureVector> extract_features(const Document& doc) {
    const std::size_t n = doc.sentences.size();
    std::vector<FeatureVector> features(n);

    std::size_t longest = 0;
    for (const Sentence& s : doc.sentences) longest = std::max(longest, s.tokens.size());

    const TermWeightTable table = build_term_weights(doc);

    std::vector<double> weight_sums(n), thematic_counts(n);
    for (std::size_t i = 0; i < n; ++i) {
        weight_sums[i] = term_weight_sum(doc.sentences[i], table);
        thematic_counts[i] = thematic_count(doc.sentences[i], doc);
    }
    const double max_weight_sum = n ? *std::max_element(weight_sums.begin(), weight_sums.end()) : 0.0;
    const double max_thematic = n ? *std::max_element(thematic_counts.begin(), thematic_counts.end()) : 0.0;

    // all-pairs similarity, symmetric
    std::vector<double> sim_sums(n, 0.0);
    for (std::size_t i = 0; i < n; ++i) {
        for (std::size_t j = i + 1; j < n; ++j) {
            const double sim = cosine_similarity(doc.sentences[i], doc.sentences[j], table);
            sim_sums[i] += sim;
            sim_sums[j] += sim;
        }
    }
    const double max_sim_sum = n ? *std::max_element(sim_sums.begin(), sim_sums.end()) : 0.0;

    for (std::size_t i = 0; i < n; ++i) {
        const Sentence& s = doc.sentences[i];
        FeatureVector& f = features[i];
        f.f1_title = score_title(s, doc.title_stems);
        f.f2_length = score_length(s, longest);
        f.f3_term_weight = max_weight_sum > 0.0 ? weight_sums[i] / max_weight_sum : 0.0;
        f.f4_position = score_position(s);
        f.f5_similarity = (n >= 2 && max_sim_sum > 0.0) ? sim_sums[i] / max_sim_sum : 0.0;
        f.f6_proper_noun = score_proper_noun(s, doc);
        f.f7_thematic = score_thematic(s, doc, max_thematic);
        f.f8_numeric = score_numeric(s);
    }
    return features;
}

} // namespace fuzzysum
