#ifndef FUZZYSUM_FEATURES_HPP
#define FUZZYSUM_FEATURES_HPP

#include <array>
#include <string>
#include <unordered_map>
#include <vector>

#include "fuzzysum/text.hpp"

namespace fuzzysum {

// The eight per-sentence scores, each in [0,1].
struct FeatureVector {
    double f1_title = 0.0;
    double f2_length = 0.0;
    double f3_term_weight = 0.0;
    double f4_position = 0.0;   // one of 0, .2, .4, .6, .8, 1
    double f5_similarity = 0.0;
    double f6_proper_noun = 0.0;
    double f7_thematic = 0.0;
    double f8_numeric = 0.0;

    std::array<double, 8> as_array() const {
        return {f1_title, f2_length, f3_term_weight, f4_position,
                f5_similarity, f6_proper_noun, f7_thematic, f8_numeric};
    }
};

// Names used for the fuzzy system inputs and the CSV header, in order.
const std::array<std::string, 8>& feature_names();

// Per-stem tf * log10(N / n) over the document's sentences.
struct TermWeightTable {
    struct Entry {
        std::size_t term_frequency = 0;  // occurrences in the whole document
        std::size_t sentence_frequency = 0; // sentences containing the stem
        double weight = 0.0;             // tf * log10(N / n)
        double isf = 0.0;                // log10(N / n)
    };
    std::size_t sentence_count = 0;
    std::unordered_map<std::string, Entry> entries;

    double weight(const std::string& stem) const {
        auto it = entries.find(stem);
        return it == entries.end() ? 0.0 : it->second.weight;
    }
    double isf(const std::string& stem) const {
        auto it = entries.find(stem);
        return it == entries.end() ? 0.0 : it->second.isf;
    }
};

TermWeightTable build_term_weights(const Document& doc);

double score_title(const Sentence& s, const std::vector<std::string>& title_stems);
double score_length(const Sentence& s, std::size_t longest_sentence_word_count);
double score_position(const Sentence& s);
double score_proper_noun(const Sentence& s, const Document& doc);
double score_numeric(const Sentence& s);

// Raw tf*isf sum for one sentence (numerator of the f3 ratio).
double term_weight_sum(const Sentence& s, const TermWeightTable& table);
double score_term_weight(const Sentence& s, const TermWeightTable& table,
                         double max_sentence_sum);

// Cosine over the union of content stems; vectors are within-sentence tf
// times document isf. Zero if either vector is all-zero.
double cosine_similarity(const Sentence& a, const Sentence& b, const TermWeightTable& table);

double similarity_sum(const Sentence& s, const Document& doc, const TermWeightTable& table);
double score_similarity(const Sentence& s, const Document& doc, const TermWeightTable& table);

double thematic_count(const Sentence& s, const Document& doc);
double score_thematic(const Sentence& s, const Document& doc, double max_count);

// One FeatureVector per sentence, in document order.
std::vector<FeatureVector> extract_features(const Document& doc);

} // namespace fuzzysum

#endif
