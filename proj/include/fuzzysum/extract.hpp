#ifndef FUZZYSUM_EXTRACT_HPP
#define FUZZYSUM_EXTRACT_HPP

#include <optional>
#include <string>
#include <vector>

#include "fuzzysum/scoring.hpp"
#include "fuzzysum/text.hpp"

namespace fuzzysum {

struct Summary {
    std::string doc_id;
    Method method = Method::Gsm;
    std::optional<double> compression_rate;
    std::optional<std::size_t> word_budget;
    std::vector<std::size_t> selected_indices; // strictly increasing
    std::string text;
};

// Number of sentences a compression rate keeps: max(1, ceil(rate * n)),
// with products within 1e-9 of an integer treated as that integer.
std::size_t selection_size(double rate, std::size_t sentence_count);

// Top-scoring sentences, ties to the smaller index, output in document
// order. Throws InvalidRateError unless 0 < rate <= 1.
Summary select_sentences(const std::vector<ScoredSentence>& scores, double compression_rate);

// Greedy by rank until the next sentence would push the token count past
// the budget; always takes at least one sentence.
Summary select_by_word_budget(const std::vector<ScoredSentence>& scores,
                              const Document& doc, std::size_t budget_words);

// Selected sentence texts joined by single spaces; also fills summary.text.
std::string render_summary(Summary& summary, const Document& doc);

} // namespace fuzzysum

#endif
