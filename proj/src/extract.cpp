#include "fuzzysum/extract.hpp"

#include <algorithm>
#include <cmath>

#include "fuzzysum/errors.hpp"

namespace fuzzysum {

namespace {

// descending score, ascending index; a total order, so the result does not
// depend on the order scores were handed in
std::vector<ScoredSentence> ranked(std::vector<ScoredSentence> scores) {
    std::sort(scores.begin(), scores.end(), [](const ScoredSentence& a, const ScoredSentence& b) {
        if (a.score != b.score) return a.score > b.score;
        return a.sentence_index < b.sentence_index;
    });
    return scores;
}

} // namespace

std::size_t selection_size(double rate, std::size_t sentence_count) {
    const double product = rate * double(sentence_count);
    const std::size_t m = std::size_t(std::ceil(product - 1e-9));
    return std::max<std::size_t>(1, m);
}

Summary select_sentences(const std::vector<ScoredSentence>& scores, double compression_rate) {
    if (scores.empty()) throw Error("no sentences to select from");
    if (!(compression_rate > 0.0 && compression_rate <= 1.0))
        throw InvalidRateError("compression rate must be in (0,1], got " +
                               std::to_string(compression_rate));

    const std::size_t m = std::min(selection_size(compression_rate, scores.size()), scores.size());
    std::vector<ScoredSentence> order = ranked(scores);

    Summary summary;
    summary.method = scores.front().method;
    summary.compression_rate = compression_rate;
    for (std::size_t i = 0; i < m; ++i) summary.selected_indices.push_back(order[i].sentence_index);
    std::sort(summary.selected_indices.begin(), summary.selected_indices.end());
    return summary;
}

Summary select_by_word_budget(const std::vector<ScoredSentence>& scores,
                              const Document& doc, std::size_t budget_words) {
    if (scores.empty()) throw Error("no sentences to select from");
    if (budget_words == 0) throw InvalidRateError("word budget must be positive");

    std::vector<ScoredSentence> order = ranked(scores);

    Summary summary;
    summary.method = scores.front().method;
    summary.word_budget = budget_words;
    std::size_t words = 0;
    for (std::size_t i = 0; i < order.size(); ++i) {
        const std::size_t idx = order[i].sentence_index;
        if (idx >= doc.sentences.size())
            throw IndexOutOfRangeError("scored sentence index out of range");
        const std::size_t len = doc.sentences[idx].tokens.size();
        if (i > 0 && words + len > budget_words) break;
        summary.selected_indices.push_back(idx);
        words += len;
    }
    std::sort(summary.selected_indices.begin(), summary.selected_indices.end());
    return summary;
}

std::string render_summary(Summary& summary, const Document& doc) {
    std::string text;
    for (std::size_t idx : summary.selected_indices) {
        if (idx >= doc.sentences.size())
            throw IndexOutOfRangeError(summary.doc_id + ": sentence index " +
                                       std::to_string(idx) + " out of range");
        if (!text.empty()) text += ' ';
        text += doc.sentences[idx].text;
    }
    summary.text = text;
    return text;
}

} // namespace fuzzysum
