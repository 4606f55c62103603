#ifndef FUZZYSUM_ROUGE_HPP
#define FUZZYSUM_ROUGE_HPP

#include <array>
#include <cstddef>
#include <string>
#include <string_view>
#include <vector>

namespace fuzzysum {

struct RougeConfig {
    bool stem = false;
    enum class MultiRef { Max, Average } multi_ref = MultiRef::Max;
};

struct RougeScore {
    double precision = 0.0;
    double recall = 0.0;
    double f_measure = 0.0;
    std::size_t match_count = 0;
    std::size_t candidate_count = 0;
    std::size_t reference_count = 0;
};

// Lowercased alphanumeric tokens; punctuation acts as a separator.
std::vector<std::string> rouge_tokens(std::string_view text, bool stem);

// Unigram overlap with clipped counts. Against several references the
// triple of the best-recall reference wins (or, per config, precision and
// recall are averaged and F recomputed). Throws EmptyInputError.
RougeScore rouge_1(std::string_view candidate, const std::vector<std::string>& references,
                   const RougeConfig& config = {});

// F-measure bins: [0,.3) [.3,.4) [.4,.5) [.5,.6) [.6,.7) [.7,1]
constexpr std::size_t kHistogramBins = 6;
std::size_t histogram_bin(double f_measure);
const std::array<std::string, kHistogramBins>& histogram_bin_labels();

struct DocumentScore {
    std::string doc_id;
    RougeScore score;
};

struct CorpusResult {
    std::vector<DocumentScore> per_document; // sorted by doc_id
    double avg_precision = 0.0;
    double avg_recall = 0.0;
    double avg_f_measure = 0.0;
    std::array<std::size_t, kHistogramBins> histogram{};
};

struct CorpusPair {
    std::string doc_id;
    std::string candidate_path;
    std::vector<std::string> reference_paths;
};

struct CorpusText {
    std::string doc_id;
    std::string candidate;
    std::vector<std::string> references;
};

// Reads every file, scores each document, and averages in doc-id order.
// Throws MissingFileError naming every unreadable file.
CorpusResult evaluate_corpus(const std::vector<CorpusPair>& pairs,
                             const RougeConfig& config = {});

// Same scoring and averaging over already-loaded text.
CorpusResult evaluate_corpus_text(std::vector<CorpusText> docs, const RougeConfig& config = {});

} // namespace fuzzysum

#endif
