#ifndef FUZZYSUM_RUNNER_HPP
#define FUZZYSUM_RUNNER_HPP

#include <array>
#include <optional>
#include <string>
#include <vector>

#include "fuzzysum/preprocess.hpp"
#include "fuzzysum/rouge.hpp"
#include "fuzzysum/scoring.hpp"

namespace fuzzysum {

struct RunConfig {
    std::string input_dir;                  // directory of .txt documents
    std::string summaries_dir;              // evaluate: where summaries live
    std::string refs_dir;                   // evaluate: refs/<doc_id>/*.txt
    std::string output_dir;
    std::string output_csv;                 // features subcommand
    std::vector<Method> methods{Method::Gsm};
    std::optional<double> compression_rate; // exactly one of rate/budget is active
    std::optional<std::size_t> word_budget;
    std::string rule_file = "rules/default.rules";
    std::string stopword_file = "data/stopwords.txt";
    std::optional<std::array<double, 8>> gsm_weights;
    TitleMode title_mode = TitleMode::FirstLine;
    std::string explicit_title;
    bool strip_sgml_tags = false;
    RougeConfig rouge;
    unsigned workers = 1;
};

struct DocumentFailure {
    std::string doc_id;
    std::string message;
};

// 0 = clean, 1 = some documents failed (run continued), per the CLI contract
struct RunResult {
    int exit_code = 0;
    std::vector<DocumentFailure> failures;
    std::vector<std::string> notes;
};

// Fatal configuration problems (unreadable rules/stopwords, bad flags,
// empty corpus) throw; per-document problems are collected in the result.
RunResult run_summarize(const RunConfig& config);
RunResult run_evaluate(const RunConfig& config);
RunResult run_features(const RunConfig& config);

// Sorted (doc_id, path) pairs for every .txt file directly in dir.
std::vector<std::pair<std::string, std::string>> scan_corpus(const std::string& dir);

} // namespace fuzzysum

#endif
