#include "fuzzysum/rouge.hpp"

#include <algorithm>
#include <fstream>
#include <map>
#include <sstream>

#include "fuzzysum/errors.hpp"
#include "fuzzysum/porter.hpp"

namespace fuzzysum {

namespace {

bool keep_char(unsigned char c) {
    return (c >= 'a' && c <= 'z') || (c >= '0' && c <= '9') || c >= 0x80;
}

std::map<std::string, std::size_t> count_tokens(const std::vector<std::string>& tokens) {
    std::map<std::string, std::size_t> counts;
    for (const std::string& t : tokens) ++counts[t];
    return counts;
}

RougeScore score_pair(const std::map<std::string, std::size_t>& cand_counts,
                      std::size_t cand_total,
                      const std::map<std::string, std::size_t>& ref_counts,
                      std::size_t ref_total) {
    std::size_t match = 0;
    for (const auto& [token, count] : ref_counts) {
        auto it = cand_counts.find(token);
        if (it != cand_counts.end()) match += std::min(count, it->second);
    }
    RougeScore s;
    s.match_count = match;
    s.candidate_count = cand_total;
    s.reference_count = ref_total;
    s.precision = cand_total ? double(match) / double(cand_total) : 0.0;
    s.recall = ref_total ? double(match) / double(ref_total) : 0.0;
    s.f_measure = (s.precision + s.recall) > 0.0
                      ? 2.0 * s.precision * s.recall / (s.precision + s.recall)
                      : 0.0;
    return s;
}

std::string read_file(const std::string& path, std::vector<std::string>& missing) {
    std::ifstream in(path, std::ios::binary);
    if (!in) {
        missing.push_back(path);
        return {};
    }
    std::ostringstream buf;
    buf << in.rdbuf();
    return buf.str();
}

} // namespace

std::vector<std::string> rouge_tokens(std::string_view text, bool stem) {
    std::vector<std::string> tokens;
    std::string current;
    auto flush = [&] {
        if (current.empty()) return;
        if (stem) {
            bool all_alpha = true;
            for (char c : current)
                if (c < 'a' || c > 'z') { all_alpha = false; break; }
            if (all_alpha) current = porter_stem(current);
        }
        tokens.push_back(std::move(current));
        current.clear();
    };
    for (unsigned char c : text) {
        unsigned char lc = (c >= 'A' && c <= 'Z') ? static_cast<unsigned char>(c - 'A' + 'a') : c;
        if (keep_char(lc)) current.push_back(char(lc));
        else flush();
    }
    flush();
    return tokens;
}

std::size_t histogram_bin(double f_measure) {
    if (f_measure < 0.3) return 0;
    if (f_measure < 0.4) return 1;
    if (f_measure < 0.5) return 2;
    if (f_measure < 0.6) return 3;
    if (f_measure < 0.7) return 4;
    return 5;
}

const std::array<std::string, kHistogramBins>& histogram_bin_labels() {
    static const std::array<std::string, kHistogramBins> labels = {
        "< 0.30000",         "0.30000-0.39999", "0.40000-0.49999",
        "0.50000-0.59999",   "0.60000-0.69999", ">= 0.70000",
    };
    return labels;
}

RougeScore rouge_1(std::string_view candidate, const std::vector<std::string>& references,
                   const RougeConfig& config) {
    const std::vector<std::string> cand_tokens = rouge_tokens(candidate, config.stem);
    if (cand_tokens.empty()) throw EmptyInputError("candidate summary has no tokens");

    const auto cand_counts = count_tokens(cand_tokens);
    std::vector<RougeScore> per_ref;
    for (const std::string& ref : references) {
        const std::vector<std::string> ref_tokens = rouge_tokens(ref, config.stem);
        if (ref_tokens.empty()) continue;
        per_ref.push_back(
            score_pair(cand_counts, cand_tokens.size(), count_tokens(ref_tokens), ref_tokens.size()));
    }
    if (per_ref.empty()) throw EmptyInputError("no reference summary has tokens");

    // best recall decides which reference represents the document
    std::size_t best = 0;
    for (std::size_t i = 1; i < per_ref.size(); ++i)
        if (per_ref[i].recall > per_ref[best].recall) best = i;

    if (config.multi_ref == RougeConfig::MultiRef::Max || per_ref.size() == 1)
        return per_ref[best];

    RougeScore avg = per_ref[best]; // counts stay those of the best-recall reference
    double p = 0.0, r = 0.0;
    for (const RougeScore& s : per_ref) {
        p += s.precision;
        r += s.recall;
    }
    avg.precision = p / double(per_ref.size());
    avg.recall = r / double(per_ref.size());
    avg.f_measure = (avg.precision + avg.recall) > 0.0
                        ? 2.0 * avg.precision * avg.recall / (avg.precision + avg.recall)
                        : 0.0;
    return avg;
}

CorpusResult evaluate_corpus_text(std::vector<CorpusText> docs, const RougeConfig& config) {
    if (docs.empty()) throw EmptyInputError("no documents to evaluate");
    std::sort(docs.begin(), docs.end(),
              [](const CorpusText& a, const CorpusText& b) { return a.doc_id < b.doc_id; });

    CorpusResult result;
    for (const CorpusText& doc : docs) {
        DocumentScore ds;
        ds.doc_id = doc.doc_id;
        ds.score = rouge_1(doc.candidate, doc.references, config);
        result.histogram[histogram_bin(ds.score.f_measure)] += 1;
        result.avg_precision += ds.score.precision;
        result.avg_recall += ds.score.recall;
        result.avg_f_measure += ds.score.f_measure;
        result.per_document.push_back(std::move(ds));
    }
    const double n = double(result.per_document.size());
    result.avg_precision /= n;
    result.avg_recall /= n;
    result.avg_f_measure /= n;
    return result;
}

CorpusResult evaluate_corpus(const std::vector<CorpusPair>& pairs, const RougeConfig& config) {
    if (pairs.empty()) throw EmptyInputError("no documents to evaluate");
    std::vector<std::string> missing;
    std::vector<CorpusText> docs;
    for (const CorpusPair& pair : pairs) {
        CorpusText text;
        text.doc_id = pair.doc_id;
        text.candidate = read_file(pair.candidate_path, missing);
        if (pair.reference_paths.empty()) missing.push_back("references for " + pair.doc_id);
        for (const std::string& ref : pair.reference_paths)
            text.references.push_back(read_file(ref, missing));
        docs.push_back(std::move(text));
    }
    if (!missing.empty()) {
        std::string message = "missing files:";
        for (const std::string& m : missing) message += " " + m;
        throw MissingFileError(message);
    }
    return evaluate_corpus_text(std::move(docs), config);
}

} // namespace fuzzysum
