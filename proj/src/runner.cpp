#include "fuzzysum/runner.hpp"

#include <algorithm>
#include <atomic>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <functional>
#include <map>
#include <set>
#include <sstream>
#include <thread>

#include <json.hpp>

#include "fuzzysum/errors.hpp"
#include "fuzzysum/extract.hpp"
#include "fuzzysum/features.hpp"
#include "fuzzysum/rules.hpp"

namespace fs = std::filesystem;
using nlohmann::json;

namespace fuzzysum {

namespace {

std::string read_text_file(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw IoError("cannot read " + path);
    std::ostringstream buf;
    buf << in.rdbuf();
    return buf.str();
}

void write_text_file(const fs::path& path, const std::string& content) {
    std::ofstream out(path, std::ios::binary);
    if (!out) throw IoError("cannot write " + path.string());
    out << content;
    if (!out) throw IoError("short write to " + path.string());
}

std::string format_fixed(double value, int digits) {
    char buf[64];
    std::snprintf(buf, sizeof(buf), "%.*f", digits, value);
    return buf;
}

// run fn(i) for i in [0,n) on `workers` threads; the work must only touch
// its own slot of any shared state
void parallel_for(std::size_t n, unsigned workers, const std::function<void(std::size_t)>& fn) {
    workers = std::max(1u, workers);
    if (workers == 1 || n <= 1) {
        for (std::size_t i = 0; i < n; ++i) fn(i);
        return;
    }
    std::atomic<std::size_t> next{0};
    std::vector<std::thread> pool;
    const unsigned count = unsigned(std::min<std::size_t>(workers, n));
    pool.reserve(count);
    for (unsigned w = 0; w < count; ++w) {
        pool.emplace_back([&] {
            for (;;) {
                const std::size_t i = next.fetch_add(1);
                if (i >= n) return;
                fn(i);
            }
        });
    }
    for (std::thread& t : pool) t.join();
}

struct MethodPlan {
    Method method = Method::Gsm;
    std::optional<double> rate;
    std::size_t budget = 0; // used when rate is absent
};

std::vector<MethodPlan> make_plans(const RunConfig& config) {
    std::vector<MethodPlan> plans;
    for (Method m : config.methods) {
        MethodPlan plan;
        plan.method = m;
        if (m == Method::Baseline) {
            // the lead baseline is defined by a word budget, 100 by default
            plan.budget = config.word_budget.value_or(100);
        } else if (config.word_budget) {
            plan.budget = *config.word_budget;
        } else {
            plan.rate = config.compression_rate.value_or(0.2);
        }
        plans.push_back(plan);
    }
    return plans;
}

json summary_sidecar(const Summary& summary, const std::vector<ScoredSentence>& scores) {
    json side;
    side["doc_id"] = summary.doc_id;
    side["method"] = method_name(summary.method);
    if (summary.compression_rate) side["compression_rate"] = *summary.compression_rate;
    if (summary.word_budget) side["word_budget"] = *summary.word_budget;
    side["selected_indices"] = summary.selected_indices;
    json score_list = json::array();
    for (std::size_t idx : summary.selected_indices) {
        json entry;
        entry["index"] = idx;
        entry["score"] = scores[idx].score;
        score_list.push_back(entry);
    }
    side["scores"] = score_list;
    return side;
}

} // namespace

std::vector<std::pair<std::string, std::string>> scan_corpus(const std::string& dir) {
    if (!fs::is_directory(dir)) throw ConfigError("input directory not found: " + dir);
    std::vector<std::pair<std::string, std::string>> files;
    for (const auto& entry : fs::directory_iterator(dir)) {
        if (!entry.is_regular_file()) continue;
        if (entry.path().extension() != ".txt") continue;
        files.emplace_back(entry.path().stem().string(), entry.path().string());
    }
    std::sort(files.begin(), files.end());
    return files;
}

RunResult run_summarize(const RunConfig& config) {
    if (config.compression_rate && config.word_budget)
        throw ConfigError("choose either a compression rate or a word budget, not both");
    if (config.compression_rate &&
        !(*config.compression_rate > 0.0 && *config.compression_rate <= 1.0))
        throw ConfigError("compression rate must be in (0,1]");
    if (config.gsm_weights)
        for (double w : *config.gsm_weights)
            if (w < 0.0) throw ConfigError("gsm weights must be non-negative");
    if (config.methods.empty()) throw ConfigError("no method selected");

    const StopwordSet stopwords = load_stopwords(config.stopword_file);

    // parse failures must surface before any document is touched
    std::optional<FuzzySystem> system;
    const bool wants_fuzzy =
        std::find(config.methods.begin(), config.methods.end(), Method::Fuzzy) !=
        config.methods.end();
    if (wants_fuzzy) {
        SystemDeclaration decl = make_summarizer_declaration();
        RuleBase rules = load_rule_file(config.rule_file, decl);
        system.emplace(std::move(decl), std::move(rules));
    }

    const auto corpus = scan_corpus(config.input_dir);
    if (corpus.empty()) throw ConfigError("no .txt documents in " + config.input_dir);
    const std::vector<MethodPlan> plans = make_plans(config);

    fs::create_directories(config.output_dir);

    RawDocumentOptions raw_options;
    raw_options.title_mode = config.title_mode;
    raw_options.explicit_title = config.explicit_title;
    raw_options.strip_sgml_tags = config.strip_sgml_tags;

    std::vector<std::optional<DocumentFailure>> failures(corpus.size());
    parallel_for(corpus.size(), config.workers, [&](std::size_t i) {
        const auto& [doc_id, path] = corpus[i];
        try {
            const std::string text = read_text_file(path);
            const RawDocument raw = make_raw_document(doc_id, text, raw_options);
            const Document doc = build_document(raw, stopwords);
            const std::vector<FeatureVector> features = extract_features(doc);

            for (const MethodPlan& plan : plans) {
                std::vector<ScoredSentence> scores;
                switch (plan.method) {
                    case Method::Gsm:
                        scores = score_gsm_all(features, config.gsm_weights);
                        break;
                    case Method::Fuzzy:
                        scores = score_fuzzy_all(*system, features);
                        break;
                    case Method::Baseline:
                        scores = baseline_scores(doc.sentences.size());
                        break;
                }
                Summary summary = plan.rate
                                      ? select_sentences(scores, *plan.rate)
                                      : select_by_word_budget(scores, doc, plan.budget);
                summary.doc_id = doc_id;
                summary.method = plan.method;
                render_summary(summary, doc);

                const std::string base = doc_id + "." + method_name(plan.method) + ".sum";
                write_text_file(fs::path(config.output_dir) / (base + ".txt"),
                                summary.text + "\n");
                write_text_file(fs::path(config.output_dir) / (base + ".json"),
                                summary_sidecar(summary, scores).dump(2) + "\n");
            }
        } catch (const std::exception& e) {
            failures[i] = DocumentFailure{doc_id, e.what()};
        }
    });

    RunResult result;
    for (auto& f : failures)
        if (f) result.failures.push_back(std::move(*f));
    result.exit_code = result.failures.empty() ? 0 : 1;
    return result;
}

RunResult run_features(const RunConfig& config) {
    if (config.output_csv.empty()) throw ConfigError("no output CSV path given");
    const StopwordSet stopwords = load_stopwords(config.stopword_file);
    const auto corpus = scan_corpus(config.input_dir);

    RawDocumentOptions raw_options;
    raw_options.title_mode = config.title_mode;
    raw_options.explicit_title = config.explicit_title;
    raw_options.strip_sgml_tags = config.strip_sgml_tags;

    struct Row {
        std::string doc_id;
        std::vector<FeatureVector> features;
    };
    std::vector<Row> rows(corpus.size());
    std::vector<std::optional<DocumentFailure>> failures(corpus.size());
    parallel_for(corpus.size(), config.workers, [&](std::size_t i) {
        const auto& [doc_id, path] = corpus[i];
        rows[i].doc_id = doc_id;
        try {
            const RawDocument raw = make_raw_document(doc_id, read_text_file(path), raw_options);
            rows[i].features = extract_features(build_document(raw, stopwords));
        } catch (const std::exception& e) {
            failures[i] = DocumentFailure{doc_id, e.what()};
        }
    });

    std::string csv = "doc_id,sentence_index";
    for (const std::string& name : feature_names()) csv += "," + name;
    csv += "\n";
    for (const Row& row : rows) {
        for (std::size_t s = 0; s < row.features.size(); ++s) {
            csv += row.doc_id + "," + std::to_string(s);
            for (double v : row.features[s].as_array()) csv += "," + format_fixed(v, 9);
            csv += "\n";
        }
    }
    if (fs::path(config.output_csv).has_parent_path())
        fs::create_directories(fs::path(config.output_csv).parent_path());
    write_text_file(config.output_csv, csv);

    RunResult result;
    for (auto& f : failures)
        if (f) result.failures.push_back(std::move(*f));
    result.exit_code = result.failures.empty() ? 0 : 1;
    return result;
}

namespace {

std::vector<std::string> references_for(const std::string& refs_dir, const std::string& doc_id) {
    std::vector<std::string> refs;
    const fs::path dir = fs::path(refs_dir) / doc_id;
    if (!fs::is_directory(dir)) return refs;
    for (const auto& entry : fs::directory_iterator(dir)) {
        if (!entry.is_regular_file()) continue;
        if (entry.path().extension() != ".txt") continue;
        refs.push_back(entry.path().string());
    }
    std::sort(refs.begin(), refs.end());
    return refs;
}

std::string text_report(const std::map<std::string, CorpusResult>& by_method) {
    std::ostringstream out;
    out << "Summarizer      Precision   Recall      F-measure\n";
    for (const auto& [method, result] : by_method) {
        out << method << std::string(16 - std::min<std::size_t>(15, method.size()), ' ')
            << format_fixed(result.avg_precision, 5) << "     "
            << format_fixed(result.avg_recall, 5) << "     "
            << format_fixed(result.avg_f_measure, 5) << "\n";
    }
    out << "\nAverage F-measure";
    for (const auto& [method, result] : by_method) out << "  " << method;
    out << "\n";
    for (std::size_t bin = 0; bin < kHistogramBins; ++bin) {
        const std::string& label = histogram_bin_labels()[bin];
        out << label << std::string(19 - std::min<std::size_t>(18, label.size()), ' ');
        for (const auto& [method, result] : by_method) {
            std::string count = std::to_string(result.histogram[bin]);
            out << std::string(method.size() + 2 - std::min(method.size() + 1, count.size()), ' ')
                << count;
        }
        out << "\n";
    }
    return out.str();
}

json json_report(const std::map<std::string, CorpusResult>& by_method) {
    json report;
    for (const auto& [method, result] : by_method) {
        json m;
        m["average"]["precision"] = result.avg_precision;
        m["average"]["recall"] = result.avg_recall;
        m["average"]["f_measure"] = result.avg_f_measure;
        json hist;
        for (std::size_t bin = 0; bin < kHistogramBins; ++bin)
            hist[histogram_bin_labels()[bin]] = result.histogram[bin];
        m["histogram"] = hist;
        json docs;
        for (const DocumentScore& ds : result.per_document) {
            json d;
            d["precision"] = ds.score.precision;
            d["recall"] = ds.score.recall;
            d["f_measure"] = ds.score.f_measure;
            d["match_count"] = ds.score.match_count;
            d["candidate_count"] = ds.score.candidate_count;
            d["reference_count"] = ds.score.reference_count;
            docs[ds.doc_id] = d;
        }
        m["per_document"] = docs;
        report[method] = m;
    }
    return report;
}

} // namespace

RunResult run_evaluate(const RunConfig& config) {
    if (!fs::is_directory(config.summaries_dir))
        throw ConfigError("summaries directory not found: " + config.summaries_dir);

    // <doc_id>.<method>.sum.txt, grouped by method
    std::map<std::string, std::vector<CorpusPair>> pairs_by_method;
    std::vector<std::string> summary_files;
    for (const auto& entry : fs::directory_iterator(config.summaries_dir)) {
        if (!entry.is_regular_file()) continue;
        const std::string name = entry.path().filename().string();
        if (name.size() < 9 || name.substr(name.size() - 8) != ".sum.txt") continue;
        summary_files.push_back(name);
    }
    std::sort(summary_files.begin(), summary_files.end());
    if (summary_files.empty())
        throw ConfigError("no *.sum.txt summaries in " + config.summaries_dir);

    RunResult result;
    std::set<std::string> missing_refs;
    for (const std::string& name : summary_files) {
        const std::string stem = name.substr(0, name.size() - 8); // <doc_id>.<method>
        const std::size_t dot = stem.rfind('.');
        if (dot == std::string::npos || dot == 0) continue;
        const std::string doc_id = stem.substr(0, dot);
        const std::string method = stem.substr(dot + 1);
        if (!method_from_name(method)) continue;

        CorpusPair pair;
        pair.doc_id = doc_id;
        pair.candidate_path = (fs::path(config.summaries_dir) / name).string();
        pair.reference_paths = references_for(config.refs_dir, doc_id);
        if (pair.reference_paths.empty()) {
            missing_refs.insert(doc_id);
            continue;
        }
        pairs_by_method[method].push_back(std::move(pair));
    }

    for (const std::string& doc_id : missing_refs)
        result.failures.push_back({doc_id, "no reference summaries under " +
                                               (fs::path(config.refs_dir) / doc_id).string()});

    if (pairs_by_method.empty()) {
        std::string ids;
        for (const std::string& doc_id : missing_refs) ids += " " + doc_id;
        throw MissingFileError("no document has reference summaries; missing:" + ids);
    }

    std::map<std::string, CorpusResult> by_method;
    for (const auto& [method, pairs] : pairs_by_method)
        by_method[method] = evaluate_corpus(pairs, config.rouge);

    fs::create_directories(config.output_dir);
    write_text_file(fs::path(config.output_dir) / "report.json", json_report(by_method).dump(2) + "\n");
    write_text_file(fs::path(config.output_dir) / "report.txt", text_report(by_method));

    result.exit_code = result.failures.empty() ? 0 : 1;
    return result;
}

} // namespace fuzzysum
