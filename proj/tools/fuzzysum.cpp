#include <cstdio>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "fuzzysum/errors.hpp"
#include "fuzzysum/rules.hpp"
#include "fuzzysum/runner.hpp"

namespace {

int report_result(const fuzzysum::RunResult& result) {
    for (const auto& failure : result.failures)
        std::fprintf(stderr, "error: %s: %s\n", failure.doc_id.c_str(),
                     failure.message.c_str());
    for (const auto& note : result.notes) std::fprintf(stderr, "%s\n", note.c_str());
    if (!result.failures.empty())
        std::fprintf(stderr, "%zu document(s) failed\n", result.failures.size());
    return result.exit_code;
}

std::vector<fuzzysum::Method> parse_methods(const std::string& name) {
    using fuzzysum::Method;
    if (name == "all") return {Method::Gsm, Method::Fuzzy, Method::Baseline};
    if (auto m = fuzzysum::method_from_name(name)) return {*m};
    throw fuzzysum::ConfigError("unknown method: " + name);
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"Extractive text summarizer with GSM and fuzzy-logic sentence "
                 "scoring, plus a ROUGE-1 evaluation harness"};
    app.require_subcommand(1);
    app.set_config("--config", "", "Read options from a key=value config file");

    fuzzysum::RunConfig config;
    std::string method = "all";
    std::string title;
    std::string rouge_multi = "max";
    bool no_title = false;
    bool rouge_stem = false;
    double rate = -1.0;
    std::size_t budget = 0;

    auto add_common = [&](CLI::App* cmd) {
        cmd->add_option("--stopwords", config.stopword_file, "Stopword list, one word per line")
            ->capture_default_str();
        cmd->add_option("--title", title, "Use this title for every document");
        cmd->add_flag("--no-title", no_title, "Treat documents as untitled");
        cmd->add_flag("--strip-tags", config.strip_sgml_tags,
                      "Drop <...> tag spans before processing");
        cmd->add_option("--workers", config.workers, "Worker threads")->capture_default_str();
    };

    CLI::App* summarize = app.add_subcommand("summarize", "Write summaries for a corpus");
    summarize->configurable();
    summarize->add_option("--input", config.input_dir, "Directory of .txt documents")
        ->required();
    summarize->add_option("--out", config.output_dir, "Output directory")->required();
    summarize->add_option("--method", method, "gsm, fuzzy, baseline or all")
        ->capture_default_str();
    auto* rate_opt = summarize->add_option("--rate", rate, "Compression rate in (0,1]");
    auto* budget_opt =
        summarize->add_option("--budget-words", budget, "Word budget instead of a rate");
    rate_opt->excludes(budget_opt);
    budget_opt->excludes(rate_opt);
    summarize->add_option("--rules", config.rule_file, "Fuzzy rule file")
        ->capture_default_str();
    summarize
        ->add_option("--weights", "Eight GSM feature weights w1..w8")
        ->expected(8);
    add_common(summarize);

    CLI::App* evaluate = app.add_subcommand("evaluate", "Score summaries against references");
    evaluate->configurable();
    evaluate->add_option("--summaries", config.summaries_dir, "Directory of *.sum.txt files")
        ->required();
    evaluate->add_option("--refs", config.refs_dir, "References: refs/<doc_id>/*.txt")
        ->required();
    evaluate->add_option("--out", config.output_dir, "Report directory")->required();
    evaluate->add_flag("--rouge-stem", rouge_stem, "Stem tokens before matching");
    evaluate->add_option("--rouge-multi", rouge_multi, "max or average across references")
        ->capture_default_str();

    CLI::App* features = app.add_subcommand("features", "Export feature matrices as CSV");
    features->configurable();
    features->add_option("--input", config.input_dir, "Directory of .txt documents")
        ->required();
    features->add_option("--out", config.output_csv, "Output CSV path")->required();
    add_common(features);

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::CallForAllHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return 2;
    }

    try {
        if (no_title) {
            config.title_mode = fuzzysum::TitleMode::None;
        } else if (!title.empty()) {
            config.title_mode = fuzzysum::TitleMode::Explicit;
            config.explicit_title = title;
        }
        config.rouge.stem = rouge_stem;
        if (rouge_multi == "average")
            config.rouge.multi_ref = fuzzysum::RougeConfig::MultiRef::Average;
        else if (rouge_multi != "max")
            throw fuzzysum::ConfigError("--rouge-multi must be max or average");

        if (summarize->parsed()) {
            config.methods = parse_methods(method);
            if (rate_opt->count()) config.compression_rate = rate;
            if (budget_opt->count()) config.word_budget = budget;
            if (auto* weights = summarize->get_option("--weights"); weights->count()) {
                std::array<double, 8> w{};
                const auto values = weights->as<std::vector<double>>();
                std::copy(values.begin(), values.end(), w.begin());
                config.gsm_weights = w;
            }
            return report_result(fuzzysum::run_summarize(config));
        }
        if (evaluate->parsed()) return report_result(fuzzysum::run_evaluate(config));
        if (features->parsed()) return report_result(fuzzysum::run_features(config));
        return 2;
    } catch (const fuzzysum::RuleParseError& e) {
        std::fprintf(stderr, "rule error at %zu:%zu: %s\n", e.line, e.column, e.what());
        return 2;
    } catch (const fuzzysum::Error& e) {
        std::fprintf(stderr, "error: %s\n", e.what());
        return 2;
    } catch (const std::exception& e) {
        std::fprintf(stderr, "error: %s\n", e.what());
        return 2;
    }
}
