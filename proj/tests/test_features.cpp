#include <doctest.h>

#include <cmath>
#include <random>

#include "fuzzysum/features.hpp"
#include "fuzzysum/preprocess.hpp"
#include "oracle.hpp"

using namespace fuzzysum;

namespace {

Sentence make_sentence(std::size_t index, std::vector<std::string> stems,
                       std::size_t token_count = 0) {
    Sentence s;
    s.index = index;
    s.content_stems = std::move(stems);
    s.tokens.resize(std::max(token_count, s.content_stems.size()));
    return s;
}

Document doc_from_stems(const std::vector<std::vector<std::string>>& stems) {
    Document doc;
    doc.id = "fixture";
    for (std::size_t i = 0; i < stems.size(); ++i)
        doc.sentences.push_back(make_sentence(i, stems[i]));
    return doc;
}

Document parse_fixture(const std::string& text) {
    return build_document(make_raw_document("fx", text), oracle::test_stopwords());
}

} // namespace

TEST_CASE("score_title: ratio of distinct title stems") {
    const std::vector<std::string> title = {"govern", "tax", "cut", "plan"};
    CHECK(score_title(make_sentence(0, {"tax", "plan", "other"}), title) == 0.5);
    CHECK(score_title(make_sentence(0, {"storm", "flood"}), title) == 0.0);
    CHECK(score_title(make_sentence(0, {"govern", "tax", "cut", "plan"}), title) == 1.0);
    // repeats in the sentence do not double-count
    CHECK(score_title(make_sentence(0, {"tax", "tax", "tax"}), title) == 0.25);
    CHECK(score_title(make_sentence(0, {"tax"}), {}) == 0.0);
}

TEST_CASE("score_length") {
    Sentence s = make_sentence(0, {}, 5);
    CHECK(score_length(s, 20) == 0.25);
    CHECK(score_length(s, 5) == 1.0);
}

TEST_CASE("score_position: first-five ladder") {
    Sentence s;
    s.index_in_paragraph = 0;
    CHECK(score_position(s) == 1.0);
    s.index_in_paragraph = 1;
    CHECK(score_position(s) == 0.8);
    s.index_in_paragraph = 2;
    CHECK(score_position(s) == 0.6);
    s.index_in_paragraph = 3;
    CHECK(score_position(s) == 0.4);
    s.index_in_paragraph = 4;
    CHECK(score_position(s) == 0.2);
    s.index_in_paragraph = 5;
    CHECK(score_position(s) == 0.0);
    s.index_in_paragraph = 6;
    CHECK(score_position(s) == 0.0);
}

TEST_CASE("build_term_weights: stem in every sentence weighs zero") {
    const Document doc = doc_from_stems({{"tax", "farm"}, {"tax", "crop"}});
    const TermWeightTable table = build_term_weights(doc);
    CHECK(table.weight("tax") == 0.0);
    CHECK(table.entries.at("tax").term_frequency == 2);
    CHECK(table.entries.at("tax").sentence_frequency == 2);
    CHECK(table.weight("farm") == doctest::Approx(std::log10(2.0)).epsilon(1e-12));
}

TEST_CASE("build_term_weights: N=10, three occurrences in one sentence") {
    std::vector<std::vector<std::string>> stems(10);
    stems[0] = {"oil", "oil", "oil"};
    for (std::size_t i = 1; i < 10; ++i) stems[i] = {"filler" + std::to_string(i)};
    const TermWeightTable table = build_term_weights(doc_from_stems(stems));
    CHECK(table.weight("oil") == doctest::Approx(3.0).epsilon(1e-12));
}

TEST_CASE("score_term_weight: self-normalization and stopword-only sentences") {
    const Document doc = doc_from_stems({{"tax", "farm", "tax"}, {"crop"}, {}});
    const TermWeightTable table = build_term_weights(doc);
    double max_sum = 0.0;
    for (const Sentence& s : doc.sentences)
        max_sum = std::max(max_sum, term_weight_sum(s, table));
    CHECK(score_term_weight(doc.sentences[0], table, max_sum) == 1.0);
    CHECK(score_term_weight(doc.sentences[2], table, max_sum) == 0.0);
}

TEST_CASE("cosine_similarity: identical stem multisets are parallel") {
    const Document doc = doc_from_stems({{"tax", "farm"}, {"tax", "farm"}, {"storm"}});
    const TermWeightTable table = build_term_weights(doc);
    CHECK(cosine_similarity(doc.sentences[0], doc.sentences[1], table) ==
          doctest::Approx(1.0).epsilon(1e-9));
}

TEST_CASE("cosine_similarity: disjoint stems are orthogonal") {
    const Document doc = doc_from_stems({{"tax"}, {"storm"}, {"tax", "storm"}});
    const TermWeightTable table = build_term_weights(doc);
    CHECK(cosine_similarity(doc.sentences[0], doc.sentences[1], table) == 0.0);
}

TEST_CASE("cosine_similarity: hand-worked pair") {
    // three sentences; isf(tax) = log10(3/2), isf(farm) = log10(3),
    // isf(crop) = log10(3/2)
    const Document doc = doc_from_stems({{"tax", "farm"}, {"tax", "crop"}, {"crop"}});
    const TermWeightTable table = build_term_weights(doc);
    const double wt = std::log10(1.5), wf = std::log10(3.0);
    const double expected = (wt * wt) / (std::sqrt(wt * wt + wf * wf) * std::sqrt(wt * wt + wt * wt));
    CHECK(cosine_similarity(doc.sentences[0], doc.sentences[1], table) ==
          doctest::Approx(expected).epsilon(1e-12));
}

TEST_CASE("cosine_similarity: exactly symmetric") {
    std::mt19937 rng(7);
    for (int i = 0; i < 50; ++i) {
        const Document doc = oracle::build_random_document(rng);
        const TermWeightTable table = build_term_weights(doc);
        for (const Sentence& a : doc.sentences)
            for (const Sentence& b : doc.sentences) {
                if (a.index >= b.index) continue;
                CHECK(cosine_similarity(a, b, table) == cosine_similarity(b, a, table));
            }
    }
}

TEST_CASE("score_similarity: degenerate cases") {
    const Document single = doc_from_stems({{"tax"}});
    CHECK(score_similarity(single.sentences[0], single, build_term_weights(single)) == 0.0);

    const Document doc = doc_from_stems({{"tax", "farm"}, {"tax", "farm"}, {"storm"}});
    const TermWeightTable table = build_term_weights(doc);
    CHECK(score_similarity(doc.sentences[2], doc, table) == 0.0); // orthogonal to the rest
    CHECK(score_similarity(doc.sentences[0], doc, table) == 1.0); // attains the max
}

TEST_CASE("score_thematic: occurrences count with multiplicity") {
    Document doc = doc_from_stems({{"tax", "tax", "farm"}, {"tax"}, {"storm"}});
    doc.thematic_stems = {"tax"};
    CHECK(thematic_count(doc.sentences[0], doc) == 2.0);
    CHECK(thematic_count(doc.sentences[1], doc) == 1.0);
    CHECK(score_thematic(doc.sentences[1], doc, 2.0) == 0.5);
    CHECK(score_thematic(doc.sentences[2], doc, 2.0) == 0.0);
    CHECK(score_thematic(doc.sentences[2], doc, 0.0) == 0.0); // 0/0 convention
}

TEST_CASE("proper nouns: heuristic on a hand-tagged sentence") {
    const Document doc = parse_fixture("T\nHe met Mary Smith in Paris.");
    REQUIRE(doc.sentences.size() == 1);
    CHECK(doc.sentences[0].tokens.size() == 6);
    CHECK(score_proper_noun(doc.sentences[0], doc) == 0.5);
}

TEST_CASE("proper nouns: all lowercase scores zero") {
    const Document doc = parse_fixture("T\nall quiet on the western front.");
    CHECK(score_proper_noun(doc.sentences[0], doc) == 0.0);
}

TEST_CASE("proper nouns: sentence-initial name counts when seen mid-sentence") {
    const Document doc = parse_fixture("T\nParis fell. They reached Paris.");
    REQUIRE(doc.sentences.size() == 2);
    // "Paris" opens sentence 0 but appears mid-sentence in sentence 1
    CHECK(score_proper_noun(doc.sentences[0], doc) == 0.5);
}

TEST_CASE("proper nouns: acronyms always count") {
    const Document doc = parse_fixture("T\nNATO expanded quickly.");
    CHECK(score_proper_noun(doc.sentences[0], doc) == doctest::Approx(1.0 / 3.0));
}

TEST_CASE("score_numeric: counted per token") {
    const Document doc = parse_fixture("T\nProfits rose 12 % to 30 million.");
    REQUIRE(doc.sentences.size() == 1);
    CHECK(score_numeric(doc.sentences[0]) == doctest::Approx(2.0 / 7.0).epsilon(1e-12));
    const Document none = parse_fixture("T\nNo figures here.");
    CHECK(score_numeric(none.sentences[0]) == 0.0);
}

TEST_CASE("extract_features: single-sentence document") {
    const Document doc = parse_fixture("Title words\nOnly sentence here.");
    const auto features = extract_features(doc);
    REQUIRE(features.size() == 1);
    CHECK(features[0].f2_length == 1.0);
    CHECK(features[0].f4_position == 1.0);
    CHECK(features[0].f5_similarity == 0.0);
}

TEST_CASE("extract_features: untitled document zeroes f1") {
    RawDocumentOptions opt;
    opt.title_mode = TitleMode::None;
    const Document doc = build_document(
        make_raw_document("fx", "Taxes rose. Farmers paid taxes.", opt), oracle::test_stopwords());
    for (const FeatureVector& f : extract_features(doc)) CHECK(f.f1_title == 0.0);
}

TEST_CASE("extract_features: matches the brute-force oracle on random documents") {
    std::mt19937 rng(42);
    for (int trial = 0; trial < 60; ++trial) {
        const Document doc = oracle::build_random_document(rng);
        const auto got = extract_features(doc);
        const auto want = oracle::features(doc);
        REQUIRE(got.size() == want.size());
        for (std::size_t i = 0; i < got.size(); ++i) {
            const auto g = got[i].as_array();
            CAPTURE(trial);
            CAPTURE(i);
            for (std::size_t k = 0; k < 8; ++k) {
                CAPTURE(k);
                if (k == 3) CHECK(g[k] == want[i][k]);
                else CHECK(g[k] == doctest::Approx(want[i][k]).epsilon(1e-9));
            }
        }
    }
}

TEST_CASE("extract_features: range and normalization sharpness properties") {
    std::mt19937 rng(123);
    for (int trial = 0; trial < 100; ++trial) {
        const Document doc = oracle::build_random_document(rng);
        const auto features = extract_features(doc);
        double max2 = 0, max3 = 0, max5 = 0, max7 = 0;
        for (const FeatureVector& f : features) {
            for (double v : f.as_array()) {
                CHECK(v >= 0.0);
                CHECK(v <= 1.0);
            }
            const double p = f.f4_position;
            CHECK((p == 0.0 || p == 0.2 || p == 0.4 || p == 0.6 || p == 0.8 || p == 1.0));
            max2 = std::max(max2, f.f2_length);
            max3 = std::max(max3, f.f3_term_weight);
            max5 = std::max(max5, f.f5_similarity);
            max7 = std::max(max7, f.f7_thematic);
        }
        CHECK(max2 == 1.0); // the longest sentence always normalizes to 1
        if (max3 > 0.0) CHECK(max3 == 1.0);
        if (max5 > 0.0) CHECK(max5 == 1.0);
        if (max7 > 0.0) CHECK(max7 == 1.0);
    }
}

TEST_CASE("term weights: scaling all weights leaves f3 and f5 unchanged") {
    std::mt19937 rng(77);
    const Document doc = oracle::build_random_document(rng, 6, 40);
    TermWeightTable table = build_term_weights(doc);
    TermWeightTable scaled = table;
    for (auto& [stem, e] : scaled.entries) {
        e.weight *= 1000.0;
        e.isf *= 1000.0;
    }
    double max_sum = 0.0, max_scaled = 0.0;
    for (const Sentence& s : doc.sentences) {
        max_sum = std::max(max_sum, term_weight_sum(s, table));
        max_scaled = std::max(max_scaled, term_weight_sum(s, scaled));
    }
    for (const Sentence& s : doc.sentences) {
        CHECK(score_term_weight(s, table, max_sum) ==
              doctest::Approx(score_term_weight(s, scaled, max_scaled)).epsilon(1e-9));
        CHECK(score_similarity(s, doc, table) ==
              doctest::Approx(score_similarity(s, doc, scaled)).epsilon(1e-9));
    }
}
