#include <doctest.h>

#include <algorithm>
#include <random>

#include "fuzzysum/errors.hpp"
#include "fuzzysum/extract.hpp"
#include "fuzzysum/preprocess.hpp"
#include "oracle.hpp"

using namespace fuzzysum;

namespace {

std::vector<ScoredSentence> scored(const std::vector<double>& values) {
    std::vector<ScoredSentence> out;
    for (std::size_t i = 0; i < values.size(); ++i) out.push_back({i, values[i], Method::Gsm});
    return out;
}

} // namespace

TEST_CASE("selection size: ceil with a floor of one") {
    CHECK(selection_size(0.2, 28) == 6); // ceil(5.6)
    CHECK(selection_size(0.2, 3) == 1);
    CHECK(selection_size(0.2, 1) == 1);
    CHECK(selection_size(0.34, 3) == 2); // ceil(1.02)
    CHECK(selection_size(1.0, 7) == 7);
    for (std::size_t n = 1; n <= 60; ++n) CHECK(selection_size(0.2, n) == std::max<std::size_t>(1, (n + 4) / 5));
}

TEST_CASE("select: top scores, original order restored") {
    Summary s = select_sentences(scored({0.1, 0.9, 0.5, 0.8}), 0.5);
    CHECK(s.selected_indices == std::vector<std::size_t>{1, 3});
}

TEST_CASE("select: ties break toward the smaller index") {
    Summary s = select_sentences(scored({5, 5, 3}), 0.34);
    CHECK(s.selected_indices == std::vector<std::size_t>{0, 1});
}

TEST_CASE("select: invalid rates rejected") {
    CHECK_THROWS_AS(select_sentences(scored({1.0}), 0.0), InvalidRateError);
    CHECK_THROWS_AS(select_sentences(scored({1.0}), 1.5), InvalidRateError);
    CHECK_THROWS_AS(select_sentences(scored({1.0}), -0.2), InvalidRateError);
}

TEST_CASE("select: permuting equal-score input does not change the set") {
    std::mt19937 rng(9);
    std::vector<ScoredSentence> scores = scored({3, 7, 3, 7, 1, 3});
    const Summary base = select_sentences(scores, 0.5);
    for (int trial = 0; trial < 20; ++trial) {
        std::shuffle(scores.begin(), scores.end(), rng);
        CHECK(select_sentences(scores, 0.5).selected_indices == base.selected_indices);
    }
}

TEST_CASE("select: score dominance") {
    std::mt19937 rng(21);
    std::uniform_real_distribution<double> uni(0.0, 1.0);
    for (int trial = 0; trial < 50; ++trial) {
        std::vector<double> values(12);
        for (double& v : values) v = uni(rng) < 0.3 ? 0.5 : uni(rng); // force some ties
        const Summary s = select_sentences(scored(values), 0.4);
        for (std::size_t idx = 0; idx < values.size(); ++idx) {
            const bool selected = std::find(s.selected_indices.begin(), s.selected_indices.end(),
                                            idx) != s.selected_indices.end();
            if (selected) continue;
            for (std::size_t sel : s.selected_indices) {
                const bool ok = values[sel] > values[idx] ||
                                (values[sel] == values[idx] && sel < idx);
                CHECK(ok);
            }
        }
    }
}

TEST_CASE("select: raising the rate never drops a selected sentence") {
    std::mt19937 rng(33);
    std::uniform_real_distribution<double> uni(0.0, 1.0);
    std::vector<double> values(15);
    for (double& v : values) v = uni(rng);
    std::vector<std::size_t> previous;
    for (double rate : {0.1, 0.2, 0.34, 0.5, 0.75, 1.0}) {
        const Summary s = select_sentences(scored(values), rate);
        for (std::size_t idx : previous)
            CHECK(std::find(s.selected_indices.begin(), s.selected_indices.end(), idx) !=
                  s.selected_indices.end());
        previous = s.selected_indices;
    }
}

TEST_CASE("word budget: greedy by rank, at least one sentence") {
    const Document doc = build_document(
        make_raw_document("d", "T\nAlpha beta gamma delta. Epsilon zeta. Eta theta iota kappa "
                               "lambda mu nu xi.\n\nOmicron pi rho."),
        oracle::test_stopwords());
    REQUIRE(doc.sentences.size() == 4);
    // token counts: 4, 2, 8, 3

    SUBCASE("budget fits top sentences") {
        // ranks: idx2 (8 tokens) first
        Summary s = select_by_word_budget(scored({0.4, 0.3, 0.9, 0.5}), doc, 11);
        CHECK(s.selected_indices == std::vector<std::size_t>{2, 3}); // 8 + 3 = 11
    }
    SUBCASE("stops at the first sentence that would overflow") {
        Summary s = select_by_word_budget(scored({0.4, 0.3, 0.9, 0.5}), doc, 10);
        // 8 fits, next ranked (3 tokens) would exceed 10
        CHECK(s.selected_indices == std::vector<std::size_t>{2});
    }
    SUBCASE("single oversized sentence still taken") {
        Summary s = select_by_word_budget(scored({0.1, 0.2, 0.9, 0.3}), doc, 2);
        CHECK(s.selected_indices == std::vector<std::size_t>{2});
    }
    SUBCASE("budget zero rejected") {
        CHECK_THROWS_AS(select_by_word_budget(scored({1, 1, 1, 1}), doc, 0), InvalidRateError);
    }
}

TEST_CASE("render: single sentence verbatim, two joined by one space") {
    const Document doc = build_document(
        make_raw_document("d", "T\nFirst sentence here. Second one. Third sentence."),
        oracle::test_stopwords());

    Summary one;
    one.selected_indices = {1};
    CHECK(render_summary(one, doc) == "Second one.");

    Summary two;
    two.selected_indices = {0, 2};
    CHECK(render_summary(two, doc) == "First sentence here. Third sentence.");
    CHECK(two.text == "First sentence here. Third sentence.");
}

TEST_CASE("render: bad index rejected") {
    const Document doc = build_document(make_raw_document("d", "T\nOnly one."),
                                        oracle::test_stopwords());
    Summary bad;
    bad.selected_indices = {5};
    CHECK_THROWS_AS(render_summary(bad, doc), IndexOutOfRangeError);
}
