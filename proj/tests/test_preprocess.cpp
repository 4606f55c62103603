#include <doctest.h>

#include <algorithm>

#include "fuzzysum/errors.hpp"
#include "fuzzysum/preprocess.hpp"

using namespace fuzzysum;

namespace {

std::vector<std::pair<std::string, std::size_t>> segment(const std::string& body) {
    RawDocumentOptions options;
    options.title_mode = TitleMode::None;
    const RawDocument raw = make_raw_document("t", body, options);
    return segment_sentences(raw.body, raw.paragraph_breaks);
}

const StopwordSet& stopwords() {
    static const StopwordSet set = parse_stopwords("the\na\nan\nof\nto\nin\nhe\nwe\nit\n");
    return set;
}

} // namespace

TEST_CASE("segment: two terminators") {
    auto s = segment("It rained. We left.");
    REQUIRE(s.size() == 2);
    CHECK(s[0].first == "It rained.");
    CHECK(s[1].first == "We left.");
    CHECK(s[0].second == 0);
    CHECK(s[1].second == 0);
}

TEST_CASE("segment: abbreviation does not split") {
    auto s = segment("Dr. Smith arrived. He sat.");
    REQUIRE(s.size() == 2);
    CHECK(s[0].first == "Dr. Smith arrived.");
    CHECK(s[1].first == "He sat.");

    auto more = segment("The U.S. Senate met. Prof. Jones spoke, etc. Nobody minded.");
    REQUIRE(more.size() == 2);
    CHECK(more[0].first == "The U.S. Senate met.");
    CHECK(more[1].first == "Prof. Jones spoke, etc. Nobody minded.");
}

TEST_CASE("segment: EOF closes a sentence") {
    auto s = segment("One sentence without terminator");
    REQUIRE(s.size() == 1);
    CHECK(s[0].first == "One sentence without terminator");
}

TEST_CASE("segment: lowercase continuation does not split") {
    auto s = segment("He arrived at 5 p.m. and sat down. Then he left.");
    REQUIRE(s.size() == 2);
    CHECK(s[0].first == "He arrived at 5 p.m. and sat down.");
}

TEST_CASE("segment: question and exclamation marks") {
    auto s = segment("Really? Yes! Fine.");
    REQUIRE(s.size() == 3);
}

TEST_CASE("segment: paragraphs from blank lines") {
    auto s = segment("First para one. First para two.\n\nSecond para.\n\n\nThird para.");
    REQUIRE(s.size() == 4);
    CHECK(s[0].second == 0);
    CHECK(s[1].second == 0);
    CHECK(s[2].second == 1);
    CHECK(s[3].second == 2);
}

TEST_CASE("segment: digits can start a sentence") {
    auto s = segment("Profits fell. 12 people left.");
    REQUIRE(s.size() == 2);
    CHECK(s[1].first == "12 people left.");
}

TEST_CASE("segment: empty body rejected") {
    CHECK_THROWS_AS(segment_sentences("   \n \n", {}), EmptyDocumentError);
}

TEST_CASE("segment: covers all non-whitespace") {
    const std::string body = "Alpha beta gamma. Delta epsilon!\n\nZeta eta?  Theta iota.";
    std::string joined;
    for (auto& [text, para] : segment(body)) joined += text + " ";
    std::string expected_chars, got_chars;
    for (char c : body)
        if (!isspace(static_cast<unsigned char>(c))) expected_chars += c;
    for (char c : joined)
        if (!isspace(static_cast<unsigned char>(c))) got_chars += c;
    CHECK(expected_chars == got_chars);
}

TEST_CASE("tokenize: flags") {
    auto tokens = tokenize("The 3 cats ran.", stopwords());
    REQUIRE(tokens.size() == 4);
    CHECK(tokens[0].surface == "The");
    CHECK(tokens[0].is_stopword);
    CHECK(tokens[1].surface == "3");
    CHECK(tokens[1].is_numeric);
    CHECK_FALSE(tokens[1].is_capitalized);
    CHECK(tokens[2].surface == "cats");
    CHECK(tokens[2].stem == "cat");
    CHECK(tokens[3].surface == "ran");
    // ordered by offset
    for (std::size_t i = 1; i < tokens.size(); ++i)
        CHECK(tokens[i - 1].char_offset < tokens[i].char_offset);
}

TEST_CASE("tokenize: hyphen and slash splitting") {
    auto tokens = tokenize("state-of-the-art input/output", stopwords());
    REQUIRE(tokens.size() == 6);
    CHECK(tokens[0].surface == "state");
    CHECK(tokens[1].surface == "of");
    CHECK(tokens[2].surface == "the");
    CHECK(tokens[3].surface == "art");
    CHECK(tokens[4].surface == "input");
    CHECK(tokens[5].surface == "output");
}

TEST_CASE("tokenize: empty and punctuation-only input") {
    CHECK(tokenize("", stopwords()).empty());
    CHECK(tokenize("... --- !!!", stopwords()).empty());
}

TEST_CASE("tokenize: apostrophes kept inside, stripped outside") {
    auto tokens = tokenize("Don't 'quote' me", stopwords());
    REQUIRE(tokens.size() == 3);
    CHECK(tokens[0].surface == "Don't");
    CHECK(tokens[0].lower == "don't");
    CHECK(tokens[0].stem == "dont");
    CHECK(tokens[1].surface == "quote");
}

TEST_CASE("tokenize: numeric rule") {
    auto is_numeric = [](const std::string& text) {
        auto tokens = tokenize(text, stopwords());
        REQUIRE(tokens.size() == 1);
        return tokens[0].is_numeric;
    };
    CHECK(is_numeric("12"));
    CHECK(is_numeric("3.5"));
    CHECK(is_numeric("1,000"));
    CHECK(is_numeric("12%"));
    CHECK(is_numeric("$40"));
    CHECK(is_numeric("$1,234.56"));
    CHECK_FALSE(is_numeric("%"));
    CHECK_FALSE(is_numeric("$"));
    CHECK_FALSE(is_numeric("1.2.3"));
    CHECK_FALSE(is_numeric("4th"));
    CHECK_FALSE(is_numeric("abc"));
}

TEST_CASE("tokenize: percent sign survives as its own token") {
    auto tokens = tokenize("Profits rose 12 % to 30 million", stopwords());
    REQUIRE(tokens.size() == 7);
    CHECK(tokens[3].surface == "%");
    CHECK_FALSE(tokens[3].is_numeric);
    CHECK(tokens[3].stem.empty());
    std::size_t numeric = 0;
    for (auto& t : tokens) numeric += t.is_numeric ? 1 : 0;
    CHECK(numeric == 2);
}

TEST_CASE("tokenize: stopword and non-alphabetic tokens have empty stems") {
    for (const Token& t : tokenize("The 12 houses won % again", stopwords())) {
        const bool has_alpha =
            std::any_of(t.surface.begin(), t.surface.end(),
                        [](char c) { return isalpha(static_cast<unsigned char>(c)); });
        CHECK(t.stem.empty() == (t.is_stopword || !has_alpha));
    }
}

TEST_CASE("stopwords: parsing with comments") {
    StopwordSet set = parse_stopwords("# comment\nthe\n\nA  \nof # trailing\n");
    CHECK(set.count("the") == 1);
    CHECK(set.count("a") == 1);
    CHECK(set.count("of") == 1);
    CHECK(set.count("comment") == 0);
    CHECK(set.size() == 3);
}

TEST_CASE("raw document: title from first line") {
    const RawDocument raw = make_raw_document("d", "Headline here\nBody sentence one.\n");
    CHECK(raw.title == "Headline here");
    CHECK(raw.body == "Body sentence one.\n");
}

TEST_CASE("raw document: explicit and missing titles") {
    RawDocumentOptions opt;
    opt.title_mode = TitleMode::Explicit;
    opt.explicit_title = "Given";
    CHECK(make_raw_document("d", "Only body.", opt).title == "Given");
    CHECK(make_raw_document("d", "Only body.", opt).body == "Only body.");

    opt.title_mode = TitleMode::None;
    CHECK(make_raw_document("d", "Only body.", opt).title.empty());
}

TEST_CASE("raw document: empty body rejected") {
    CHECK_THROWS_AS(make_raw_document("d", "Title only\n   \n"), EmptyDocumentError);
    CHECK_THROWS_AS(make_raw_document("d", ""), EmptyDocumentError);
}

TEST_CASE("raw document: invalid UTF-8 rejected with offset") {
    try {
        make_raw_document("d", std::string("Title\nok \xC3\x28 bad"));
        FAIL("expected EncodingError");
    } catch (const EncodingError& e) {
        CHECK(e.byte_offset == 9);
        CHECK(std::string(e.what()).find("9") != std::string::npos);
    }
}

TEST_CASE("utf8 validation accepts multibyte text") {
    CHECK_FALSE(find_invalid_utf8("caf\xC3\xA9 \xE2\x82\xAC \xF0\x9F\x98\x80"));
    CHECK(find_invalid_utf8("\xED\xA0\x80").has_value());  // surrogate half
    CHECK(find_invalid_utf8("\xC0\xAF").has_value());      // overlong
}

TEST_CASE("strip tags") {
    CHECK(strip_tags("<TEXT>Hello <b>world</b></TEXT>") == "Hello world");
    CHECK(strip_tags("no tags") == "no tags");
}

TEST_CASE("build document: thematic stems") {
    // "tax" five times, everything else once: unique maximum
    const std::string text =
        "Taxes\n"
        "The tax plan. A tax cut. The tax rise. Tax report. One tax vote.";
    const Document doc = build_document(make_raw_document("d", text), stopwords());
    REQUIRE_FALSE(doc.thematic_stems.empty());
    CHECK(doc.thematic_stems[0] == "tax");
}

TEST_CASE("build document: thematic tie-break is alphabetical, capped at 10") {
    // 12 distinct content stems, every frequency 1
    const std::string text =
        "Heading\n"
        "Zebra yak xenon walrus viper uakari. Tapir seal rhino quail panda okapi.";
    const Document doc = build_document(make_raw_document("d", text), stopwords());
    REQUIRE(doc.thematic_stems.size() == 10);
    CHECK(std::is_sorted(doc.thematic_stems.begin(), doc.thematic_stems.end()));
    // the two alphabetically last stems fell off
    for (const std::string& stem : doc.thematic_stems) {
        CHECK(stem != "zebra");
        CHECK(stem != "yak");
    }
}

TEST_CASE("build document: structure of a 3-sentence fixture") {
    const std::string text =
        "Farm tax plan\n"
        "The farm tax plan won. Farmers cheered the plan.\n"
        "\n"
        "It rained in Paris.";
    const Document doc = build_document(make_raw_document("d", text), stopwords());
    REQUIRE(doc.sentences.size() == 3);
    CHECK(doc.title_stems == std::vector<std::string>{"farm", "tax", "plan"});

    CHECK(doc.sentences[0].index == 0);
    CHECK(doc.sentences[0].paragraph_index == 0);
    CHECK(doc.sentences[0].index_in_paragraph == 0);
    CHECK(doc.sentences[0].content_stems ==
          std::vector<std::string>{"farm", "tax", "plan", "won"});

    CHECK(doc.sentences[1].index == 1);
    CHECK(doc.sentences[1].paragraph_index == 0);
    CHECK(doc.sentences[1].index_in_paragraph == 1);
    CHECK(doc.sentences[1].content_stems ==
          std::vector<std::string>{"farmer", "cheer", "plan"});

    CHECK(doc.sentences[2].index == 2);
    CHECK(doc.sentences[2].paragraph_index == 1);
    CHECK(doc.sentences[2].index_in_paragraph == 0);
    CHECK(doc.sentences[2].content_stems == std::vector<std::string>{"rain", "pari"});

    // no stopword stem leaks into content or thematic stems
    for (const Sentence& s : doc.sentences)
        for (const std::string& stem : s.content_stems) CHECK(stopwords().count(stem) == 0);
}

TEST_CASE("build document: order preservation and determinism") {
    const std::string text = "T\nAlpha one. Beta two. Gamma three.\n\nDelta four.";
    const Document a = build_document(make_raw_document("d", text), stopwords());
    const Document b = build_document(make_raw_document("d", text), stopwords());
    for (std::size_t i = 0; i < a.sentences.size(); ++i) {
        CHECK(a.sentences[i].index == i);
        CHECK(a.sentences[i].text == b.sentences[i].text);
        CHECK(a.sentences[i].content_stems == b.sentences[i].content_stems);
    }
    CHECK(a.thematic_stems == b.thematic_stems);
}
