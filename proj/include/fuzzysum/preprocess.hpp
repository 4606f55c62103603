#ifndef FUZZYSUM_PREPROCESS_HPP
#define FUZZYSUM_PREPROCESS_HPP

#include <cstddef>
#include <optional>
#include <string>
#include <string_view>
#include <unordered_set>
#include <utility>
#include <vector>

#include "fuzzysum/text.hpp"

namespace fuzzysum {

using StopwordSet = std::unordered_set<std::string>;

// Offset of the first invalid UTF-8 byte, or nullopt if the text is clean.
std::optional<std::size_t> find_invalid_utf8(std::string_view text);

// Remove <...> tag spans; unterminated '<' runs to end of text.
std::string strip_tags(std::string_view text);

// One lowercase word per line, '#' starts a comment.
StopwordSet parse_stopwords(std::string_view text);
StopwordSet load_stopwords(const std::string& path);

enum class TitleMode { FirstLine, Explicit, None };

struct RawDocumentOptions {
    TitleMode title_mode = TitleMode::FirstLine;
    std::string explicit_title;
    bool strip_sgml_tags = false;
};

// Validates encoding, splits off the title line, records blank-line offsets.
// Throws EncodingError / EmptyDocumentError.
RawDocument make_raw_document(std::string id, std::string_view text,
                              const RawDocumentOptions& options = {});

// Sentence boundaries: '.', '!' or '?' followed by whitespace and an
// uppercase letter or digit, unless the preceding token is a known
// abbreviation. Blank lines both separate paragraphs and close sentences.
std::vector<std::pair<std::string, std::size_t>>
segment_sentences(std::string_view body, const std::vector<std::size_t>& paragraph_breaks);

// Whitespace split, then split on '-' and '/', then strip surrounding
// punctuation. '%' and '$' survive so that "12 %" stays two tokens.
std::vector<Token> tokenize(std::string_view sentence_text, const StopwordSet& stopwords);

// Full pipeline: segments, tokenizes, stems, and fills in the thematic
// stems (top 10 by frequency, ties alphabetical).
Document build_document(const RawDocument& raw, const StopwordSet& stopwords);

} // namespace fuzzysum

#endif
