#ifndef FUZZYSUM_TEXT_HPP
#define FUZZYSUM_TEXT_HPP

#include <cstddef>
#include <string>
#include <vector>

namespace fuzzysum {

// A document as read from disk, before any linguistic processing.
struct RawDocument {
    std::string id;
    std::string title;                        // first non-empty line unless overridden
    std::string body;                         // everything after the title line
    std::vector<std::size_t> paragraph_breaks; // byte offsets of blank lines in body
};

struct Token {
    std::string surface;     // as it appeared in the text
    std::string lower;       // ASCII-lowercased surface
    std::string stem;        // empty for stopwords and non-alphabetic tokens
    bool is_stopword = false;
    bool is_numeric = false;
    bool is_capitalized = false;
    std::size_t char_offset = 0; // byte position of the token in the sentence text
};

struct Sentence {
    std::size_t index = 0;              // position in the document
    std::size_t paragraph_index = 0;
    std::size_t index_in_paragraph = 0;
    std::vector<Token> tokens;
    std::vector<std::string> content_stems; // stems of non-stopword alphabetic tokens, in order
    std::string text;                       // original sentence text, trimmed
};

struct Document {
    std::string id;
    std::vector<std::string> title_stems;    // distinct content stems of the title, first-seen order
    std::vector<Sentence> sentences;
    std::vector<std::string> thematic_stems; // top-10 most frequent content stems
};

} // namespace fuzzysum

#endif
