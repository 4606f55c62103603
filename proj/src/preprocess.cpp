#include "fuzzysum/preprocess.hpp"

#include <algorithm>
#include <array>
#include <cctype>
#include <fstream>
#include <map>
#include <sstream>

#include "fuzzysum/errors.hpp"
#include "fuzzysum/porter.hpp"

namespace fuzzysum {

namespace {

bool is_ascii_space(char c) {
    return c == ' ' || c == '\t' || c == '\n' || c == '\r' || c == '\f' || c == '\v';
}

bool is_ascii_digit(char c) { return c >= '0' && c <= '9'; }
bool is_ascii_upper(char c) { return c >= 'A' && c <= 'Z'; }
bool is_ascii_alpha(char c) { return (c >= 'a' && c <= 'z') || is_ascii_upper(c); }

char ascii_lower(char c) { return is_ascii_upper(c) ? char(c - 'A' + 'a') : c; }

// '%' and '$' are kept: they belong to numeric expressions ("12 %", "$30")
// and must not be eaten as punctuation.
bool is_strippable_punct(char c) {
    return std::ispunct(static_cast<unsigned char>(c)) && c != '%' && c != '$';
}

std::string_view trim_view(std::string_view s) {
    std::size_t b = 0;
    std::size_t e = s.size();
    while (b < e && is_ascii_space(s[b])) ++b;
    while (e > b && is_ascii_space(s[e - 1])) --e;
    return s.substr(b, e - b);
}

// Abbreviations that keep a following '.' from ending the sentence.
// Keys are lowercase with the terminating dot removed ("U.S." -> "u.s").
const std::array<std::string_view, 12> kAbbreviations = {
    "mr", "mrs", "dr", "prof", "inc", "co", "st", "vs", "etc", "u.s", "e.g", "i.e",
};

bool is_abbreviation(std::string_view key) {
    for (auto a : kAbbreviations)
        if (a == key) return true;
    return false;
}

} // namespace

std::optional<std::size_t> find_invalid_utf8(std::string_view text) {
    const auto* p = reinterpret_cast<const unsigned char*>(text.data());
    std::size_t n = text.size();
    std::size_t i = 0;
    auto cont = [&](std::size_t k) { return k < n && (p[k] & 0xC0) == 0x80; };
    while (i < n) {
        unsigned char c = p[i];
        if (c < 0x80) {
            ++i;
        } else if (c >= 0xC2 && c <= 0xDF) {
            if (!cont(i + 1)) return i;
            i += 2;
        } else if (c == 0xE0) {
            if (!(i + 1 < n && p[i + 1] >= 0xA0 && p[i + 1] <= 0xBF) || !cont(i + 2)) return i;
            i += 3;
        } else if (c >= 0xE1 && c <= 0xEC) {
            if (!cont(i + 1) || !cont(i + 2)) return i;
            i += 3;
        } else if (c == 0xED) {
            if (!(i + 1 < n && p[i + 1] >= 0x80 && p[i + 1] <= 0x9F) || !cont(i + 2)) return i;
            i += 3;
        } else if (c >= 0xEE && c <= 0xEF) {
            if (!cont(i + 1) || !cont(i + 2)) return i;
            i += 3;
        } else if (c == 0xF0) {
            if (!(i + 1 < n && p[i + 1] >= 0x90 && p[i + 1] <= 0xBF) || !cont(i + 2) || !cont(i + 3)) return i;
            i += 4;
        } else if (c >= 0xF1 && c <= 0xF3) {
            if (!cont(i + 1) || !cont(i + 2) || !cont(i + 3)) return i;
            i += 4;
        } else if (c == 0xF4) {
            if (!(i + 1 < n && p[i + 1] >= 0x80 && p[i + 1] <= 0x8F) || !cont(i + 2) || !cont(i + 3)) return i;
            i += 4;
        } else {
            return i;
        }
    }
    return std::nullopt;
}

std::string strip_tags(std::string_view text) {
    std::string out;
    out.reserve(text.size());
    bool in_tag = false;
    for (char c : text) {
        if (in_tag) {
            if (c == '>') in_tag = false;
        } else if (c == '<') {
            in_tag = true;
        } else {
            out.push_back(c);
        }
    }
    return out;
}

StopwordSet parse_stopwords(std::string_view text) {
    StopwordSet set;
    std::size_t pos = 0;
    while (pos <= text.size()) {
        std::size_t eol = text.find('\n', pos);
        std::string_view line = text.substr(pos, eol == std::string_view::npos ? eol : eol - pos);
        if (auto hash = line.find('#'); hash != std::string_view::npos) line = line.substr(0, hash);
        line = trim_view(line);
        if (!line.empty()) {
            std::string word(line);
            for (char& c : word) c = ascii_lower(c);
            set.insert(std::move(word));
        }
        if (eol == std::string_view::npos) break;
        pos = eol + 1;
    }
    return set;
}

StopwordSet load_stopwords(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw IoError("cannot open stopword file: " + path);
    std::ostringstream buf;
    buf << in.rdbuf();
    return parse_stopwords(buf.str());
}

RawDocument make_raw_document(std::string id, std::string_view text,
                              const RawDocumentOptions& options) {
    if (auto bad = find_invalid_utf8(text))
        throw EncodingError("invalid UTF-8 at byte offset " + std::to_string(*bad), *bad);

    std::string clean(text);
    if (clean.size() >= 3 && clean.compare(0, 3, "\xEF\xBB\xBF") == 0) clean.erase(0, 3);
    if (options.strip_sgml_tags) clean = strip_tags(clean);

    // normalize line endings so offsets and blank-line detection are uniform
    std::string norm;
    norm.reserve(clean.size());
    for (std::size_t i = 0; i < clean.size(); ++i) {
        if (clean[i] == '\r') {
            if (i + 1 < clean.size() && clean[i + 1] == '\n') continue;
            norm.push_back('\n');
        } else {
            norm.push_back(clean[i]);
        }
    }

    RawDocument raw;
    raw.id = std::move(id);

    std::size_t body_start = 0;
    switch (options.title_mode) {
        case TitleMode::Explicit:
            raw.title = options.explicit_title;
            break;
        case TitleMode::None:
            break;
        case TitleMode::FirstLine: {
            std::size_t pos = 0;
            while (pos < norm.size()) {
                std::size_t eol = norm.find('\n', pos);
                std::string_view line(norm.data() + pos,
                                      (eol == std::string::npos ? norm.size() : eol) - pos);
                if (!trim_view(line).empty()) {
                    raw.title = std::string(trim_view(line));
                    body_start = eol == std::string::npos ? norm.size() : eol + 1;
                    break;
                }
                if (eol == std::string::npos) { pos = norm.size(); break; }
                pos = eol + 1;
            }
            break;
        }
    }

    raw.body = norm.substr(body_start);
    if (trim_view(raw.body).empty())
        throw EmptyDocumentError("document body is empty");

    // blank-line runs separate paragraphs; record where each run starts
    const std::string& b = raw.body;
    std::size_t i = 0;
    bool line_has_content = false;
    std::size_t line_start = 0;
    std::size_t run_start = std::string::npos;
    bool seen_content = false;
    while (i <= b.size()) {
        if (i == b.size() || b[i] == '\n') {
            if (!line_has_content) {
                if (run_start == std::string::npos) run_start = line_start;
            } else {
                if (run_start != std::string::npos && seen_content)
                    raw.paragraph_breaks.push_back(run_start);
                run_start = std::string::npos;
                seen_content = true;
            }
            line_start = i + 1;
            line_has_content = false;
        } else if (!is_ascii_space(b[i])) {
            line_has_content = true;
        }
        ++i;
    }
    return raw;
}

std::vector<std::pair<std::string, std::size_t>>
segment_sentences(std::string_view body, const std::vector<std::size_t>& paragraph_breaks) {
    if (trim_view(body).empty()) throw EmptyDocumentError("no sentence found");

    std::vector<std::pair<std::size_t, std::size_t>> spans;
    std::size_t start = 0;
    for (std::size_t brk : paragraph_breaks) {
        spans.emplace_back(start, brk);
        start = brk;
    }
    spans.emplace_back(start, body.size());

    std::vector<std::pair<std::string, std::size_t>> out;
    std::size_t paragraph_index = 0;
    for (auto [lo, hi] : spans) {
        std::string_view para = body.substr(lo, hi - lo);
        if (trim_view(para).empty()) continue;

        std::size_t sent_start = 0;
        bool emitted = false;
        auto emit = [&](std::size_t end) {
            std::string_view text = trim_view(para.substr(sent_start, end - sent_start));
            if (!text.empty()) {
                // collapse internal whitespace runs so a sentence is one line
                std::string flat;
                flat.reserve(text.size());
                bool in_space = false;
                for (char c : text) {
                    if (is_ascii_space(c)) {
                        in_space = true;
                    } else {
                        if (in_space && !flat.empty()) flat += ' ';
                        in_space = false;
                        flat += c;
                    }
                }
                out.emplace_back(std::move(flat), paragraph_index);
                emitted = true;
            }
            sent_start = end;
        };

        for (std::size_t i = 0; i < para.size(); ++i) {
            char c = para[i];
            if (c != '.' && c != '!' && c != '?') continue;
            // require whitespace then an uppercase letter or digit
            std::size_t k = i + 1;
            if (k >= para.size() || !is_ascii_space(para[k])) continue;
            while (k < para.size() && is_ascii_space(para[k])) ++k;
            if (k >= para.size()) continue; // paragraph end closes it anyway
            if (!is_ascii_upper(para[k]) && !is_ascii_digit(para[k])) continue;
            if (c == '.') {
                // walk back over the token the dot belongs to
                std::size_t t = i;
                while (t > sent_start && (is_ascii_alpha(para[t - 1]) || para[t - 1] == '.')) --t;
                std::string key(para.substr(t, i - t));
                for (char& ch : key) ch = ascii_lower(ch);
                if (is_abbreviation(key)) continue;
            }
            emit(i + 1);
        }
        emit(para.size());
        if (emitted) ++paragraph_index;
    }

    if (out.empty()) throw EmptyDocumentError("no sentence found");
    return out;
}

std::vector<Token> tokenize(std::string_view sentence_text, const StopwordSet& stopwords) {
    std::vector<Token> tokens;
    std::size_t i = 0;
    const std::size_t n = sentence_text.size();
    while (i < n) {
        while (i < n && is_ascii_space(sentence_text[i])) ++i;
        if (i >= n) break;
        std::size_t chunk_start = i;
        while (i < n && !is_ascii_space(sentence_text[i])) ++i;
        std::string_view chunk = sentence_text.substr(chunk_start, i - chunk_start);

        std::size_t frag_start = 0;
        for (std::size_t k = 0; k <= chunk.size(); ++k) {
            if (k < chunk.size() && chunk[k] != '-' && chunk[k] != '/') continue;
            std::string_view frag = chunk.substr(frag_start, k - frag_start);
            std::size_t frag_offset = chunk_start + frag_start;
            frag_start = k + 1;

            std::size_t b = 0, e = frag.size();
            while (b < e && is_strippable_punct(frag[b])) ++b;
            while (e > b && is_strippable_punct(frag[e - 1])) --e;
            if (b >= e) continue;

            Token tok;
            tok.surface = std::string(frag.substr(b, e - b));
            tok.char_offset = frag_offset + b;
            tok.lower = tok.surface;
            for (char& c : tok.lower) c = ascii_lower(c);
            tok.is_capitalized = is_ascii_upper(tok.surface.front());

            bool saw_dot = false;
            bool any_digit = false;
            bool numeric = true;
            for (char c : tok.surface) {
                if (c == ',' || c == '%' || c == '$') continue;
                if (c == '.' && !saw_dot) { saw_dot = true; continue; }
                if (is_ascii_digit(c)) { any_digit = true; continue; }
                numeric = false;
                break;
            }
            tok.is_numeric = numeric && any_digit;

            tok.is_stopword = stopwords.count(tok.lower) > 0;
            if (!tok.is_stopword) {
                std::string alpha;
                for (char c : tok.lower)
                    if (c >= 'a' && c <= 'z') alpha.push_back(c);
                if (!alpha.empty()) tok.stem = porter_stem(alpha);
            }
            tokens.push_back(std::move(tok));
        }
    }
    return tokens;
}

Document build_document(const RawDocument& raw, const StopwordSet& stopwords) {
    Document doc;
    doc.id = raw.id;

    // distinct title stems, first occurrence order
    for (const Token& t : tokenize(raw.title, stopwords)) {
        if (t.stem.empty()) continue;
        if (std::find(doc.title_stems.begin(), doc.title_stems.end(), t.stem) ==
            doc.title_stems.end())
            doc.title_stems.push_back(t.stem);
    }

    std::size_t index = 0;
    std::size_t current_paragraph = std::size_t(-1);
    std::size_t index_in_paragraph = 0;
    for (auto& [text, para] : segment_sentences(raw.body, raw.paragraph_breaks)) {
        Sentence s;
        s.tokens = tokenize(text, stopwords);
        if (s.tokens.empty()) continue;
        if (para != current_paragraph) {
            current_paragraph = para;
            index_in_paragraph = 0;
        }
        s.index = index++;
        s.paragraph_index = para;
        s.index_in_paragraph = index_in_paragraph++;
        s.text = text;
        for (const Token& t : s.tokens)
            if (!t.is_stopword && !t.stem.empty()) s.content_stems.push_back(t.stem);
        doc.sentences.push_back(std::move(s));
    }
    if (doc.sentences.empty())
        throw EmptyDocumentError("no sentence with tokens");

    // thematic stems: frequency descending, alphabetical tie-break, top 10
    std::map<std::string, std::size_t> freq;
    for (const Sentence& s : doc.sentences)
        for (const std::string& stem : s.content_stems) ++freq[stem];
    std::vector<std::pair<std::string, std::size_t>> ranked(freq.begin(), freq.end());
    std::sort(ranked.begin(), ranked.end(), [](const auto& a, const auto& b) {
        if (a.second != b.second) return a.second > b.second;
        return a.first < b.first;
    });
    for (std::size_t k = 0; k < ranked.size() && k < 10; ++k)
        doc.thematic_stems.push_back(ranked[k].first);

    return doc;
}

} // namespace fuzzysum
