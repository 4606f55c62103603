#include "fuzzysum/rules.hpp"

#include <algorithm>
#include <cctype>
#include <charconv>
#include <fstream>
#include <sstream>
#include <vector>

namespace fuzzysum {
namespace {

enum class TokenKind { Identifier, Number, End };

struct DslToken {
    TokenKind kind = TokenKind::End;
    std::string text;
    std::size_t line = 0;
    std::size_t column = 0;
};

bool ident_start(char c) {
    return (c >= 'a' && c <= 'z') || (c >= 'A' && c <= 'Z') || c == '_';
}
bool ident_char(char c) { return ident_start(c) || (c >= '0' && c <= '9'); }
bool number_char(char c) { return (c >= '0' && c <= '9') || c == '.'; }

std::string lower_copy(std::string_view s) {
    std::string out(s);
    std::transform(out.begin(), out.end(), out.begin(),
                   [](unsigned char c) { return char(std::tolower(c)); });
    return out;
}

class Lexer {
public:
    explicit Lexer(std::string_view text) : text_(text) {}

    std::vector<DslToken> run() {
        std::vector<DslToken> tokens;
        while (pos_ < text_.size()) {
            char c = text_[pos_];
            if (c == '#') {
                while (pos_ < text_.size() && text_[pos_] != '\n') advance();
                continue;
            }
            if (c == ' ' || c == '\t' || c == '\r' || c == '\n') {
                advance();
                continue;
            }
            DslToken tok;
            tok.line = line_;
            tok.column = column_;
            if (ident_start(c)) {
                std::size_t start = pos_;
                while (pos_ < text_.size() && ident_char(text_[pos_])) advance();
                tok.kind = TokenKind::Identifier;
                tok.text = std::string(text_.substr(start, pos_ - start));
            } else if (number_char(c)) {
                std::size_t start = pos_;
                while (pos_ < text_.size() && number_char(text_[pos_])) advance();
                tok.kind = TokenKind::Number;
                tok.text = std::string(text_.substr(start, pos_ - start));
            } else {
                throw RuleSyntaxError("unexpected character '" + std::string(1, c) + "'",
                                      line_, column_);
            }
            tokens.push_back(std::move(tok));
        }
        tokens.push_back({TokenKind::End, "", line_, column_});
        return tokens;
    }

private:
    void advance() {
        if (text_[pos_] == '\n') {
            ++line_;
            column_ = 1;
        } else {
            ++column_;
        }
        ++pos_;
    }

    std::string_view text_;
    std::size_t pos_ = 0;
    std::size_t line_ = 1;
    std::size_t column_ = 1;
};

class Parser {
public:
    Parser(std::string_view text, const SystemDeclaration& declaration)
        : tokens_(Lexer(text).run()), declaration_(declaration) {}

    std::vector<FuzzyRule> run() {
        std::vector<FuzzyRule> rules;
        while (peek().kind != TokenKind::End) rules.push_back(parse_rule());
        return rules;
    }

private:
    const DslToken& peek() const { return tokens_[idx_]; }
    const DslToken& next() { return tokens_[idx_++]; }

    bool peek_keyword(std::string_view keyword) const {
        return peek().kind == TokenKind::Identifier && lower_copy(peek().text) == keyword;
    }

    void expect_keyword(std::string_view keyword) {
        if (!peek_keyword(keyword))
            throw RuleSyntaxError("expected '" + std::string(keyword) + "', got '" +
                                      describe(peek()) + "'",
                                  peek().line, peek().column);
        ++idx_;
    }

    static std::string describe(const DslToken& tok) {
        return tok.kind == TokenKind::End ? "end of input" : tok.text;
    }

    static bool is_keyword(const std::string& lowered) {
        return lowered == "if" || lowered == "and" || lowered == "then" ||
               lowered == "is" || lowered == "with";
    }

    DslToken expect_name(const char* what) {
        if (peek().kind != TokenKind::Identifier || is_keyword(lower_copy(peek().text)))
            throw RuleSyntaxError(std::string("expected ") + what + ", got '" +
                                      describe(peek()) + "'",
                                  peek().line, peek().column);
        return next();
    }

    FuzzyRule parse_rule() {
        expect_keyword("if");
        FuzzyRule rule;
        for (;;) {
            parse_clause(rule);
            if (peek_keyword("and")) {
                ++idx_;
                continue;
            }
            break;
        }
        expect_keyword("then");
        const DslToken var = expect_name("output variable");
        if (var.text != declaration_.output.name) {
            if (declaration_.input_index(var.text) != LinguisticVariable::npos)
                throw RuleSyntaxError("consequent must use the output variable '" +
                                          declaration_.output.name + "', not input '" +
                                          var.text + "'",
                                      var.line, var.column);
            throw RuleUnknownVariableError("unknown output variable '" + var.text + "'",
                                           var.line, var.column);
        }
        expect_keyword("is");
        const DslToken label = expect_name("output term");
        const std::size_t term = declaration_.output.term_index(label.text);
        if (term == LinguisticVariable::npos)
            throw RuleUnknownTermError("unknown term '" + label.text + "' for variable '" +
                                           declaration_.output.name + "'",
                                       label.line, label.column);
        rule.consequent_term = term;
        if (peek_keyword("with")) {
            ++idx_;
            rule.weight = parse_weight();
        }
        std::sort(rule.antecedents.begin(), rule.antecedents.end());
        return rule;
    }

    void parse_clause(FuzzyRule& rule) {
        const DslToken var = expect_name("input variable");
        const std::size_t input = declaration_.input_index(var.text);
        if (input == LinguisticVariable::npos) {
            if (var.text == declaration_.output.name)
                throw RuleSyntaxError("output variable '" + var.text +
                                          "' cannot appear in an antecedent",
                                      var.line, var.column);
            throw RuleUnknownVariableError("unknown input variable '" + var.text + "'",
                                           var.line, var.column);
        }
        expect_keyword("is");
        const DslToken label = expect_name("term label");
        const std::size_t term = declaration_.inputs[input].term_index(label.text);
        if (term == LinguisticVariable::npos)
            throw RuleUnknownTermError("unknown term '" + label.text + "' for variable '" +
                                           var.text + "'",
                                       label.line, label.column);
        for (const auto& [existing, _] : rule.antecedents)
            if (existing == input)
                throw RuleSyntaxError("duplicate antecedent for variable '" + var.text + "'",
                                      var.line, var.column);
        rule.antecedents.emplace_back(input, term);
    }

    double parse_weight() {
        if (peek().kind != TokenKind::Number)
            throw RuleSyntaxError("expected rule weight after WITH, got '" +
                                      describe(peek()) + "'",
                                  peek().line, peek().column);
        const DslToken tok = next();
        double value = 0.0;
        auto [ptr, ec] = std::from_chars(tok.text.data(), tok.text.data() + tok.text.size(), value);
        if (ec != std::errc() || ptr != tok.text.data() + tok.text.size())
            throw RuleSyntaxError("malformed number '" + tok.text + "'", tok.line, tok.column);
        if (!(value > 0.0 && value <= 1.0))
            throw RuleSyntaxError("rule weight must be in (0,1], got " + tok.text,
                                  tok.line, tok.column);
        return value;
    }

    std::vector<DslToken> tokens_;
    std::size_t idx_ = 0;
    const SystemDeclaration& declaration_;
};

} // namespace

RuleBase parse_rules(std::string_view dsl_text, const SystemDeclaration& declaration) {
    std::vector<FuzzyRule> rules = Parser(dsl_text, declaration).run();
    if (rules.empty())
        throw RuleSyntaxError("rule file contains no rules", 1, 1);
    return RuleBase(std::move(rules), declaration, std::string(dsl_text));
}

RuleBase load_rule_file(const std::string& path, const SystemDeclaration& declaration) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw IoError("cannot open rule file: " + path);
    std::ostringstream buf;
    buf << in.rdbuf();
    return parse_rules(buf.str(), declaration);
}

std::string print_rules(const RuleBase& rule_base, const SystemDeclaration& declaration) {
    std::string out;
    for (const FuzzyRule& rule : rule_base.rules()) {
        out += "IF ";
        bool first = true;
        for (const auto& [var, term] : rule.antecedents) {
            if (!first) out += " AND ";
            first = false;
            out += declaration.inputs[var].name;
            out += " is ";
            out += declaration.inputs[var].terms[term].first;
        }
        out += " THEN ";
        out += declaration.output.name;
        out += " is ";
        out += declaration.output.terms[rule.consequent_term].first;
        if (rule.weight != 1.0) {
            // fixed notation: the DSL number grammar has no exponent form
            char buf[512];
            auto [ptr, ec] = std::to_chars(buf, buf + sizeof(buf), rule.weight,
                                           std::chars_format::fixed);
            out += " WITH ";
            out.append(buf, ptr);
        }
        out += "\n";
    }
    return out;
}

} // namespace fuzzysum
