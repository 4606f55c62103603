#ifndef FUZZYSUM_RULES_HPP
#define FUZZYSUM_RULES_HPP

#include <string>
#include <string_view>

#include "fuzzysum/fuzzy.hpp"

namespace fuzzysum {

// Parse errors carry the 1-based source position of the offending token.
struct RuleParseError : Error {
    RuleParseError(const std::string& what, std::size_t line_, std::size_t column_)
        : Error(what), line(line_), column(column_) {}
    std::size_t line;
    std::size_t column;
};

struct RuleSyntaxError : RuleParseError {
    using RuleParseError::RuleParseError;
};
struct RuleUnknownVariableError : RuleParseError {
    using RuleParseError::RuleParseError;
};
struct RuleUnknownTermError : RuleParseError {
    using RuleParseError::RuleParseError;
};

// Grammar (keywords case-insensitive, '#' starts a line comment):
//
//   rulefile := { rule | comment | blank }
//   rule     := "IF" clause { "AND" clause } "THEN" var "is" label [ "WITH" number ]
//   clause   := var "is" label
//   var, label := [A-Za-z_][A-Za-z0-9_]*
//   number   := decimal in (0,1]
//
// Throws RuleSyntaxError / RuleUnknownVariableError / RuleUnknownTermError /
// ConflictingRulesError.
RuleBase parse_rules(std::string_view dsl_text, const SystemDeclaration& declaration);

RuleBase load_rule_file(const std::string& path, const SystemDeclaration& declaration);

// Canonical DSL text for a rule base; parse_rules(print_rules(rb)) == rb.
std::string print_rules(const RuleBase& rule_base, const SystemDeclaration& declaration);

} // namespace fuzzysum

#endif
