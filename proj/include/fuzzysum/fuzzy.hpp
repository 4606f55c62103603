#ifndef FUZZYSUM_FUZZY_HPP
#define FUZZYSUM_FUZZY_HPP

#include <map>
#include <string>
#include <utility>
#include <vector>

#include "fuzzysum/errors.hpp"

namespace fuzzysum {

struct UnknownVariableError : Error {
    explicit UnknownVariableError(const std::string& what) : Error(what) {}
};
struct UnknownTermError : Error {
    explicit UnknownTermError(const std::string& what) : Error(what) {}
};
struct OutOfUniverseError : Error {
    explicit OutOfUniverseError(const std::string& what) : Error(what) {}
};
struct MissingInputError : Error {
    explicit MissingInputError(const std::string& what) : Error(what) {}
};
struct ConflictingRulesError : Error {
    explicit ConflictingRulesError(const std::string& what) : Error(what) {}
};

// Triangle with feet a and c and peak b. a == b or b == c gives a shoulder:
// the vertical side is treated as full membership instead of a 0/0 slope.
struct TriangularMF {
    double a = 0.0;
    double b = 0.0;
    double c = 1.0;

    TriangularMF() = default;
    TriangularMF(double a_, double b_, double c_); // validates a <= b <= c, not all equal

    double eval(double x) const;
};

double mf_eval(const TriangularMF& mf, double x);

struct LinguisticVariable {
    std::string name;
    double lo = 0.0;
    double hi = 1.0;
    std::vector<std::pair<std::string, TriangularMF>> terms;

    LinguisticVariable() = default;
    // validates unique labels, supports inside [lo,hi], full coverage
    LinguisticVariable(std::string name_, double lo_, double hi_,
                       std::vector<std::pair<std::string, TriangularMF>> terms_);

    static constexpr std::size_t npos = std::size_t(-1);
    std::size_t term_index(const std::string& label) const;
};

// Five evenly spaced triangles over [0,1] with shoulder ends:
// VL (0,0,.25), L (0,.25,.5), M (.25,.5,.75), H (.5,.75,1), VH (.75,1,1).
LinguisticVariable five_term_unit_variable(std::string name);

// Unimportant (0,0,.5), Average (0,.5,1), Important (.5,1,1).
LinguisticVariable importance_output_variable();

// Input and output vocabulary rules are written against.
struct SystemDeclaration {
    std::vector<LinguisticVariable> inputs;
    LinguisticVariable output;

    std::size_t input_index(const std::string& name) const;
};

// The eight feature inputs plus the "importance" output.
SystemDeclaration make_summarizer_declaration();

// IF <antecedents> THEN <output is term> [WITH weight]. Antecedents are
// (input index, term index) pairs sorted by input index; inputs that do not
// appear are wildcards. Weight scales the firing strength, default 1.
struct FuzzyRule {
    std::vector<std::pair<std::size_t, std::size_t>> antecedents;
    std::size_t consequent_term = 0;
    double weight = 1.0;

    bool operator==(const FuzzyRule&) const = default;
};

class RuleBase {
public:
    // rejects empty bases, rules without antecedents, out-of-range indices,
    // and pairs of rules with equal antecedents but different consequents
    RuleBase(std::vector<FuzzyRule> rules, const SystemDeclaration& declaration,
             std::string source_text = {});

    const std::vector<FuzzyRule>& rules() const { return rules_; }
    const std::string& source_text() const { return source_text_; }
    bool operator==(const RuleBase& other) const { return rules_ == other.rules_; }

private:
    std::vector<FuzzyRule> rules_;
    std::string source_text_;
};

// Aggregated Mamdani output: max over terms of the clipped term MFs.
class OutputCurve {
public:
    OutputCurve(LinguisticVariable output, std::vector<double> activations);

    double operator()(double y) const;
    double lo() const { return output_.lo; }
    double hi() const { return output_.hi; }
    const std::vector<double>& activations() const { return activations_; }

private:
    LinguisticVariable output_;
    std::vector<double> activations_;
};

// Mean of y weighted by membership over evenly spaced samples; the midpoint
// of the universe when the curve is flat zero (no rule fired).
double defuzzify_centroid(const OutputCurve& curve, int resolution);

class FuzzySystem {
public:
    // resolution is the defuzzifier sample count, at least 101
    FuzzySystem(SystemDeclaration declaration, RuleBase rules, int resolution = 1001);

    const SystemDeclaration& declaration() const { return declaration_; }
    const RuleBase& rule_base() const { return rules_; }
    int resolution() const { return resolution_; }

    // membership degree per term of one input variable
    std::map<std::string, double> fuzzify(const std::string& input_name, double x) const;

    OutputCurve infer(const std::map<std::string, double>& inputs) const;
    double evaluate(const std::map<std::string, double>& inputs) const;

private:
    double clamp_to_universe(const LinguisticVariable& var, double x) const;

    SystemDeclaration declaration_;
    RuleBase rules_;
    int resolution_;
};

} // namespace fuzzysum

#endif
