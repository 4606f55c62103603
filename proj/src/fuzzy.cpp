#include "fuzzysum/fuzzy.hpp"

#include <algorithm>
#include <cmath>
#include <set>

namespace fuzzysum {

TriangularMF::TriangularMF(double a_, double b_, double c_) : a(a_), b(b_), c(c_) {
    if (!(a <= b && b <= c)) throw Error("triangular MF needs a <= b <= c");
    if (a == c) throw Error("triangular MF must not be a single point");
}

double TriangularMF::eval(double x) const {
    if (b > a && c > b)
        return std::max(std::min((x - a) / (b - a), (c - x) / (c - b)), 0.0);
    if (x < a || x > c) return 0.0;
    if (a == b) return (c - x) / (c - b); // left shoulder
    return (x - a) / (b - a);             // right shoulder
}

double mf_eval(const TriangularMF& mf, double x) { return mf.eval(x); }

LinguisticVariable::LinguisticVariable(std::string name_, double lo_, double hi_,
                                       std::vector<std::pair<std::string, TriangularMF>> terms_)
    : name(std::move(name_)), lo(lo_), hi(hi_), terms(std::move(terms_)) {
    if (!(lo < hi)) throw Error(name + ": universe is empty");
    if (terms.empty()) throw Error(name + ": no terms");
    std::set<std::string> labels;
    for (const auto& [label, mf] : terms) {
        if (!labels.insert(label).second)
            throw Error(name + ": duplicate term label '" + label + "'");
        if (mf.a < lo || mf.c > hi)
            throw Error(name + ": term '" + label + "' leaves the universe");
    }
    // Membership curves are piecewise linear with kinks only at MF
    // parameters, so positive membership at every breakpoint implies
    // positive max-membership on the whole universe.
    std::set<double> breakpoints{lo, hi};
    for (const auto& [label, mf] : terms) {
        breakpoints.insert(mf.a);
        breakpoints.insert(mf.b);
        breakpoints.insert(mf.c);
    }
    for (double x : breakpoints) {
        if (x < lo || x > hi) continue;
        double best = 0.0;
        for (const auto& [label, mf] : terms) best = std::max(best, mf.eval(x));
        if (best <= 0.0)
            throw Error(name + ": no term covers x = " + std::to_string(x));
    }
}

std::size_t LinguisticVariable::term_index(const std::string& label) const {
    for (std::size_t i = 0; i < terms.size(); ++i)
        if (terms[i].first == label) return i;
    return npos;
}

LinguisticVariable five_term_unit_variable(std::string name) {
    return LinguisticVariable(
        std::move(name), 0.0, 1.0,
        {{"VL", TriangularMF(0.0, 0.0, 0.25)},
         {"L", TriangularMF(0.0, 0.25, 0.5)},
         {"M", TriangularMF(0.25, 0.5, 0.75)},
         {"H", TriangularMF(0.5, 0.75, 1.0)},
         {"VH", TriangularMF(0.75, 1.0, 1.0)}});
}

LinguisticVariable importance_output_variable() {
    return LinguisticVariable(
        "importance", 0.0, 1.0,
        {{"Unimportant", TriangularMF(0.0, 0.0, 0.5)},
         {"Average", TriangularMF(0.0, 0.5, 1.0)},
         {"Important", TriangularMF(0.5, 1.0, 1.0)}});
}

std::size_t SystemDeclaration::input_index(const std::string& name) const {
    for (std::size_t i = 0; i < inputs.size(); ++i)
        if (inputs[i].name == name) return i;
    return LinguisticVariable::npos;
}

SystemDeclaration make_summarizer_declaration() {
    SystemDeclaration decl;
    decl.inputs.push_back(five_term_unit_variable("f1_title"));
    decl.inputs.push_back(five_term_unit_variable("f2_length"));
    decl.inputs.push_back(five_term_unit_variable("f3_term_weight"));
    decl.inputs.push_back(five_term_unit_variable("f4_position"));
    decl.inputs.push_back(five_term_unit_variable("f5_similarity"));
    decl.inputs.push_back(five_term_unit_variable("f6_proper_noun"));
    decl.inputs.push_back(five_term_unit_variable("f7_thematic"));
    decl.inputs.push_back(five_term_unit_variable("f8_numeric"));
    decl.output = importance_output_variable();
    return decl;
}

RuleBase::RuleBase(std::vector<FuzzyRule> rules, const SystemDeclaration& declaration,
                   std::string source_text)
    : rules_(std::move(rules)), source_text_(std::move(source_text)) {
    if (rules_.empty()) throw Error("rule base is empty");
    for (const FuzzyRule& rule : rules_) {
        if (rule.antecedents.empty()) throw Error("rule without antecedents");
        if (rule.consequent_term >= declaration.output.terms.size())
            throw UnknownTermError("rule consequent term index out of range");
        if (!(rule.weight > 0.0 && rule.weight <= 1.0))
            throw Error("rule weight must be in (0,1]");
        std::size_t prev = LinguisticVariable::npos;
        for (const auto& [var, term] : rule.antecedents) {
            if (var >= declaration.inputs.size())
                throw UnknownVariableError("rule antecedent variable index out of range");
            if (term >= declaration.inputs[var].terms.size())
                throw UnknownTermError("rule antecedent term index out of range");
            if (prev != LinguisticVariable::npos && var <= prev)
                throw Error("rule antecedents must be sorted and unique per variable");
            prev = var;
        }
    }
    for (std::size_t i = 0; i < rules_.size(); ++i) {
        for (std::size_t j = i + 1; j < rules_.size(); ++j) {
            if (rules_[i].antecedents == rules_[j].antecedents &&
                rules_[i].consequent_term != rules_[j].consequent_term)
                throw ConflictingRulesError(
                    "rules " + std::to_string(i + 1) + " and " + std::to_string(j + 1) +
                    " share antecedents but disagree on the consequent");
        }
    }
}

OutputCurve::OutputCurve(LinguisticVariable output, std::vector<double> activations)
    : output_(std::move(output)), activations_(std::move(activations)) {
    if (activations_.size() != output_.terms.size())
        throw Error("one activation per output term required");
}

double OutputCurve::operator()(double y) const {
    double best = 0.0;
    for (std::size_t i = 0; i < activations_.size(); ++i)
        best = std::max(best, std::min(activations_[i], output_.terms[i].second.eval(y)));
    return best;
}

double defuzzify_centroid(const OutputCurve& curve, int resolution) {
    if (resolution < 2) throw Error("defuzzifier resolution too small");
    const double lo = curve.lo();
    const double hi = curve.hi();
    const double step = (hi - lo) / double(resolution - 1);
    double num = 0.0;
    double den = 0.0;
    for (int i = 0; i < resolution; ++i) {
        const double y = lo + step * double(i);
        const double mu = curve(y);
        num += y * mu;
        den += mu;
    }
    if (den <= 0.0) return (lo + hi) / 2.0; // nothing fired
    return num / den;
}

FuzzySystem::FuzzySystem(SystemDeclaration declaration, RuleBase rules, int resolution)
    : declaration_(std::move(declaration)), rules_(std::move(rules)), resolution_(resolution) {
    if (resolution_ < 101) throw Error("defuzzifier resolution must be at least 101");
    if (declaration_.output.lo != 0.0 || declaration_.output.hi != 1.0)
        throw Error("output universe must be [0,1]");
    // the rule base may have been validated against a different declaration
    for (const FuzzyRule& rule : rules_.rules()) {
        if (rule.consequent_term >= declaration_.output.terms.size())
            throw UnknownTermError("rule consequent term index out of range");
        for (const auto& [var, term] : rule.antecedents) {
            if (var >= declaration_.inputs.size())
                throw UnknownVariableError("rule antecedent variable index out of range");
            if (term >= declaration_.inputs[var].terms.size())
                throw UnknownTermError("rule antecedent term index out of range");
        }
    }
}

double FuzzySystem::clamp_to_universe(const LinguisticVariable& var, double x) const {
    constexpr double kSlack = 1e-9;
    if (x < var.lo - kSlack || x > var.hi + kSlack)
        throw OutOfUniverseError(var.name + ": value " + std::to_string(x) +
                                 " outside [" + std::to_string(var.lo) + ", " +
                                 std::to_string(var.hi) + "]");
    return std::clamp(x, var.lo, var.hi);
}

std::map<std::string, double> FuzzySystem::fuzzify(const std::string& input_name,
                                                   double x) const {
    const std::size_t idx = declaration_.input_index(input_name);
    if (idx == LinguisticVariable::npos)
        throw UnknownVariableError("unknown input variable '" + input_name + "'");
    const LinguisticVariable& var = declaration_.inputs[idx];
    const double cx = clamp_to_universe(var, x);
    std::map<std::string, double> degrees;
    for (const auto& [label, mf] : var.terms) degrees[label] = mf.eval(cx);
    return degrees;
}

OutputCurve FuzzySystem::infer(const std::map<std::string, double>& inputs) const {
    std::vector<double> crisp(declaration_.inputs.size());
    for (std::size_t i = 0; i < declaration_.inputs.size(); ++i) {
        auto it = inputs.find(declaration_.inputs[i].name);
        if (it == inputs.end())
            throw MissingInputError("missing input '" + declaration_.inputs[i].name + "'");
        crisp[i] = clamp_to_universe(declaration_.inputs[i], it->second);
    }
    for (const auto& [name, value] : inputs)
        if (declaration_.input_index(name) == LinguisticVariable::npos)
            throw UnknownVariableError("unknown input variable '" + name + "'");

    std::vector<double> activations(declaration_.output.terms.size(), 0.0);
    for (const FuzzyRule& rule : rules_.rules()) {
        double strength = 1.0;
        for (const auto& [var, term] : rule.antecedents) {
            strength = std::min(strength,
                                declaration_.inputs[var].terms[term].second.eval(crisp[var]));
            if (strength <= 0.0) break;
        }
        strength *= rule.weight;
        activations[rule.consequent_term] = std::max(activations[rule.consequent_term], strength);
    }
    return OutputCurve(declaration_.output, std::move(activations));
}

double FuzzySystem::evaluate(const std::map<std::string, double>& inputs) const {
    return defuzzify_centroid(infer(inputs), resolution_);
}

} // namespace fuzzysum
