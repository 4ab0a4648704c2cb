#pragma once

#include <cstdint>
#include <cstddef>
#include <map>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "fairlist/antecedents.hpp"
#include "fairlist/bitvector.hpp"
#include "fairlist/dataset.hpp"

namespace fairlist {

/// One "if (body) then predict" step. The body is an index into an
/// AntecedentSet; the prediction is the label assigned to samples this rule
/// captures first.
struct Rule {
    std::uint32_t antecedent = 0;
    bool prediction = false;

    bool operator==(const Rule&) const = default;
};

/// An ordered rule list with a default prediction. Provenance carries
/// free-form key/value metadata (training settings, dataset digest); it is
/// ignored by structural equality.
struct RuleList {
    std::vector<Rule> rules;
    bool default_prediction = false;
    std::map<std::string, std::string> provenance;

    std::size_t length() const { return rules.size(); }

    bool operator==(const RuleList& o) const {
        return rules == o.rules && default_prediction == o.default_prediction;
    }
};

/// Predictions over a dataset plus, per sample, which rule fired
/// (rules.size() means the default).
struct PredictionVector {
    BitVector predictions;
    std::vector<std::uint32_t> firing_rule;
};

PredictionVector predict(const RuleList& model, const BinaryDataset& data,
                         const AntecedentSet& set);

/// Fraction of samples misclassified.
double error_rate(const RuleList& model, const BinaryDataset& data,
                  const AntecedentSet& set);

/// error + lambda * length: the regularized training objective.
double objective_value(const RuleList& model, const BinaryDataset& data,
                       const AntecedentSet& set, double lambda);

/// Human-readable form:
///   if (body) then (1)
///   else if (body) then (0)
///   else (1)
/// An empty list renders as just "(0)" or "(1)".
std::string to_text(const RuleList& model, const AntecedentSet& set);

/// Inverse of to_text; antecedent names are resolved against `set`.
/// Throws InputError on malformed text or unknown names.
RuleList parse_text(const std::string& text, const AntecedentSet& set);

/// A model decoupled from any antecedent set: rule bodies are carried as
/// literal lists plus display names, so a saved model can be applied to any
/// dataset with the same feature columns.
struct ParsedModel {
    struct Step {
        std::vector<Literal> literals;
        std::string name;
        bool prediction = false;
    };
    std::vector<Step> steps;
    bool default_prediction = false;
    std::map<std::string, std::string> provenance;
};

/// JSON round-trip. to_record embeds each rule's name and literals so
/// from_record needs no mined antecedent set.
std::string to_record(const RuleList& model, const AntecedentSet& set);
ParsedModel from_record(const std::string& json_text);

ParsedModel to_parsed(const RuleList& model, const AntecedentSet& set);

/// Materialize a parsed model against a dataset: builds a minimal
/// AntecedentSet from the model's own literal lists. first = model with
/// antecedent indices into second.
std::pair<RuleList, AntecedentSet> bind(const ParsedModel& model,
                                        const BinaryDataset& data);

/// Re-anchor a parsed model onto an existing mined set (by body name).
/// Throws InputError when a body is missing from the set.
RuleList resolve(const ParsedModel& model, const AntecedentSet& set);

} // namespace fairlist
