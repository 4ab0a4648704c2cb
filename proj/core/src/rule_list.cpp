#include "fairlist/rule_list.hpp"

#include <algorithm>
#include <sstream>

#include <json.hpp>

#include "fairlist/errors.hpp"

namespace fairlist {
namespace {

using nlohmann::json;

void check_model(const RuleList& model, const AntecedentSet& set,
                 const BinaryDataset& data) {
    for (const auto& rule : model.rules) {
        if (rule.antecedent >= set.size())
            throw InputError("model references antecedent id " +
                             std::to_string(rule.antecedent) + " out of range");
        if (set[rule.antecedent].capture.size() != data.num_samples)
            throw InputError("antecedent captures sized for a different dataset");
    }
}

std::string serialize_literals(const std::vector<Literal>& literals) {
    std::string out;
    for (const auto& lit : literals) {
        if (!out.empty()) out += '&';
        out += lit.negated ? '-' : '+';
        out += std::to_string(lit.feature);
    }
    return out;
}

std::vector<Literal> deserialize_literals(const std::string& text) {
    std::vector<Literal> literals;
    std::size_t i = 0;
    while (i < text.size()) {
        const char sign = text[i++];
        if (sign != '+' && sign != '-')
            throw InputError("model literal list '" + text + "' is malformed");
        std::size_t j = i;
        while (j < text.size() && std::isdigit(static_cast<unsigned char>(text[j]))) ++j;
        if (j == i)
            throw InputError("model literal list '" + text + "' is malformed");
        literals.push_back({static_cast<std::uint32_t>(std::stoul(text.substr(i, j - i))),
                            sign == '-'});
        i = j;
        if (i < text.size() && text[i] == '&') ++i;
    }
    return literals;
}

} // namespace

PredictionVector predict(const RuleList& model, const BinaryDataset& data,
                         const AntecedentSet& set) {
    check_model(model, set, data);
    PredictionVector out;
    out.predictions = BitVector(data.num_samples, model.default_prediction);
    out.firing_rule.assign(data.num_samples,
                           static_cast<std::uint32_t>(model.rules.size()));

    BitVector not_captured(data.num_samples, true);
    for (std::size_t k = 0; k < model.rules.size(); ++k) {
        const auto& rule = model.rules[k];
        BitVector fired = set[rule.antecedent].capture;
        fired &= not_captured;
        fired.for_each_set([&](std::size_t i) {
            out.firing_rule[i] = static_cast<std::uint32_t>(k);
            out.predictions.set(i, rule.prediction);
        });
        not_captured.and_not_assign(fired);
    }
    return out;
}

double error_rate(const RuleList& model, const BinaryDataset& data,
                  const AntecedentSet& set) {
    const auto pv = predict(model, data, set);
    const std::size_t wrong =
        BitVector::count_and_not(pv.predictions, data.labels) +
        BitVector::count_and_not(data.labels, pv.predictions);
    return static_cast<double>(wrong) / static_cast<double>(data.num_samples);
}

double objective_value(const RuleList& model, const BinaryDataset& data,
                       const AntecedentSet& set, double lambda) {
    return error_rate(model, data, set) +
           lambda * static_cast<double>(model.length());
}

std::string to_text(const RuleList& model, const AntecedentSet& set) {
    std::ostringstream out;
    if (model.rules.empty()) {
        out << '(' << (model.default_prediction ? 1 : 0) << ")\n";
        return out.str();
    }
    for (std::size_t k = 0; k < model.rules.size(); ++k) {
        const auto& rule = model.rules[k];
        if (rule.antecedent >= set.size())
            throw InputError("model references antecedent id " +
                             std::to_string(rule.antecedent) + " out of range");
        out << (k == 0 ? "if (" : "else if (") << set[rule.antecedent].name
            << ") then (" << (rule.prediction ? 1 : 0) << ")\n";
    }
    out << "else (" << (model.default_prediction ? 1 : 0) << ")\n";
    return out.str();
}

RuleList parse_text(const std::string& text, const AntecedentSet& set) {
    std::vector<std::string> lines;
    std::istringstream in(text);
    std::string line;
    while (std::getline(in, line)) {
        if (!line.empty() && line.back() == '\r') line.pop_back();
        // trim
        const auto b = line.find_first_not_of(" \t");
        const auto e = line.find_last_not_of(" \t");
        if (b == std::string::npos) continue;
        lines.push_back(line.substr(b, e - b + 1));
    }
    if (lines.empty()) throw InputError("model text: empty input");

    auto parse_bit = [](const std::string& s, const std::string& where) -> bool {
        if (s == "0") return false;
        if (s == "1") return true;
        throw InputError("model text: expected (0) or (1) in " + where);
    };

    RuleList model;
    if (lines.size() == 1 && lines[0].front() == '(' && lines[0].back() == ')') {
        model.default_prediction =
            parse_bit(lines[0].substr(1, lines[0].size() - 2), "default line");
        return model;
    }

    for (std::size_t i = 0; i + 1 < lines.size(); ++i) {
        const std::string& l = lines[i];
        const std::string prefix = (i == 0) ? "if (" : "else if (";
        if (l.rfind(prefix, 0) != 0)
            throw InputError("model text: line " + std::to_string(i + 1) +
                             " must start with '" + prefix + "'");
        // Antecedent names may themselves contain parentheses (interval
        // labels), so anchor on the final ") then (".
        const std::size_t marker = l.rfind(") then (");
        if (marker == std::string::npos || l.back() != ')')
            throw InputError("model text: line " + std::to_string(i + 1) +
                             " lacks ') then (pred)'");
        const std::string name = l.substr(prefix.size(), marker - prefix.size());
        const std::string pred =
            l.substr(marker + 8, l.size() - marker - 9);
        const std::size_t id = set.find(name);
        if (id == AntecedentSet::npos)
            throw InputError("model text: unknown antecedent '" + name + "'");
        model.rules.push_back({static_cast<std::uint32_t>(id),
                               parse_bit(pred, "line " + std::to_string(i + 1))});
    }

    const std::string& last = lines.back();
    if (last.rfind("else (", 0) != 0 || last.back() != ')')
        throw InputError("model text: final line must be 'else (pred)'");
    model.default_prediction =
        parse_bit(last.substr(6, last.size() - 7), "default line");
    return model;
}

ParsedModel to_parsed(const RuleList& model, const AntecedentSet& set) {
    ParsedModel out;
    out.default_prediction = model.default_prediction;
    out.provenance = model.provenance;
    for (const auto& rule : model.rules) {
        if (rule.antecedent >= set.size())
            throw InputError("model references antecedent id " +
                             std::to_string(rule.antecedent) + " out of range");
        const auto& a = set[rule.antecedent];
        out.steps.push_back({a.literals, a.name, rule.prediction});
    }
    return out;
}

std::string to_record(const RuleList& model, const AntecedentSet& set) {
    const ParsedModel parsed = to_parsed(model, set);
    json doc;
    doc["rules"] = json::array();
    for (const auto& step : parsed.steps) {
        doc["rules"].push_back({{"antecedent", step.name},
                                {"literals", serialize_literals(step.literals)},
                                {"prediction", step.prediction ? 1 : 0}});
    }
    doc["default"] = parsed.default_prediction ? 1 : 0;
    doc["provenance"] = json::object();
    for (const auto& [key, value] : parsed.provenance) doc["provenance"][key] = value;
    return doc.dump(2) + "\n";
}

ParsedModel from_record(const std::string& json_text) {
    json doc;
    try {
        doc = json::parse(json_text);
    } catch (const json::parse_error& e) {
        throw InputError(std::string("model record: invalid JSON: ") + e.what());
    }
    if (!doc.is_object() || !doc.contains("rules") || !doc.contains("default"))
        throw InputError("model record: missing 'rules' or 'default'");

    ParsedModel out;
    const auto& def = doc["default"];
    if (def.is_number_integer())
        out.default_prediction = def.get<int>() != 0;
    else if (def.is_boolean())
        out.default_prediction = def.get<bool>();
    else
        throw InputError("model record: 'default' must be 0/1");

    for (const auto& entry : doc["rules"]) {
        if (!entry.is_object() || !entry.contains("antecedent") ||
            !entry.contains("prediction"))
            throw InputError("model record: each rule needs antecedent and prediction");
        ParsedModel::Step step;
        step.name = entry["antecedent"].get<std::string>();
        const auto& pred = entry["prediction"];
        if (pred.is_number_integer())
            step.prediction = pred.get<int>() != 0;
        else if (pred.is_boolean())
            step.prediction = pred.get<bool>();
        else
            throw InputError("model record: 'prediction' must be 0/1");
        if (entry.contains("literals"))
            step.literals = deserialize_literals(entry["literals"].get<std::string>());
        out.steps.push_back(std::move(step));
    }
    if (doc.contains("provenance") && doc["provenance"].is_object())
        for (const auto& [key, value] : doc["provenance"].items())
            out.provenance[key] =
                value.is_string() ? value.get<std::string>() : value.dump();
    return out;
}

std::pair<RuleList, AntecedentSet> bind(const ParsedModel& model,
                                        const BinaryDataset& data) {
    std::vector<std::vector<Literal>> bodies;
    std::vector<std::string> names;
    for (const auto& step : model.steps) {
        if (step.literals.empty())
            throw InputError("model record lacks literal lists; cannot bind '" +
                             step.name + "' to a dataset");
        bodies.push_back(step.literals);
        names.push_back(step.name);
    }
    AntecedentSet set = capture_antecedents(bodies, names, data);

    RuleList list;
    list.default_prediction = model.default_prediction;
    list.provenance = model.provenance;
    for (std::size_t k = 0; k < model.steps.size(); ++k)
        list.rules.push_back({static_cast<std::uint32_t>(k), model.steps[k].prediction});
    return {std::move(list), std::move(set)};
}

RuleList resolve(const ParsedModel& model, const AntecedentSet& set) {
    RuleList list;
    list.default_prediction = model.default_prediction;
    list.provenance = model.provenance;
    for (const auto& step : model.steps) {
        const std::size_t id = set.find(step.name);
        if (id == AntecedentSet::npos)
            throw InputError("model rule '" + step.name +
                             "' not found in antecedent set");
        list.rules.push_back({static_cast<std::uint32_t>(id), step.prediction});
    }
    return list;
}

} // namespace fairlist
