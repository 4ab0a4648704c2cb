#include "fairlist/antecedents.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <fstream>
#include <sstream>

#include "fairlist/errors.hpp"
#include "fairlist/table.hpp"

namespace fairlist {
namespace {

BitVector capture_of(const std::vector<Literal>& literals, const BinaryDataset& data) {
    BitVector bits(data.num_samples, true);
    for (const auto& lit : literals) {
        if (lit.feature >= data.num_features())
            throw InputError("antecedent references feature index " +
                             std::to_string(lit.feature) + " out of range");
        if (lit.negated)
            bits.and_not_assign(data.features[lit.feature]);
        else
            bits &= data.features[lit.feature];
    }
    return bits;
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
            throw InputError("antecedent literal list '" + text + "' is malformed");
        std::size_t j = i;
        while (j < text.size() && std::isdigit(static_cast<unsigned char>(text[j]))) ++j;
        if (j == i)
            throw InputError("antecedent literal list '" + text + "' is malformed");
        literals.push_back({static_cast<std::uint32_t>(std::stoul(text.substr(i, j - i))),
                            sign == '-'});
        i = j;
        if (i < text.size()) {
            if (text[i] != '&')
                throw InputError("antecedent literal list '" + text + "' is malformed");
            ++i;
        }
    }
    if (literals.empty())
        throw InputError("antecedent literal list is empty");
    return literals;
}

} // namespace

std::size_t AntecedentSet::find(const std::string& name) const {
    for (std::size_t i = 0; i < items.size(); ++i)
        if (items[i].name == name) return i;
    return npos;
}

std::string antecedent_name(const std::vector<Literal>& literals,
                            const std::vector<std::string>& feature_names) {
    std::string out;
    for (const auto& lit : literals) {
        if (!out.empty()) out += " && ";
        if (lit.negated) out += "not ";
        out += feature_names.at(lit.feature);
    }
    return out;
}

AntecedentSet mine_antecedents(const BinaryDataset& data, const MiningConfig& config) {
    AntecedentSet set;
    const std::size_t n = data.num_features();
    const auto min_count = static_cast<std::size_t>(
        std::ceil(config.min_support * static_cast<double>(data.num_samples)));

    auto add = [&](std::vector<Literal> literals, BitVector capture) {
        Antecedent a;
        a.support = capture.count();
        a.capture = std::move(capture);
        a.name = antecedent_name(literals, data.feature_names);
        a.literals = std::move(literals);
        set.items.push_back(std::move(a));
    };

    for (std::uint32_t f = 0; f < n; ++f)
        add({{f, false}}, data.features[f]);
    if (config.include_negations)
        for (std::uint32_t f = 0; f < n; ++f)
            add({{f, true}}, data.features[f].complement());
    if (config.max_clause_arity >= 2) {
        for (std::uint32_t i = 0; i + 1 < n; ++i) {
            for (std::uint32_t j = i + 1; j < n; ++j) {
                if (BitVector::count_and(data.features[i], data.features[j]) < min_count)
                    continue;
                add({{i, false}, {j, false}},
                    data.features[i] & data.features[j]);
            }
        }
    }
    return set;
}

AntecedentSet subset_antecedents(const AntecedentSet& set,
                                 const BinaryDataset& subset_data,
                                 const std::vector<std::size_t>& rows) {
    AntecedentSet out;
    out.items.reserve(set.size());
    for (const auto& item : set.items) {
        Antecedent a;
        a.literals = item.literals;
        a.name = item.name;
        a.capture = BitVector(rows.size());
        for (std::size_t i = 0; i < rows.size(); ++i)
            if (item.capture.test(rows[i])) a.capture.set(i);
        a.support = a.capture.count();
        out.items.push_back(std::move(a));
    }
    (void)subset_data;
    return out;
}

AntecedentSet capture_antecedents(const std::vector<std::vector<Literal>>& bodies,
                                  const std::vector<std::string>& names,
                                  const BinaryDataset& data) {
    if (bodies.size() != names.size())
        throw InputError("antecedents: bodies/names size mismatch");
    AntecedentSet set;
    set.items.reserve(bodies.size());
    for (std::size_t i = 0; i < bodies.size(); ++i) {
        Antecedent a;
        a.capture = capture_of(bodies[i], data);
        a.support = a.capture.count();
        a.literals = bodies[i];
        a.name = names[i];
        set.items.push_back(std::move(a));
    }
    return set;
}

void write_antecedents_csv(const AntecedentSet& set, const std::string& path) {
    std::ofstream out(path);
    if (!out) throw InputError("cannot write '" + path + "'");
    out << "id,name,support,literals\n";
    for (std::size_t i = 0; i < set.size(); ++i) {
        const auto& a = set[i];
        out << i << ',' << csv_escape(a.name) << ',' << a.support << ','
            << serialize_literals(a.literals) << '\n';
    }
}

AntecedentSet read_antecedents_csv(const std::string& path, const BinaryDataset& data) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw InputError("cannot open '" + path + "'");
    std::ostringstream buf;
    buf << in.rdbuf();
    const auto rows = parse_csv_rows(buf.str());
    if (rows.empty() || rows.front() != std::vector<std::string>{"id", "name", "support", "literals"})
        throw InputError(path + ": expected header id,name,support,literals");

    AntecedentSet set;
    for (std::size_t r = 1; r < rows.size(); ++r) {
        const auto& row = rows[r];
        if (row.size() != 4)
            throw InputError(path + ": row " + std::to_string(r + 1) +
                             " has wrong field count");
        Antecedent a;
        a.literals = deserialize_literals(row[3]);
        a.name = row[1];
        a.capture = capture_of(a.literals, data);
        a.support = a.capture.count();
        const auto stored = static_cast<std::size_t>(std::stoull(row[2]));
        if (stored != a.support)
            throw InputError(path + ": support mismatch for '" + a.name +
                             "' (stored " + std::to_string(stored) + ", dataset gives " +
                             std::to_string(a.support) + ") — wrong dataset?");
        set.items.push_back(std::move(a));
    }
    return set;
}

} // namespace fairlist
