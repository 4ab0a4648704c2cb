#include "fairlist/dataset.hpp"

#include <algorithm>
#include <filesystem>
#include <fstream>
#include <sstream>

#include "fairlist/errors.hpp"

namespace fairlist {
namespace {

namespace fs = std::filesystem;

void write_bit_line(std::ostream& out, const std::string& tag, const BitVector& bits) {
    out << '{' << tag << '}';
    for (std::size_t i = 0; i < bits.size(); ++i)
        out << ' ' << (bits.test(i) ? '1' : '0');
    out << '\n';
}

/// Parse "{tag} b0 b1 ..." into (tag, bits). Throws on malformed lines.
std::pair<std::string, BitVector> parse_bit_line(const std::string& line,
                                                 const std::string& file) {
    if (line.empty() || line.front() != '{')
        throw InputError(file + ": expected '{tag} bits...' line");
    const std::size_t close = line.rfind('}');
    if (close == std::string::npos)
        throw InputError(file + ": unterminated tag in line");
    const std::string tag = line.substr(1, close - 1);

    std::vector<bool> bits;
    for (std::size_t i = close + 1; i < line.size(); ++i) {
        const char c = line[i];
        if (c == ' ' || c == '\t' || c == '\r') continue;
        if (c == '0')
            bits.push_back(false);
        else if (c == '1')
            bits.push_back(true);
        else
            throw InputError(file + ": bit for '" + tag + "' is not 0/1");
    }
    return {tag, BitVector::from_bits(bits)};
}

std::vector<std::string> read_lines(const fs::path& path) {
    std::ifstream in(path);
    if (!in) throw InputError("cannot open '" + path.string() + "'");
    std::vector<std::string> lines;
    std::string line;
    while (std::getline(in, line)) {
        if (!line.empty() && line.back() == '\r') line.pop_back();
        if (!line.empty()) lines.push_back(line);
    }
    return lines;
}

} // namespace

BinaryDataset binarize(const RawTable& table) {
    BinaryDataset data;
    const std::size_t m = table.num_rows();
    data.num_samples = m;

    const BinaryMapping label_map = binary_mapping(table, table.label_col);
    const BinaryMapping group_map = binary_mapping(table, table.sensitive_col);
    data.labels = BitVector(m);
    data.group = BitVector(m);
    for (std::size_t r = 0; r < m; ++r) {
        if (label_map.to_bit(table.rows[r][table.label_col])) data.labels.set(r);
        if (group_map.to_bit(table.rows[r][table.sensitive_col])) data.group.set(r);
    }

    for (std::size_t c = 0; c < table.num_cols(); ++c) {
        if (c == table.label_col || c == table.sensitive_col) continue;
        std::vector<std::string> categories;
        for (const auto& row : table.rows)
            if (std::find(categories.begin(), categories.end(), row[c]) ==
                categories.end())
                categories.push_back(row[c]);
        for (const auto& category : categories) {
            BitVector bits(m);
            for (std::size_t r = 0; r < m; ++r)
                if (table.rows[r][c] == category) bits.set(r);
            data.feature_names.push_back(table.columns[c] + ":" + category);
            data.features.push_back(std::move(bits));
        }
    }
    return data;
}

BinaryDataset subset(const BinaryDataset& data, const std::vector<std::size_t>& rows) {
    BinaryDataset out;
    out.num_samples = rows.size();
    out.feature_names = data.feature_names;
    out.labels = BitVector(rows.size());
    out.group = BitVector(rows.size());
    for (std::size_t i = 0; i < rows.size(); ++i) {
        if (data.labels.test(rows[i])) out.labels.set(i);
        if (data.group.test(rows[i])) out.group.set(i);
    }
    out.features.reserve(data.features.size());
    for (const auto& feature : data.features) {
        BitVector bits(rows.size());
        for (std::size_t i = 0; i < rows.size(); ++i)
            if (feature.test(rows[i])) bits.set(i);
        out.features.push_back(std::move(bits));
    }
    return out;
}

void write_dataset(const BinaryDataset& data, const std::string& dir) {
    fs::create_directories(dir);
    {
        std::ofstream out(fs::path(dir) / "features.txt");
        if (!out) throw InputError("cannot write '" + dir + "/features.txt'");
        for (std::size_t f = 0; f < data.features.size(); ++f)
            write_bit_line(out, "feature:" + data.feature_names[f], data.features[f]);
    }
    {
        std::ofstream out(fs::path(dir) / "labels.txt");
        if (!out) throw InputError("cannot write '" + dir + "/labels.txt'");
        write_bit_line(out, "label=0", data.labels.complement());
        write_bit_line(out, "label=1", data.labels);
    }
    {
        std::ofstream out(fs::path(dir) / "group.txt");
        if (!out) throw InputError("cannot write '" + dir + "/group.txt'");
        write_bit_line(out, "group=1", data.group);
    }
}

BinaryDataset read_dataset(const std::string& dir) {
    BinaryDataset data;

    for (const auto& line : read_lines(fs::path(dir) / "features.txt")) {
        auto [tag, bits] = parse_bit_line(line, dir + "/features.txt");
        constexpr const char* kPrefix = "feature:";
        if (tag.rfind(kPrefix, 0) != 0)
            throw InputError(dir + "/features.txt: tag '" + tag +
                             "' lacks 'feature:' prefix");
        data.feature_names.push_back(tag.substr(std::string(kPrefix).size()));
        data.features.push_back(std::move(bits));
    }
    if (data.features.empty())
        throw InputError(dir + "/features.txt: no features");
    data.num_samples = data.features.front().size();
    for (const auto& f : data.features)
        if (f.size() != data.num_samples)
            throw InputError(dir + "/features.txt: inconsistent feature lengths");

    const auto label_lines = read_lines(fs::path(dir) / "labels.txt");
    if (label_lines.size() != 2)
        throw InputError(dir + "/labels.txt: expected exactly two lines");
    BitVector label0, label1;
    for (const auto& line : label_lines) {
        auto [tag, bits] = parse_bit_line(line, dir + "/labels.txt");
        if (tag == "label=0")
            label0 = std::move(bits);
        else if (tag == "label=1")
            label1 = std::move(bits);
        else
            throw InputError(dir + "/labels.txt: unexpected tag '" + tag + "'");
    }
    if (label0.size() != data.num_samples || label1.size() != data.num_samples)
        throw InputError(dir + "/labels.txt: label length mismatch");
    if (label0 != label1.complement())
        throw InputError(dir + "/labels.txt: label=0 and label=1 rows are not complementary");
    data.labels = std::move(label1);

    const auto group_lines = read_lines(fs::path(dir) / "group.txt");
    if (group_lines.size() != 1)
        throw InputError(dir + "/group.txt: expected exactly one line");
    auto [gtag, gbits] = parse_bit_line(group_lines.front(), dir + "/group.txt");
    if (gtag != "group=1")
        throw InputError(dir + "/group.txt: unexpected tag '" + gtag + "'");
    if (gbits.size() != data.num_samples)
        throw InputError(dir + "/group.txt: group length mismatch");
    data.group = std::move(gbits);

    return data;
}

} // namespace fairlist
