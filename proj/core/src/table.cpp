#include "fairlist/table.hpp"

#include <algorithm>
#include <cctype>
#include <fstream>
#include <sstream>
#include <utility>

namespace fairlist {
namespace {

void strip_in_place(std::string& s) {
    auto not_space = [](unsigned char c) { return !std::isspace(c); };
    s.erase(s.begin(), std::find_if(s.begin(), s.end(), not_space));
    s.erase(std::find_if(s.rbegin(), s.rend(), not_space).base(), s.end());
}

std::string lowercase(std::string s) {
    std::transform(s.begin(), s.end(), s.begin(),
                   [](unsigned char c) { return static_cast<char>(std::tolower(c)); });
    return s;
}

} // namespace

// Quoted fields, doubled-quote escapes, embedded separators/newlines. A quote
// opens a field only at its start; stray quotes elsewhere stay literal.
std::vector<std::vector<std::string>> parse_csv_rows(const std::string& text) {
    std::vector<std::vector<std::string>> rows;
    std::vector<std::string> fields;
    std::string cur;
    bool in_quotes = false;
    bool was_quoted = false;
    bool field_started = false;

    auto end_field = [&] {
        if (!was_quoted) strip_in_place(cur);
        fields.push_back(std::move(cur));
        cur.clear();
        was_quoted = false;
        field_started = false;
    };
    auto end_row = [&] {
        end_field();
        const bool blank_line = fields.size() == 1 && fields[0].empty();
        if (!blank_line) rows.push_back(std::move(fields));
        fields.clear();
    };

    for (std::size_t i = 0; i < text.size(); ++i) {
        const char c = text[i];
        if (in_quotes) {
            if (c == '"') {
                if (i + 1 < text.size() && text[i + 1] == '"') {
                    cur += '"';
                    ++i;
                } else {
                    in_quotes = false;
                }
            } else {
                cur += c;
            }
            continue;
        }
        switch (c) {
        case '"':
            if (!field_started && cur.find_first_not_of(" \t") == std::string::npos) {
                cur.clear();
                in_quotes = true;
                was_quoted = true;
                field_started = true;
            } else {
                cur += c;
            }
            break;
        case ',':
            end_field();
            break;
        case '\r':
            if (i + 1 < text.size() && text[i + 1] == '\n') ++i;
            end_row();
            break;
        case '\n':
            end_row();
            break;
        default:
            cur += c;
            field_started = field_started || !std::isspace(static_cast<unsigned char>(c));
            break;
        }
    }
    if (in_quotes) throw InputError("csv: unterminated quoted field");
    if (!cur.empty() || !fields.empty() || was_quoted) end_row();
    return rows;
}

std::string csv_escape(const std::string& value) {
    if (value.find_first_of(",\"\n\r") == std::string::npos) return value;
    std::string out = "\"";
    for (const char c : value) {
        if (c == '"') out += '"';
        out += c;
    }
    out += '"';
    return out;
}

std::size_t RawTable::column_index(const std::string& name) const {
    const auto it = std::find(columns.begin(), columns.end(), name);
    if (it == columns.end())
        throw InputError("csv: no column named '" + name + "'");
    return static_cast<std::size_t>(it - columns.begin());
}

RawTable parse_csv(const std::string& text,
                   const std::string& label_column,
                   const std::string& sensitive_column) {
    auto rows = parse_csv_rows(text);
    if (rows.empty()) throw InputError("csv: empty input");

    RawTable table;
    table.columns = std::move(rows.front());

    for (std::size_t r = 1; r < rows.size(); ++r) {
        auto& row = rows[r];
        if (row.size() != table.columns.size()) {
            std::ostringstream msg;
            msg << "csv: row " << r + 1 << " has " << row.size()
                << " fields, expected " << table.columns.size();
            throw InputError(msg.str());
        }
        const bool complete =
            std::none_of(row.begin(), row.end(),
                         [](const std::string& cell) { return cell.empty(); });
        if (complete)
            table.rows.push_back(std::move(row));
        else
            ++table.dropped_rows;
    }

    table.label_col = table.column_index(label_column);
    table.sensitive_col = table.column_index(sensitive_column);
    if (table.label_col == table.sensitive_col)
        throw InputError("csv: label and sensitive columns must differ");
    if (table.rows.empty())
        throw InputError("csv: no complete data rows");
    return table;
}

RawTable load_csv(const std::string& path,
                  const std::string& label_column,
                  const std::string& sensitive_column) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw InputError("cannot open '" + path + "'");
    std::ostringstream buf;
    buf << in.rdbuf();
    return parse_csv(buf.str(), label_column, sensitive_column);
}

bool BinaryMapping::to_bit(const std::string& cell) const {
    if (cell == one_value) return true;
    if (cell == zero_value) return false;
    throw InputError("value '" + cell + "' is neither '" + zero_value +
                     "' nor '" + one_value + "'");
}

BinaryMapping binary_mapping(const RawTable& table, std::size_t col) {
    std::vector<std::string> distinct;
    for (const auto& row : table.rows) {
        const std::string& cell = row[col];
        if (std::find(distinct.begin(), distinct.end(), cell) == distinct.end()) {
            distinct.push_back(cell);
            if (distinct.size() > 2)
                throw InputError("column '" + table.columns[col] +
                                 "' has more than two distinct values");
        }
    }
    if (distinct.size() < 2)
        throw InputError("column '" + table.columns[col] +
                         "' has fewer than two distinct values");

    static constexpr std::pair<const char*, const char*> kKnown[] = {
        {"0", "1"}, {"false", "true"}, {"no", "yes"}, {"f", "t"}, {"n", "y"}};
    const std::string a = lowercase(distinct[0]);
    const std::string b = lowercase(distinct[1]);
    for (const auto& [zero, one] : kKnown) {
        if (a == zero && b == one) return {distinct[0], distinct[1]};
        if (b == zero && a == one) return {distinct[1], distinct[0]};
    }
    std::sort(distinct.begin(), distinct.end());
    return {distinct[0], distinct[1]};
}

} // namespace fairlist
