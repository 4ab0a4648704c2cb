#pragma once

#include <cstddef>
#include <string>
#include <vector>

#include "fairlist/errors.hpp"

namespace fairlist {

/// A parsed CSV: header plus string cells. Rows containing an empty cell are
/// dropped at load time (and counted), so downstream code only sees complete
/// rows. Cell values arrive stripped of surrounding whitespace.
struct RawTable {
    std::vector<std::string> columns;
    std::vector<std::vector<std::string>> rows;
    std::size_t label_col = 0;
    std::size_t sensitive_col = 0;
    std::size_t dropped_rows = 0;

    std::size_t num_rows() const { return rows.size(); }
    std::size_t num_cols() const { return columns.size(); }

    /// Index of a named column; throws InputError if absent.
    std::size_t column_index(const std::string& name) const;
};

/// RFC 4180-style CSV reader: quoted fields, doubled-quote escapes, embedded
/// newlines and commas inside quotes. CRLF and LF both accepted. Throws
/// InputError for unreadable files, ragged rows, or missing label/sensitive
/// columns.
RawTable load_csv(const std::string& path,
                  const std::string& label_column,
                  const std::string& sensitive_column);

/// Parse CSV text directly (same rules as load_csv). Used by tests.
RawTable parse_csv(const std::string& text,
                   const std::string& label_column,
                   const std::string& sensitive_column);

/// Split CSV text into rows of fields (quoting rules as above, blank lines
/// skipped) without any header interpretation.
std::vector<std::vector<std::string>> parse_csv_rows(const std::string& text);

/// Quote a value for CSV output when it contains a separator, quote, or
/// newline.
std::string csv_escape(const std::string& value);

/// How a two-valued column maps onto {0,1}. Recognized true/false spellings
/// (case-insensitive: 0/1, false/true, no/yes, f/t, n/y) keep their natural
/// polarity; any other pair of distinct values maps the lexicographically
/// smaller one to 0. Columns with one or more than two distinct values are
/// rejected.
struct BinaryMapping {
    std::string zero_value;
    std::string one_value;

    bool to_bit(const std::string& cell) const;
};

BinaryMapping binary_mapping(const RawTable& table, std::size_t col);

} // namespace fairlist
