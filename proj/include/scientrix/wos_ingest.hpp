#pragma once

#include <istream>
#include <ostream>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "scientrix/errors.hpp"

namespace scientrix {

// One parsed field-tagged record: field order and value line order are
// preserved exactly as read. Equality compares fields only, not source
// positions, so round-tripped records compare equal.
struct Record {
    using Field = std::pair<std::string, std::vector<std::string>>;

    std::vector<Field> fields;
    std::size_t source_line = 0;

    const std::vector<std::string>* find(std::string_view tag) const;
    bool has(std::string_view tag) const { return find(tag) != nullptr; }

    friend bool operator==(const Record& a, const Record& b) { return a.fields == b.fields; }
};

// Two characters, each A-Z or 0-9.
bool valid_tag(std::string_view tag);

// Parses a field-tagged export stream: optional FN/VR header, "XX value"
// field lines, three-space continuations, ER record terminator, EF file
// terminator. Input must be UTF-8; CRLF and LF line endings both accepted.
std::vector<Record> parse_export(std::istream& in);
std::vector<Record> parse_export_text(std::string_view text);

void serialize_records(const std::vector<Record>& records, std::ostream& out);
std::string serialize_records_text(const std::vector<Record>& records);

}  // namespace scientrix
