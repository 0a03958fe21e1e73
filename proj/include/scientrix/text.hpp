#pragma once

#include <string>
#include <string_view>
#include <vector>

namespace scientrix {

std::string trim(std::string_view s);

// ASCII uppercase; bytes outside A-Z pass through untouched.
std::string to_upper(std::string_view s);

std::vector<std::string> split(std::string_view s, char delim);

// Split, trim each piece, drop empties.
std::vector<std::string> split_trimmed(std::string_view s, char delim);

std::string join(const std::vector<std::string>& parts, std::string_view sep);

std::string collapse_spaces(std::string_view s);

// RFC 4180 quoting: fields with commas, quotes or newlines get wrapped.
std::string csv_escape(std::string_view field);

// Parses one CSV line honoring double-quote escaping.
std::vector<std::string> csv_parse_line(std::string_view line);

// Byte offset of the first invalid UTF-8 sequence, or npos if clean.
std::size_t find_invalid_utf8(std::string_view bytes);

std::string format_double(double v, int decimals);

}  // namespace scientrix
