#pragma once

#include <compare>
#include <filesystem>
#include <map>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "scientrix/wos_ingest.hpp"

namespace scientrix {

enum class DocTypeKind {
    Article,
    ProceedingsPaper,
    Review,
    Editorial,
    BookReview,
    Other,
};

struct DocType {
    DocTypeKind kind = DocTypeKind::Other;
    std::string other_label;  // uppercased source text, set only for Other

    static DocType from_label(std::string_view label);
    std::string label() const;

    friend bool operator==(const DocType&, const DocType&) = default;
    friend auto operator<=>(const DocType&, const DocType&) = default;
};

struct Address {
    std::string raw;
    std::string organization;  // leading comma segment, uppercased
    std::string city;          // empty when extraction fails
    std::string country;       // normalized, uppercased; empty when extraction fails

    friend bool operator==(const Address&, const Address&) = default;
};

struct Paper {
    std::string uid;
    std::vector<DocType> doc_types;  // sorted, unique
    std::string journal;             // uppercased SO
    std::optional<int> year;
    std::vector<std::string> authors;
    std::vector<Address> addresses;
    std::vector<std::string> author_keywords;
    std::vector<std::string> keywords_plus;
    std::vector<std::string> categories;
    long long citation_count = 0;

    bool has_doc_type(DocTypeKind kind) const;

    friend bool operator==(const Paper&, const Paper&) = default;
};

struct Diagnostic {
    std::string uid;
    std::string severity;  // "warning" | "error"
    std::string message;
};

// Maps the last comma segment of an address to a country name. Patterns are
// anchored regexes tried in order; unmatched segments fall back to the
// verbatim uppercased text (empty if it still carries digits).
class CountryTable {
public:
    static CountryTable builtin();
    static CountryTable load_csv(const std::filesystem::path& path);

    void add_pattern(const std::string& pattern, const std::string& country);
    std::string normalize(std::string_view last_segment) const;

private:
    struct Rule;
    std::vector<Rule> rules_;
};

struct CountryTable::Rule {
    std::string pattern;
    std::string country;
};

Address parse_address(std::string_view raw, const CountryTable& countries);

// One Paper per record; duplicate UTs, missing UT and malformed PY are
// reported through `diags` (duplicates/missing TC as warnings, MissingUid
// and BadYear as errors with the record skipped).
std::vector<Paper> normalize(const std::vector<Record>& records, std::vector<Diagnostic>& diags,
                             const CountryTable& countries = CountryTable::builtin());

// Papers indexed as ARTICLE, PROCEEDINGS PAPER or REVIEW; order preserved.
std::vector<Paper> filter_research(const std::vector<Paper>& papers);

struct YearCount {
    int year = 0;
    std::string doc_type;  // "TOTAL" for the distinct-paper row
    long long count = 0;

    friend bool operator==(const YearCount&, const YearCount&) = default;
};

// Counts per publication year, overall and per document type. Years with no
// papers inside the observed range appear with zero counts; papers without a
// year are skipped.
std::vector<YearCount> output_by_year(const std::vector<Paper>& papers);

}  // namespace scientrix
