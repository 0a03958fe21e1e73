#pragma once

#include <string>
#include <string_view>
#include <vector>

#include "scientrix/corpus.hpp"

namespace scientrix {

enum class CoopClass {
    SingleAuthor,
    NationalCoop,
    InternationalCoop,
    Unclassifiable,
};

std::string coop_class_label(CoopClass c);

// Single author beats everything; otherwise the distinct-country count of
// the parsed addresses decides. Multi-author papers without one parseable
// country are unclassifiable.
CoopClass classify(const Paper& paper);

struct CoopRow {
    CoopClass cls = CoopClass::Unclassifiable;
    long long count = 0;
    double percent = 0.0;         // of distinct papers
    double mean_citations = 0.0;  // 0 for empty classes
};

// One row per class in enum order; percents use the paper-list size.
std::vector<CoopRow> coop_summary(const std::vector<Paper>& papers);

struct CityTally {
    std::string city;
    long long count = 0;
    double percent = 0.0;
};

// Papers counted once per distinct city among addresses whose organization
// starts with `organization_prefix`; rows below threshold_pct are dropped
// and the rest sorted alphabetically.
std::vector<CityTally> city_tally(const std::vector<Paper>& papers,
                                  std::string_view organization_prefix, double threshold_pct);

}  // namespace scientrix
