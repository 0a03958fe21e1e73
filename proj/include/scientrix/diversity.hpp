#pragma once

#include <map>
#include <set>
#include <string>
#include <vector>

#include "scientrix/corpus.hpp"

namespace scientrix {

struct Species {
    std::string label;
    long long abundance = 0;  // >= 1

    friend bool operator==(const Species&, const Species&) = default;
};

struct Distribution {
    std::vector<Species> species;  // sorted by label
    long long total = 0;

    static Distribution from_counts(const std::map<std::string, long long>& counts);
    std::size_t richness() const { return species.size(); }
};

struct DiversityReport {
    double h = 0.0;           // Shannon entropy, nats
    double h_max = 0.0;       // ln S
    double pct_of_max = 0.0;  // 100 when S == 1
    std::size_t richness = 0;
    long long total = 0;
};

// H = -sum p_i ln p_i with p_i = n_i / N; summed in ascending p_i order so
// results are reproducible bit-for-bit.
DiversityReport shannon(const Distribution& dist);

enum class Facet {
    Journal,
    Category,
    KeywordTotal,
    KeywordClusterTerms,
};

// Abundance = number of papers carrying the label; a paper with k categories
// contributes once to each of them. Keyword facets run the co-word
// normalization; KeywordClusterTerms restricts to `retained_terms`.
Distribution distribution_from_papers(const std::vector<Paper>& papers, Facet facet,
                                      const std::set<std::string>* retained_terms = nullptr);

struct TopRow {
    std::string label;
    long long count = 0;
    double percent = 0.0;  // of distinct papers
};

// Species with count >= min_count, sorted by count descending then label
// ascending; percents use the distinct-paper denominator.
std::vector<TopRow> top_table(const Distribution& dist, long long min_count,
                              long long distinct_papers);

}  // namespace scientrix
