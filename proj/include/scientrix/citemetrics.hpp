#pragma once

#include <filesystem>
#include <map>
#include <string>
#include <utility>
#include <vector>

#include "scientrix/corpus.hpp"
#include "scientrix/rational.hpp"

namespace scientrix {

struct PeerMember {
    std::string uid;
    long long citations = 0;
};

// All papers of one document type published in the same journal in the same
// year; the ranking universe for the percentile rank index.
struct PeerSet {
    std::string journal;
    int year = 0;
    DocType doc_type;
    std::vector<PeerMember> members;

    long long size() const { return static_cast<long long>(members.size()); }
};

struct PriResult {
    std::string uid;
    std::string journal;
    int year = 0;
    Rational rank;        // tie-averaged citation rank, 1 = most cited
    long long set_size = 0;
    Rational pri;         // (N - R + 1) / N * 100
};

struct Baseline {
    Rational median_set_size;  // N at the median position of targets ordered by set size
    Rational pri_globav;       // 50 + 50 / median_set_size
};

struct RangeRow {
    Rational threshold;
    long long count = 0;
    Rational percent;
};

// One set per distinct (journal, year) among papers carrying `doc_type`;
// papers without a journal or year cannot join a set and are skipped.
std::vector<PeerSet> build_peer_sets(const std::vector<Paper>& papers, const DocType& doc_type);

// Descending citation order; equal counts share the arithmetic mean of the
// positions they occupy. Ranks cover 1..N.
std::vector<std::pair<std::string, Rational>> rank_in_set(const PeerSet& set);

// Percentile rank: (N - R + 1) / N * 100. Throws RankOutOfRange unless 1 <= R <= N.
Rational pri(long long set_size, const Rational& rank);

// PRI for every member of every set.
std::vector<PriResult> pri_for_sets(const std::vector<PeerSet>& sets);

// PRI for the given target papers ranked inside externally supplied peer
// sets, keyed by (journal, year). A target whose set is missing or does not
// list its uid raises PeerSetError.
std::vector<PriResult> pri_for_targets(const std::vector<Paper>& targets,
                                       const std::vector<PeerSet>& supplied_sets);

Baseline compute_baseline(const std::vector<PriResult>& results);

// Counts of results with pri >= threshold; thresholds must be strictly
// descending. percent uses the result-list size as denominator.
std::vector<RangeRow> pri_range_table(const std::vector<PriResult>& results,
                                      const std::vector<Rational>& thresholds);

Rational mean_pri(const std::vector<PriResult>& results);

// "journal,year,uid,citations" rows (optional header) grouped into sets.
std::vector<PeerSet> load_peer_sets_csv(const std::filesystem::path& path, const DocType& doc_type);

}  // namespace scientrix
