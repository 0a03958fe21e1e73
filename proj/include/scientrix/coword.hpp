#pragma once

#include <cstdint>
#include <set>
#include <string>
#include <string_view>
#include <vector>

#include "scientrix/corpus.hpp"
#include "scientrix/rational.hpp"

namespace scientrix {

struct KeywordStat {
    std::string term;                     // normalized, uppercased
    std::vector<std::string> paper_uids;  // sorted, unique

    long long frequency() const { return static_cast<long long>(paper_uids.size()); }
};

// Uppercase, punctuation except '&' mapped to space (hyphens included),
// trademark marks dropped, whitespace collapsed. No stemming.
std::string normalize_keyword(std::string_view raw);

// DE and ID terms merged per paper; a term counts once per paper.
std::vector<KeywordStat> extract_keywords(const std::vector<Paper>& papers);

struct CowordEdge {
    std::uint32_t a = 0;  // vertex indexes, a < b
    std::uint32_t b = 0;
    long long cooccurrence = 0;
    double cosine = 0.0;  // cooccurrence / sqrt(freq_a * freq_b)
};

struct CowordGraph {
    std::vector<KeywordStat> vertices;  // sorted by term; all with frequency >= min_frequency
    std::vector<CowordEdge> edges;      // sorted by (a, b); all with cosine >= min_cosine

    const KeywordStat& vertex(std::uint32_t i) const { return vertices[i]; }
};

// Vertices below min_frequency are dropped; edges below min_cosine are
// dropped (the comparison is exact, no floating-point boundary effects).
// Isolated vertices stay in the graph but never join a cluster.
CowordGraph build_graph(std::vector<KeywordStat> stats, long long min_frequency,
                        const Rational& min_cosine);

// Exact comparison of edge strengths: cosine(lhs) vs cosine(rhs) decided by
// cross-multiplied squared co-occurrence counts.
int compare_edge_strength(const CowordGraph& g, const CowordEdge& lhs, const CowordEdge& rhs);

struct Link {
    std::string a;
    std::string b;
    double cosine = 0.0;
};

struct Cluster {
    int id = 0;                       // 1..K in creation order
    std::vector<std::string> terms;   // sorted
    std::string label;
    std::vector<Link> internal_links;
    std::vector<Link> external_links;
    double density = 0.0;             // mean cosine of internal links
    double centrality = 0.0;          // mean cosine of external links, 0 if none
    long long distinct_papers = 0;
};

// Single pass over edges in descending strength order (ties by ascending
// term pair): an edge merges its endpoints' clusters when the union stays
// within max_size, otherwise it becomes an external link. Clusters below
// min_size are dissolved afterwards and their terms discarded.
std::vector<Cluster> cluster_graph(const CowordGraph& graph, std::size_t min_size,
                                   std::size_t max_size);

// Highest product of term frequency and summed internal link cosines; ties
// resolved by ascending term order.
std::string label_cluster(const CowordGraph& graph, const Cluster& cluster);

enum class Quadrant {
    UpperLeft,
    UpperRight,
    LowerLeft,
    LowerRight,
};

std::string quadrant_label(Quadrant q);

struct StrategicPoint {
    int cluster_id = 0;
    double centrality = 0.0;
    double density = 0.0;
    Quadrant quadrant = Quadrant::LowerLeft;
};

struct StrategicMap {
    std::vector<StrategicPoint> points;
    double median_centrality = 0.0;
    double median_density = 0.0;
};

// Quadrants split at the medians: strictly above the median counts as
// upper/right, at or below as lower/left.
StrategicMap strategic_coordinates(const std::vector<Cluster>& clusters);

// Union of the member terms' paper sets.
void fill_distinct_papers(std::vector<Cluster>& clusters, const CowordGraph& graph);

struct QuadrantTotal {
    Quadrant quadrant = Quadrant::LowerLeft;
    long long cluster_count = 0;
    long long distinct_papers = 0;
};

std::vector<QuadrantTotal> quadrant_paper_totals(const std::vector<Cluster>& clusters,
                                                 const StrategicMap& map,
                                                 const CowordGraph& graph);

struct CowordParams {
    long long min_frequency = 4;
    Rational min_cosine = Rational(1, 5);
    std::size_t min_cluster_size = 3;
    std::size_t max_cluster_size = 10;
};

struct CowordResult {
    CowordGraph graph;
    std::vector<Cluster> clusters;  // labeled, with paper counts
    StrategicMap map;
    std::vector<QuadrantTotal> quadrants;
    std::set<std::string> retained_terms;  // union of cluster terms
};

CowordResult run_coword(const std::vector<Paper>& papers, const CowordParams& params);

}  // namespace scientrix
