#pragma once

#include <filesystem>
#include <optional>
#include <set>
#include <string>
#include <vector>

#include "scientrix/citemetrics.hpp"
#include "scientrix/collab.hpp"
#include "scientrix/corpus.hpp"
#include "scientrix/coword.hpp"
#include "scientrix/diversity.hpp"
#include "scientrix/rational.hpp"

namespace scientrix {

inline constexpr const char* kToolVersion = "0.1.0";

struct RunConfig {
    std::vector<std::string> input_paths;
    std::vector<std::string> peer_set_paths;
    std::vector<DocType> doc_types{DocType{DocTypeKind::Article, ""}};  // PRI target types
    std::optional<int> pri_year_cutoff;  // keep articles with year < cutoff
    long long min_keyword_frequency = 4;
    Rational min_cosine = Rational(1, 5);
    std::size_t min_cluster_size = 3;
    std::size_t max_cluster_size = 10;
    double city_threshold_pct = 1.0;
    std::string organization_prefix;  // empty matches every organization
    long long top_journal_min_count = 10;
    long long top_category_min_count = 50;
    std::filesystem::path output_dir = "out";
    std::filesystem::path country_file;  // optional pattern table
};

// Flat "key = value" file; '#' starts a comment, list keys may repeat or use
// ';'-separated values. Unknown keys are an error.
RunConfig load_config(const std::filesystem::path& path);
void apply_config_line(RunConfig& cfg, const std::string& key, const std::string& value);

struct StageCounts {
    std::string stage;
    std::vector<std::pair<std::string, long long>> counts;
};

struct RunManifest {
    std::vector<std::pair<std::string, std::string>> input_digests;   // path -> sha256
    std::vector<std::pair<std::string, std::string>> output_digests;  // filename -> sha256
    std::vector<StageCounts> stages;
    std::vector<std::string> warnings;
    long long error_count = 0;
};

std::string sha256_file(const std::filesystem::path& path);
std::string sha256_text(std::string_view text);

// Write-then-rename so partially written outputs never land under the final name.
void write_file_atomic(const std::filesystem::path& path, std::string_view content);

// ---- stage runners (each emits its output files under cfg.output_dir) ----

struct ParseStageResult {
    std::vector<Paper> papers;
    std::vector<Diagnostic> diagnostics;
    long long record_count = 0;
};

ParseStageResult run_parse_stage(const RunConfig& cfg);

// Reads output_dir/papers.jsonl; MissingIntermediate when absent.
std::vector<Paper> load_papers_jsonl(const std::filesystem::path& path);

struct PriStageResult {
    std::vector<PriResult> results;
    std::optional<Baseline> baseline;
    std::vector<RangeRow> range_table;
    long long peer_set_count = 0;
    std::vector<std::string> warnings;
};

PriStageResult run_pri_stage(const RunConfig& cfg, const std::vector<Paper>& papers);
void run_collab_stage(const RunConfig& cfg, const std::vector<Paper>& research);
CowordResult run_coword_stage(const RunConfig& cfg, const std::vector<Paper>& research);
void run_diversity_stage(const RunConfig& cfg, const std::vector<Paper>& research,
                         const std::set<std::string>* retained_terms);

// Reads the terms column of output_dir/clusters.csv (for standalone
// `diversity` runs after a `coword` run).
std::set<std::string> load_cluster_terms_csv(const std::filesystem::path& path);

// Full pipeline: parse -> pri -> collab -> coword -> diversity -> manifest.
RunManifest run_pipeline(const RunConfig& cfg);

std::string strategic_diagram_svg(const StrategicMap& map);

}  // namespace scientrix
