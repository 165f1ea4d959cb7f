#pragma once

#include <map>
#include <string>
#include <vector>

#include "paratopia/filters.hpp"
#include "paratopia/search.hpp"

namespace paratopia {

enum class DeltaShape { D12, D123 };
std::string delta_shape_str(DeltaShape s);

struct CatalogueEntry {
    int n = 0;
    std::string delta;         // "12" | "123"
    std::string beta, gamma;   // cycle structure strings; beta empty for 123
    bool decided = true;
    bool member = false;
    std::string method, rule;  // method: filter|construct|search; rule set when filter-excluded
    std::string witness_path;
    unsigned long long nodes = 0;
};

struct ClassifyOptions {
    int jobs = 1;                   // > 1 runs the OpenMP path
    unsigned long long budget = 0;  // per-case node budget, 0 = unlimited
    RuleMask mask;
    std::string out_dir;            // when set: JSON-lines persistence + witness files
    bool resume = false;            // skip cases already decided in the out file
    bool write_witnesses = true;
};

// (12): all ordered pairs of partitions of n; (123): all partitions of n.
std::vector<std::pair<CycleStructure, CycleStructure>> enumerate_candidates_12(int n);
std::vector<CycleStructure> enumerate_candidates_123(int n);

// Classify every candidate class of order n. Deterministic final entry list
// (enumeration order) regardless of jobs.
std::vector<CatalogueEntry> classify(int n, DeltaShape shape, const ClassifyOptions& opts = {});
// Serial reference implementation; classify(jobs=1) uses this path.
std::vector<CatalogueEntry> classify_serial(int n, DeltaShape shape, const ClassifyOptions& opts = {});

struct DiffReport {
    std::vector<std::string> missing;  // in the published table, not computed
    std::vector<std::string> extra;    // computed member, not in the table
    bool empty() const { return missing.empty() && extra.empty(); }
};

// table: 1 ((12), n <= 12), 2 ((12), 13..17), 3 ((123), n <= 17)
DiffReport diff_against_published(const std::vector<CatalogueEntry>& entries, int table);

std::string emit_text(const std::vector<CatalogueEntry>& entries);
std::string emit_json(const std::vector<CatalogueEntry>& entries);
std::vector<CatalogueEntry> parse_jsonl(const std::string& path);

// filter-only sweep: how often each rule is the recorded violation per n
std::map<std::string, long long> rule_fire_counts(int n, DeltaShape shape, const RuleMask& mask = {});

std::string witness_file_name(const CatalogueEntry& e);

}  // namespace paratopia
