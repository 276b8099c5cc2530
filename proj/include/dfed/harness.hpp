#pragma once

#include <cstddef>
#include <cstdint>
#include <string>
#include <vector>

#include "dfed/instances.hpp"
#include "dfed/phase2.hpp"
#include "json.hpp"

namespace dfed {

/// Pass/fail tally for one property over a corpus.
struct CheckTally {
    std::string name;
    std::size_t applied = 0;
    std::size_t passed = 0;
    std::vector<std::string> failures;  // first few, for the report

    std::size_t failed() const noexcept { return applied - passed; }
    void record(bool ok, const std::string& detail);
};

struct VerifyConfig {
    std::size_t trials = 200;
    std::size_t min_n = 5;
    std::size_t max_n = 8;
    int max_k = 3;
    FamilySpec family = FamilySpec::diamond();
    Seed seed = 1;
    RuleTuning tuning;
    std::uint64_t oracle_cap = default_oracle_cap();
    bool debug_checks = false;
};

struct VerifyReport {
    std::size_t instances = 0;
    std::vector<CheckTally> checks;

    bool ok() const;
    const CheckTally& check(const std::string& name) const;
};

/// Applies each rule once and the full pipelines to seeded random
/// instances and compares yes/no decisions with the brute-force oracle.
/// Also checks the Phase-1 fixpoint properties, the kernel size bound and
/// solve_branching against the oracle at every budget up to max_k.
VerifyReport verify_rules(const VerifyConfig& config);

/// A clique on 7 to 9 vertices plus one or two extra vertices, each
/// adjacent to two or three clique vertices; budget 1. After Phase 1 these
/// usually keep a clique above the 4k threshold, so clique reduction fires.
std::vector<Instance> clique_heavy_corpus(std::size_t count, Seed seed);

/// Runs the verification checks on a single instance, adding to `report`.
void verify_instance(const Instance& inst, const VerifyConfig& config, VerifyReport& report, const std::string& label);

struct BenchRow {
    std::string corpus;
    std::string name;
    StageSize input;
    StageSize output;
    bool decided_no = false;
    bool unchanged = false;  // kernel equals the input graph and budget
    std::uint64_t vertex_bound = 0;
    bool within_bound = true;
    double seconds_phase1 = 0.0;
    double seconds_phase2 = 0.0;
};

struct BenchConfig {
    Seed seed = 1;
    bool hard = true;
    bool planted = true;
    bool gnp = true;
    int hard_min_k = 2;
    int hard_max_k = 6;
    std::size_t planted_n = 200;
    int planted_k = 5;
    std::size_t planted_count = 3;
    std::vector<std::size_t> gnp_sizes{10, 20, 30};
    double gnp_p = 0.3;
    int gnp_k = 5;
};

std::vector<BenchRow> run_bench(const BenchConfig& config);

/// A planted instance on roughly n vertices: random clique sizes in [3, 8]
/// glued in a tree-like fashion, plus k extra edges.
Instance planted_instance(std::size_t n, int k, Seed seed);

nlohmann::ordered_json to_json(const StageSize& s);
nlohmann::ordered_json to_json(const KernelReport& r);
nlohmann::ordered_json to_json(const VerifyReport& r);
nlohmann::ordered_json to_json(const BenchRow& r);
std::string bench_csv(const std::vector<BenchRow>& rows);

/// Digest of a report with every "seconds_*" member removed.
std::string report_digest(const nlohmann::ordered_json& report);

}  // namespace dfed
