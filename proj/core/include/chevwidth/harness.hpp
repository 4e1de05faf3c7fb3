#pragma once

#include <map>

#include "chevwidth/report.hpp"
#include "chevwidth/sl3.hpp"
#include "chevwidth/sp4.hpp"

#include "json.hpp"

namespace chevwidth {

/// Deterministic scramble generation: `count` products of `scramble_len`
/// uniformly drawn elementary letters with parameter degree <= degree_cap,
/// reproducible from the seed via a counter-based generator.
struct ScrambleSpec {
    GroupKind group = GroupKind::SL;       // SL -> SL(3), SP -> Sp(4)
    uint64_t q = 2;
    int scramble_len = 30;
    int degree_cap = 3;
    int count = 100;
    uint64_t seed = 1;
};

struct Scramble {
    Word ground_truth;
    GroupMatrix matrix;
};

Scramble make_scramble(const ScrambleSpec& spec, int index);

struct SuiteStats {
    std::map<int, int> length_histogram;
    std::map<std::string, int> per_stage_max;
    std::map<std::string, int> strategy_counts;
    std::vector<std::pair<int, std::string>> failures;  // (index, message)
    int count = 0;
    int max_total = 0;
    bool all_verified = true;
};

SuiteStats run_suite(const ScrambleSpec& spec);

std::string suite_stats_json(const SuiteStats& s);
std::string suite_histogram_tsv(const SuiteStats& s);

// JSON formats of the external interfaces
nlohmann::json matrix_to_json(const GroupMatrix& m);
GroupMatrix matrix_from_json(const nlohmann::json& j);
nlohmann::json word_to_json(const Word& w, GroupKind kind);
Word word_from_json(const nlohmann::json& j, const Field& f);
GroupKind word_kind_from_json(const nlohmann::json& j);
nlohmann::json report_to_json(const DecompositionReport& r, GroupKind kind);

}  // namespace chevwidth
