#pragma once

#include "chevwidth/words.hpp"

namespace chevwidth {

struct StageBudget {
    std::string name;
    int paper_budget = 0;
    int guaranteed_budget = 0;
    int used = 0;
};

struct DecompositionReport {
    Word word;
    std::vector<StageBudget> stages;
    int total_length = 0;
    bool verified = false;
    std::string strategy;            // "short_circuit" | "stage_pipeline" | "unwind"
    bool diagonal_fallback = false;  // classical 6-letter diagonal word used
    bool within_target = false;      // sl3: <= 42; sp4: <= 87
};

}  // namespace chevwidth
