#pragma once

#include <optional>
#include <string>
#include <vector>

#include "chevwidth/field.hpp"

namespace chevwidth {

struct RootSystem {
    char family;  // 'A'..'G'
    int rank;

    static RootSystem parse(const std::string& token);  // e.g. "A2", "C3", "E8"
    std::string str() const { return family + std::to_string(rank); }
    bool admissible() const;
};

int positive_root_count(const RootSystem& rs);

enum class WidthCase {
    UnitsInfiniteNumber,   // 7N
    UnitsInfiniteFunction, // 8N
    FunctionExplicit,      // explicit table anchored at L(2)
    NumberGeneral,         // existence only
};

WidthCase width_case_from_token(const std::string& token);
std::string width_case_token(WidthCase c);

struct WidthAnswer {
    std::optional<long> bound;                 // absent iff existence_only
    std::optional<long> conditional_bound;     // e.g. C2 function target 87
    bool existence_only = false;
    std::string provenance;
};

/// Every explicit number is anchored to a quoted location; existence-only
/// answers never carry a number.  l2 is the configurable SL(3) function-case
/// constant (default 44).
WidthAnswer width_bound(const RootSystem& rs, WidthCase wcase, long l2 = 44);

}  // namespace chevwidth
