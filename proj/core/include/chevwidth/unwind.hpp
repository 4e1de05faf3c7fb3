#pragma once

#include <optional>

#include "chevwidth/bfs.hpp"

namespace chevwidth {

/// Greedy two-sided degree reduction: repeatedly applies the elementary move
/// that maximally reduces the total coefficient weight of the matrix, then
/// finishes the constant residual through the full-group BFS table.  Works
/// for inputs that admit short small-parameter words (e.g. random scrambles);
/// returns nullopt if it stalls or exceeds the letter budget.
std::optional<Word> unwind(const GroupMatrix& m, size_t max_letters);

}  // namespace chevwidth
