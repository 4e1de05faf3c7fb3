#pragma once

#include "chevwidth/arith.hpp"
#include "chevwidth/report.hpp"

namespace chevwidth {
namespace sp4 {

// Reduce a symplectic 4x4 matrix to the long-root position phi_beta(M'):
// first column to e1, then fourth column to e4 (the rest is forced by the
// symplectic form).  Guaranteed <= 10 moves; BudgetExceeded otherwise.
void reduce_sp4_to_long_sl2(GroupMatrix& work, MoveLog& log);

/// Outcome of the square-extraction stage: the beta-block becomes
/// (a, beta^2; *, d) with a == 1 (mod beta); d == 1 (mod beta) then follows
/// from the determinant.  Realized as a bounded deterministic search over
/// beta-block moves in graded-lex order.
struct SquareCert {
    Poly root;       // beta
    int moves_used = 0;
};

SquareCert square_extraction(GroupMatrix& work, MoveLog& log, const SearchBudget& budget = {});

// The eight-letter transition from phi_beta(a, beta^2; C, d) with
// a == d == 1 (mod beta) to the corner position phi_2ab(d, -C beta^2; -1, a).
// Built from three conjugation stages whose integral transition factors
// collapse into root letters; every stage is verified by evaluation.
void corner_transition(GroupMatrix& work, MoveLog& log, const Poly& beta);

// Clear the corner block (unit lower-left) down to the identity; <= 5 moves.
void corner_finish(GroupMatrix& work, MoveLog& log);

/// Lemma-style long-to-short flip exposed as a standalone operation: takes a
/// prepared long-position matrix and produces the corner-position residual
/// of corner_transition.  (The pipeline continues from the corner position
/// directly; see the repo notes for the realized contract.)
GroupMatrix flip_long_to_short(const GroupMatrix& m, MoveLog& log, const Poly& beta);

/// Short-root swindle: phi_alpha(A, B; C s, D) with A == D (mod s) to
/// phi_alpha(D, C; B s, A), via a twist-conjugation chain; <= 26 letters.
struct ShortSwindleInput {
    Poly A, B, C, D, s;  // block (A, B; C s, D), det 1, A == D (mod s)
    void validate() const;
};

void swindle_sp4_short(const ShortSwindleInput& in, GroupMatrix& work, MoveLog& log);

struct PipelineOptions {
    SearchBudget search;
    size_t headline_budget = 90;
    size_t target_budget = 87;
};

DecompositionReport decompose_sp4(const GroupMatrix& a, const PipelineOptions& opts = {});

// Word for the torus element diag(1, f, f^{-1}, 1) (the beta-block diagonal):
// <= 4 letters via BFS over constants when found, else the 6-letter
// classical word, flagged.
Word diagonal_word_beta(const Field& f, uint64_t unit, bool* used_fallback = nullptr);

}  // namespace sp4
}  // namespace chevwidth
