#pragma once

#include "chevwidth/arith.hpp"
#include "chevwidth/report.hpp"

namespace chevwidth {
namespace sl3 {

/// Certified data for the eleven-move swindle: the embedded matrix
/// (a, b; s c, d) has determinant 1, s = s1 s2, a = 1 + s1 t1 = -1 + s2 t2,
/// and a == d == 1 (mod s1), a == d == -1 (mod s2).
struct SwindleInput {
    Poly a, b, c, d, s, s1, s2, t1, t2;
    void validate() const;  // DomainError before any move on violation
};

// Reduction of a 3x3 determinant-one matrix to its top-left SL(2) block.
// Moves are appended to the log; the working matrix is modified in place.
// Guaranteed <= 8 moves, zero-parameter moves skipped.
void reduce_sl3_to_sl2(GroupMatrix& work, MoveLog& log);

// One column move making the upper-right block entry irreducible.
void dirichlet_move(GroupMatrix& work, MoveLog& log, const SearchBudget& budget = {});

// One row move making the lower-left block entry an irreducible c with
// gcd(delta(b), delta(c)) = 1 (b c == -1 (mod a) holds automatically).
void trost_move(GroupMatrix& work, MoveLog& log, const SearchBudget& budget = {});

// The eleven elementary moves of the swindle; output block (-a, -s b; c, d)
// with corner -1, exactly as in the final display.
void swindle_sl3(const SwindleInput& inp, GroupMatrix& work, MoveLog& log);

// Post-swindle 3-move finish: clears the block against the modulus entry
// (position (1,0) when argue_mod_lower_left, else (0,1)); the opposite
// diagonal entry must be congruent to a unit of F_q modulo it.  Returns the
// residual's unit f (residual block diag(f, -f^{-1}) with corner -1).
uint64_t finish_to_diagonal(GroupMatrix& work, MoveLog& log, bool argue_mod_lower_left);

// Word for diag(f, f^{-1}, 1): length <= 4 via the cached BFS oracle when a
// 4-letter word exists for (q, f); otherwise the classical 6-letter word,
// flagged through *used_fallback.
Word diagonal_word(const Field& f, uint64_t unit, bool* used_fallback = nullptr);

struct PipelineOptions {
    // feasibility gate for the Cayley-Hamilton split
    unsigned __int128 max_power = 4096;       // |m1|, |m2| cap
    long max_work = 200000;                   // (|m1|+|m2|) * deg(tau) cap
    SearchBudget search;
    size_t headline_budget = 44;
};

DecompositionReport decompose_sl3(const GroupMatrix& a, const PipelineOptions& opts = {});

}  // namespace sl3
}  // namespace chevwidth
