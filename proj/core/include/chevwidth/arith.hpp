#pragma once

#include "chevwidth/matrix.hpp"

namespace chevwidth {

/// epsilon/delta invariants of an irreducible modulus b: epsilon is the
/// exponent of the cyclic unit group of F_q[t]/(b) (= q^deg(b) - 1), delta
/// its quotient by q - 1.  Sizes beyond 128 bits are rejected as out of
/// range for the engine's exact integer arithmetic.
struct DeltaValue {
    Poly b;
    unsigned __int128 epsilon = 0;
    unsigned __int128 delta = 0;
};

DeltaValue delta_of(const Poly& b);

std::string u128_str(unsigned __int128 v);

/// Search budgets for the bounded deterministic searches.  Existence is
/// guaranteed only asymptotically; a budget violation raises
/// SearchExhausted with the number of candidates tried.
struct SearchBudget {
    int extra_degree = 4;          // candidate degree <= deg(reference) + extra
    uint64_t max_candidates = 1000000;
};

// least lambda in graded-lex order with b + lambda * a irreducible
Poly find_irreducible_shift(const Poly& a, const Poly& b, const SearchBudget& budget = {});

// least irreducible c in graded-lex order with b c = u (mod a) and
// gcd(delta(b), delta(c)) = 1.  u must be a unit of F_q (constant code).
Poly trost_companion(const Poly& a, const Poly& b, uint64_t u, const SearchBudget& budget = {});

/// Chebyshev-style power coefficients: for any 2x2 matrix A with det 1 and
/// trace tau, A^m = x I + y A.  y follows y_{k+1} = tau y_k - y_{k-1},
/// y_0 = 0, y_1 = 1, extended by y_{-k} = -y_k; x = -y_{m-1}.
struct ChebPair {
    int64_t m = 0;
    Poly x, y;
};

ChebPair cayley_hamilton_power(const GroupMatrix& a2, int64_t m);
// same data from the trace alone
ChebPair chebyshev_pair(const Poly& tau, int64_t m);

/// y = y1 y2 with x == 1 (mod y1) and x == -1 (mod y2).  Computed as
/// y1 = monic gcd(y, x - 1) scaled so y1 y2 = y exactly; both congruences
/// verified on every call (violation is an internal-consistency alarm).
struct SplitCert {
    Poly y1, y2;
};

SplitCert chebyshev_split(const ChebPair& pair);

// u delta_b - v delta_c = 1 with u, v >= 0 minimal; gcd(delta_b, delta_c)
// must be 1.
std::pair<unsigned __int128, unsigned __int128> delta_bezout(unsigned __int128 delta_b,
                                                             unsigned __int128 delta_c);

}  // namespace chevwidth
