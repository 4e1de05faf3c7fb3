#include "chevwidth/arith.hpp"

namespace chevwidth {

std::string u128_str(unsigned __int128 v) {
    if (v == 0) return "0";
    std::string s;
    while (v) {
        s += static_cast<char>('0' + static_cast<int>(v % 10));
        v /= 10;
    }
    return std::string(s.rbegin(), s.rend());
}

DeltaValue delta_of(const Poly& b) {
    if (b.deg() < 1) throw DomainError("delta_of expects a nonconstant modulus");
    if (!is_irreducible(b))
        throw DomainError("delta_of expects an irreducible modulus (composite epsilon needs factorization)");
    const Field& F = b.field();
    unsigned __int128 eps = 1;
    for (int i = 0; i < b.deg(); ++i) {
        unsigned __int128 next = eps * F.q();
        if (next / F.q() != eps)
            throw DomainError("epsilon(b) exceeds 128-bit range; modulus degree too large");
        eps = next;
    }
    eps -= 1;
    DeltaValue d;
    d.b = b;
    d.epsilon = eps;
    d.delta = eps / (F.q() - 1);
    return d;
}

Poly find_irreducible_shift(const Poly& a, const Poly& b, const SearchBudget& budget) {
    if (a.is_zero()) throw DomainError("find_irreducible_shift: a must be nonzero");
    const Field& F = a.field();
    if (!poly_gcd(a, b).is_constant()) throw DomainError("find_irreducible_shift: gcd(a, b) != 1");
    int cap = std::max(a.deg(), 0) + budget.extra_degree;
    uint64_t tried = 0;
    for (uint64_t idx = 0;; ++idx) {
        Poly lam = graded_lex_poly(F, idx);
        if (lam.deg() > cap || tried >= budget.max_candidates)
            throw SearchExhausted("find_irreducible_shift exhausted after " + std::to_string(tried) +
                                  " candidates");
        ++tried;
        Poly cand = b + lam * a;
        if (cand.deg() >= 1 && is_irreducible(cand)) return lam;
    }
}

Poly trost_companion(const Poly& a, const Poly& b, uint64_t u, const SearchBudget& budget) {
    const Field& F = a.field();
    if (u == 0 || u >= F.q()) throw DomainError("trost_companion: u must be a unit of F_q");
    if (b.deg() < 1 || !is_irreducible(b)) throw DomainError("trost_companion: b must be irreducible");
    if (!poly_gcd(a, b).is_constant()) throw DomainError("trost_companion: gcd(a, b) != 1");
    DeltaValue db = delta_of(b);

    // c must satisfy b c == u (mod a): c == u b^{-1} (mod a)
    auto [g, binv, unused] = poly_xgcd(b, a);
    (void)unused;
    if (!g.is_one()) throw DomainError("trost_companion: b not invertible mod a");
    Poly base = poly_divmod(binv.scaled(u), a).second;

    auto coprime_delta = [&](const Poly& c) {
        DeltaValue dc = delta_of(c);
        unsigned __int128 x = db.delta, y = dc.delta;
        while (y) { auto r = x % y; x = y; y = r; }
        return x == 1;
    };

    int cap = std::max(a.deg(), 0) + budget.extra_degree + 2;
    uint64_t tried = 0;
    // candidates c = base + mu * a in graded-lex order of mu; also consider
    // base itself (mu = 0 comes first in the enumeration).
    for (uint64_t idx = 0;; ++idx) {
        Poly mu = graded_lex_poly(F, idx);
        Poly c = base + mu * a;
        if (c.deg() > cap || tried >= budget.max_candidates)
            throw SearchExhausted("trost_companion exhausted after " + std::to_string(tried) +
                                  " candidates");
        ++tried;
        if (c.deg() < 1) continue;
        if (!poly_gcd(c, b).is_constant()) continue;  // distinct prime from b
        if (!is_irreducible(c)) continue;
        if (!coprime_delta(c)) continue;
        return c;
    }
}

ChebPair chebyshev_pair(const Poly& tau, int64_t m) {
    const Field& F = tau.field();
    auto y_of = [&](int64_t k) {
        bool neg = k < 0;
        uint64_t n = neg ? static_cast<uint64_t>(-k) : static_cast<uint64_t>(k);
        Poly y0(F), y1 = Poly::one(F);
        if (n == 0) return y0;
        Poly prev = y0, cur = y1;
        for (uint64_t i = 1; i < n; ++i) {
            Poly next = tau * cur - prev;
            prev = cur;
            cur = next;
        }
        return neg ? -cur : cur;
    };
    ChebPair p;
    p.m = m;
    p.y = y_of(m);
    p.x = -y_of(m - 1);
    return p;
}

ChebPair cayley_hamilton_power(const GroupMatrix& a2, int64_t m) {
    if (a2.n() != 2) throw DomainError("cayley_hamilton_power expects a 2x2 matrix");
    if (!a2.det_is_one()) throw DomainError("cayley_hamilton_power expects det = 1");
    return chebyshev_pair(a2.at(0, 0) + a2.at(1, 1), m);
}

SplitCert chebyshev_split(const ChebPair& pair) {
    const Field& F = pair.y.field();
    SplitCert cert;
    if (pair.y.is_zero()) throw DomainError("chebyshev_split: y = 0 has no certificate");
    Poly xm1 = pair.x - Poly::one(F);
    Poly y1 = xm1.is_zero() ? pair.y.monic() : poly_gcd(pair.y, xm1);
    // scale y1 so that y = y1 * y2 exactly with y2 = y / y1
    auto [y2, rem] = poly_divmod(pair.y, y1);
    if (!rem.is_zero()) throw ValidationError("chebyshev_split: gcd does not divide y");
    cert.y1 = y1;
    cert.y2 = y2;
    // verify both congruences exactly
    if (!cert.y1.is_constant()) {
        auto r1 = poly_divmod(pair.x - Poly::one(F), cert.y1).second;
        if (!r1.is_zero()) throw ValidationError("chebyshev_split: x != 1 (mod y1)");
    }
    if (!cert.y2.is_constant()) {
        auto r2 = poly_divmod(pair.x + Poly::one(F), cert.y2).second;
        if (!r2.is_zero()) throw ValidationError("chebyshev_split: x != -1 (mod y2)");
    }
    return cert;
}

std::pair<unsigned __int128, unsigned __int128> delta_bezout(unsigned __int128 db,
                                                             unsigned __int128 dc) {
    // extended gcd over signed 128-bit
    __int128 r0 = static_cast<__int128>(db), r1 = static_cast<__int128>(dc);
    __int128 s0 = 1, s1 = 0, t0 = 0, t1 = 1;
    while (r1 != 0) {
        __int128 q = r0 / r1;
        __int128 r2 = r0 - q * r1;
        r0 = r1; r1 = r2;
        __int128 s2 = s0 - q * s1;
        s0 = s1; s1 = s2;
        __int128 t2 = t0 - q * t1;
        t0 = t1; t1 = t2;
    }
    if (r0 != 1) throw DomainError("delta_bezout: deltas are not coprime");
    // s0 * db + t0 * dc = 1; want u db - v dc = 1 with u, v >= 0
    __int128 u = s0, v = -t0;
    __int128 DB = static_cast<__int128>(db), DC = static_cast<__int128>(dc);
    while (u < 0 || v < 0) {
        u += DC;
        v += DB;
    }
    // minimality: reduce u mod dc when possible
    while (u >= DC && v >= DB) {
        u -= DC;
        v -= DB;
    }
    return {static_cast<unsigned __int128>(u), static_cast<unsigned __int128>(v)};
}

}  // namespace chevwidth
