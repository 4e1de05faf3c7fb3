#include "chevwidth/sl3.hpp"

#include <map>
#include <mutex>

#include "chevwidth/bfs.hpp"
#include "chevwidth/unwind.hpp"

namespace chevwidth {
namespace sl3 {

namespace {

ElemGen T(int i, int j, const Poly& xi) { return ElemGen::linear(i, j, xi); }

Poly entry_mod(const Poly& f, const Poly& m) { return poly_divmod(f, m).second; }

// least xi in graded-lex order with gcd(u + xi w, v) constant
Poly coprime_shift(const Poly& u, const Poly& v, const Poly& w, uint64_t max_tries = 20000) {
    const Field& F = u.has_field() ? u.field() : v.field();
    for (uint64_t idx = 0; idx < max_tries; ++idx) {
        Poly xi = graded_lex_poly(F, idx);
        Poly cand = u + xi * w;
        Poly g = cand.is_zero() ? v : poly_gcd(cand, v);
        if (v.is_zero() ? cand.is_unit() : g.is_constant()) return xi;
    }
    throw SearchExhausted("coprime_shift exhausted");
}

}  // namespace

void SwindleInput::validate() const {
    const Field& F = a.field();
    if (s != s1 * s2) throw DomainError("swindle input: s != s1 s2");
    Poly det = a * d - s * b * c;
    if (!det.is_one()) throw DomainError("swindle input: (a, b; sc, d) must have det 1");
    if (a != Poly::one(F) + s1 * t1) throw DomainError("swindle input: a != 1 + s1 t1");
    if (a != -(Poly::one(F)) + s2 * t2) throw DomainError("swindle input: a != -1 + s2 t2");
    auto congruent = [&](const Poly& x, const Poly& target, const Poly& mod) {
        if (mod.is_constant()) return true;
        return poly_divmod(x - target, mod).second.is_zero();
    };
    Poly one = Poly::one(F);
    if (!congruent(d, one, s1) || !congruent(d, -one, s2))
        throw DomainError("swindle input: d congruences violated");
}

void reduce_sl3_to_sl2(GroupMatrix& work, MoveLog& log) {
    const Field& F = work.field();
    if (work.n() != 3) throw DomainError("reduce_sl3_to_sl2 expects n = 3");
    Poly one = Poly::one(F);

    auto w1 = [&] { return work.at(2, 0); };
    auto w2 = [&] { return work.at(2, 1); };
    auto w3 = [&] { return work.at(2, 2); };

    // Degenerate last row (0, 0, u): plant a unit into position (3,1) first.
    if (w1().is_zero() && w2().is_zero()) {
        if (!w3().is_unit()) throw ValidationError("reduce: last row not unimodular");
        if (!w3().is_one()) log.apply(work, Side::Right, T(3, 1, one));
    }
    // Stable-range step: make (w1, w2) a unimodular pair by adding a
    // multiple of the last entry to the first column.
    if (!(w1().is_zero() && w2().is_zero())) {
        Poly g = poly_gcd(w1(), w2());
        if (!g.is_constant() || g.is_zero()) {
            Poly xi = coprime_shift(w1(), w2(), w3());
            log.apply(work, Side::Right, T(3, 1, xi));
        }
    }
    // Bezout: corner to 1 via col3 += g1 col1 + g2 col2.
    if (!w3().is_one()) {
        auto [g, u, v] = poly_xgcd(w1(), w2());
        if (!g.is_one()) throw ValidationError("reduce: pair not unimodular after shift");
        Poly target = one - w3();
        log.apply(work, Side::Right, T(1, 3, u * target));
        log.apply(work, Side::Right, T(2, 3, v * target));
    }
    // Clear the last row, then the last column.
    log.apply(work, Side::Right, T(3, 1, -w1()));
    log.apply(work, Side::Right, T(3, 2, -w2()));
    log.apply(work, Side::Left, T(1, 3, -work.at(0, 2)));
    log.apply(work, Side::Left, T(2, 3, -work.at(1, 2)));
}

void dirichlet_move(GroupMatrix& work, MoveLog& log, const SearchBudget& budget) {
    const Poly &a = work.at(0, 0), &b = work.at(0, 1);
    if (b.deg() >= 1 && is_irreducible(b)) return;
    Poly lam = find_irreducible_shift(a, b, budget);
    log.apply(work, Side::Right, T(1, 2, lam));
}

void trost_move(GroupMatrix& work, MoveLog& log, const SearchBudget& budget) {
    const Field& F = work.field();
    const Poly &a = work.at(0, 0), &b = work.at(0, 1), &c = work.at(1, 0);
    if (c.deg() >= 1 && is_irreducible(c)) {
        DeltaValue db = delta_of(b), dc = delta_of(c);
        unsigned __int128 x = db.delta, y = dc.delta;
        while (y) { auto r = x % y; x = y; y = r; }
        if (x == 1) return;
    }
    Poly target = trost_companion(a, b, F.q() - 1, budget);  // b c == -1 (mod a)
    auto [mu, rem] = poly_divmod(target - c, a);
    if (!rem.is_zero())
        throw ValidationError("trost_move: companion not in the reachable class");
    log.apply(work, Side::Left, T(2, 1, mu));
}

void swindle_sl3(const SwindleInput& in, GroupMatrix& work, MoveLog& log) {
    in.validate();
    // the eleven listed moves, zero-parameter letters skipped by the log
    log.apply(work, Side::Right, T(3, 1, in.s1));
    log.apply(work, Side::Left, T(2, 3, -(in.s2 * in.c)));
    log.apply(work, Side::Left, T(1, 3, -in.t1));
    log.apply(work, Side::Left, T(3, 1, -in.s1));
    log.apply(work, Side::Right, T(1, 2, -in.b));
    log.apply(work, Side::Right, T(1, 3, in.t1 + in.s2));
    log.apply(work, Side::Left, T(2, 1, in.c));
    log.apply(work, Side::Left, T(3, 1, -in.t2));
    log.apply(work, Side::Left, T(1, 3, in.s2));
    log.apply(work, Side::Right, T(3, 1, -in.t2));
    log.apply(work, Side::Right, T(3, 2, -(in.s1 * in.b)));
}

namespace {

// constant unit target for f modulo m: the residue when m is nonconstant,
// and 1 when m is a unit (everything is reachable)
uint64_t unit_residue(const Poly& f, const Poly& m) {
    if (m.is_constant()) return 1;
    Poly r = entry_mod(f, m);
    if (!r.is_constant())
        throw ValidationError("finish: entry not congruent to a constant modulo the pivot");
    return r.constant_value();
}

}  // namespace

uint64_t finish_to_diagonal(GroupMatrix& work, MoveLog& log, bool argue_mod_lower_left) {
    const Field& F = work.field();
    if (argue_mod_lower_left) {
        // pivot c at (1,0); make (0,0) a unit via a row move, then clear
        const Poly& piv = work.at(1, 0);
        uint64_t e;
        if (piv.is_zero()) {
            if (!work.at(0, 0).is_unit())
                throw ValidationError("finish: zero pivot with nonunit diagonal");
            e = work.at(0, 0).constant_value();
        } else {
            e = unit_residue(work.at(0, 0), piv);
            if (e == 0) throw ValidationError("finish: diagonal entry divisible by pivot");
            auto [lam, rem] = poly_divmod(Poly::constant(F, e) - work.at(0, 0), piv);
            if (!rem.is_zero()) throw ValidationError("finish: congruence fails");
            log.apply(work, Side::Left, T(1, 2, lam));
            log.apply(work, Side::Left, T(2, 1, -(work.at(1, 0).scaled(F.inv(e)))));
        }
        log.apply(work, Side::Right, T(1, 2, -(work.at(0, 1).scaled(F.inv(e)))));
        return e;
    }
    // pivot b at (0,1); column move first
    const Poly& piv = work.at(0, 1);
    uint64_t e;
    if (piv.is_zero()) {
        if (!work.at(0, 0).is_unit())
            throw ValidationError("finish: zero pivot with nonunit diagonal");
        e = work.at(0, 0).constant_value();
    } else {
        e = unit_residue(work.at(0, 0), piv);
        if (e == 0) throw ValidationError("finish: diagonal entry divisible by pivot");
        auto [lam, rem] = poly_divmod(Poly::constant(F, e) - work.at(0, 0), piv);
        if (!rem.is_zero()) throw ValidationError("finish: congruence fails");
        log.apply(work, Side::Right, T(2, 1, lam));
        log.apply(work, Side::Right, T(1, 2, -(work.at(0, 1).scaled(F.inv(e)))));
    }
    log.apply(work, Side::Left, T(2, 1, -(work.at(1, 0).scaled(F.inv(e)))));
    return e;
}

Word diagonal_word(const Field& F, uint64_t unit, bool* used_fallback) {
    if (used_fallback) *used_fallback = false;
    Word w;
    if (unit == 1) return w;
    static std::mutex mu;
    static std::map<std::pair<uint64_t, uint64_t>, std::pair<Word, bool>> cache;
    {
        std::lock_guard<std::mutex> lock(mu);
        auto it = cache.find({F.q(), unit});
        if (it != cache.end()) {
            if (used_fallback) *used_fallback = it->second.second;
            return it->second.first;
        }
    }
    GroupMatrix target = GroupMatrix::identity(F, 3, GroupKind::SL);
    target.at(0, 0) = Poly::constant(F, unit);
    target.at(1, 1) = Poly::constant(F, F.inv(unit));
    Word result;
    bool fallback = false;
    auto found = bfs_min_word(target, GenSpec::constants(F, GroupKind::SL, 3), 4);
    if (found) {
        result = found->second;
    } else {
        fallback = true;
        uint64_t f = unit, finv = F.inv(unit);
        Poly pf = Poly::constant(F, f), pfi = Poly::constant(F, finv);
        Poly one = Poly::one(F);
        // w(f) w(-1) = diag(f, f^{-1}): x12(f) x21(-f^{-1}) x12(f) x12(-1) x21(1) x12(-1)
        result.push(T(1, 2, pf));
        result.push(T(2, 1, -pfi));
        result.push(T(1, 2, pf));
        result.push(T(1, 2, -one));
        result.push(T(2, 1, one));
        result.push(T(1, 2, -one));
    }
    if (eval_word(result, F, 3, GroupKind::SL) != target)
        throw ValidationError("diagonal_word: word does not evaluate to the diagonal");
    std::lock_guard<std::mutex> lock(mu);
    cache[{F.q(), unit}] = {result, fallback};
    if (used_fallback) *used_fallback = fallback;
    return result;
}

namespace {

Word transpose_word(const Word& w) {
    Word out;
    const auto& ls = w.letters();
    for (auto it = ls.rbegin(); it != ls.rend(); ++it) {
        ElemGen g = *it;
        std::swap(g.i, g.j);
        out.push(g);
    }
    return out;
}

struct FactorResult {
    Word prefix;   // P_i: left-inverse prefix
    Word suffix;   // S_i: right-inverse suffix
    GroupMatrix residual;  // constant diagonal
    int swindle_used = 0;
    int finish_used = 0;
};

// Process one Cayley-Hamilton power factor F = x I + y A0 (2x2 block data),
// reducing it to a constant diagonal residual.  mod_lower_left selects the
// branch arguing modulo the lower-left entry (the paper's B case); the other
// branch runs on the transpose.
FactorResult process_factor(const Field& F, const GroupMatrix& factor2, const Poly& x,
                            const Poly& y, const Poly& borig, const Poly& corig,
                            bool mod_lower_left) {
    GroupMatrix f2 = mod_lower_left ? factor2 : factor2.transposed();
    Poly bslot = mod_lower_left ? borig : corig;  // the b of (a, b; sc, d)
    Poly cslot = mod_lower_left ? corig : borig;  // the c rolled out of sc
    // factor block: (x + y a0, y b0; y c0, x + y d0); as swindle input
    // (a, b; s c, d) with s = y.
    SwindleInput in;
    in.a = f2.at(0, 0);
    in.d = f2.at(1, 1);
    in.b = y * bslot;
    in.c = cslot;
    in.s = y;
    ChebPair pair{0, x, y};
    SplitCert cert = chebyshev_split(pair);
    in.s1 = cert.y1;
    in.s2 = cert.y2;
    auto [t1, r1] = poly_divmod(in.a - Poly::one(F), in.s1);
    if (!r1.is_zero()) throw ValidationError("factor: s1 does not divide a - 1");
    auto [t2, r2] = poly_divmod(in.a + Poly::one(F), in.s2);
    if (!r2.is_zero()) throw ValidationError("factor: s2 does not divide a + 1");
    in.t1 = t1;
    in.t2 = t2;

    GroupMatrix work = embed_topleft(f2, 3);
    MoveLog log(F, 3, GroupKind::SL);
    swindle_sl3(in, work, log);
    size_t after_swindle = log.moves();
    finish_to_diagonal(work, log, /*argue_mod_lower_left=*/true);
    FactorResult res{log.left_prefix(), log.right_suffix(), work,
                     static_cast<int>(after_swindle),
                     static_cast<int>(log.moves() - after_swindle)};
    for (int i = 0; i < 3; ++i)
        for (int j = 0; j < 3; ++j)
            if (i != j && !work.at(i, j).is_zero())
                throw ValidationError("factor: residual not diagonal");
    if (!mod_lower_left) {
        // undo the transpose: factor = (S')^T . D . (P')^T
        Word p = transpose_word(res.suffix);
        Word s = transpose_word(res.prefix);
        res.prefix = std::move(p);
        res.suffix = std::move(s);
        res.residual = res.residual.transposed();
    }
    return res;
}

bool is_single_transvection(const GroupMatrix& m, ElemGen* out) {
    int found = -1, fi = 0, fj = 0;
    for (int i = 0; i < m.n(); ++i)
        for (int j = 0; j < m.n(); ++j) {
            if (i == j) {
                if (!m.at(i, j).is_one()) return false;
            } else if (!m.at(i, j).is_zero()) {
                if (found >= 0) return false;
                found = 1;
                fi = i;
                fj = j;
            }
        }
    if (found < 0) return false;
    if (out) *out = ElemGen::linear(fi + 1, fj + 1, m.at(fi, fj));
    return true;
}

}  // namespace

DecompositionReport decompose_sl3(const GroupMatrix& a, const PipelineOptions& opts) {
    const Field& F = a.field();
    if (a.n() != 3 || a.kind() != GroupKind::SL) throw DomainError("decompose_sl3 expects SL(3)");
    if (!a.det_is_one()) throw DomainError("decompose_sl3: det != 1");

    DecompositionReport rep;
    auto finalize = [&](Word w, std::string strategy) {
        rep.word = std::move(w);
        rep.strategy = std::move(strategy);
        rep.total_length = static_cast<int>(rep.word.length());
        rep.verified = (eval_word(rep.word, F, 3, GroupKind::SL) == a);
        rep.within_target = rep.verified && rep.total_length <= 42;
        if (!rep.verified)
            throw ValidationError("decompose_sl3: word fails to evaluate back to the input");
        if (rep.total_length > static_cast<int>(opts.headline_budget))
            throw BudgetExceeded("decompose_sl3: " + std::to_string(rep.total_length) +
                                 " letters exceed the headline budget");
        return rep;
    };

    // short circuits
    if (a.is_identity()) return finalize(Word{}, "short_circuit");
    {
        ElemGen g = ElemGen::linear(1, 2, Poly::one(F));
        if (is_single_transvection(a, &g)) {
            Word w;
            w.push(g);
            return finalize(std::move(w), "short_circuit");
        }
    }
    if (a.entries_constant()) {
        auto w = ConstantGroupTable::get(F, GroupKind::SL, 3).word_for(a);
        if (w && w->length() <= opts.headline_budget) return finalize(std::move(*w), "short_circuit");
    }

    // stage pipeline
    std::string pipeline_failure;
    try {
        GroupMatrix work = a;
        MoveLog log(F, 3, GroupKind::SL);
        rep.stages.clear();
        size_t mark = 0;
        auto close_stage = [&](const std::string& name, int paper, int guaranteed) {
            rep.stages.push_back({name, paper, guaranteed, static_cast<int>(log.moves() - mark)});
            mark = log.moves();
        };

        reduce_sl3_to_sl2(work, log);
        close_stage("reduce", 7, 8);

        // unit top-left short path: finish directly
        bool direct = work.at(0, 0).is_unit() || work.at(1, 0).is_zero() || work.at(0, 1).is_zero();
        Word assembled;
        bool fallback = false;
        if (direct) {
            // triangular or unit-cornered block: at most 3 moves to a diagonal
            if (work.at(0, 0).is_zero()) {
                // (0, b; c, d): swap via one move making the corner a unit
                log.apply(work, Side::Left, T(1, 2, Poly::one(F)));
            }
            if (!work.at(0, 0).is_unit()) {
                // triangular with nonunit diagonal cannot happen (det 1)
                throw ValidationError("direct finish: nonunit diagonal");
            }
            uint64_t e = finish_to_diagonal(work, log, work.at(1, 0).is_zero() ? false : true);
            close_stage("finish", 3, 4);
            uint64_t corner = work.at(2, 2).constant_value();
            uint64_t d22 = work.at(1, 1).constant_value();
            // residual diag(e, d22, corner); expand through the diagonal machinery
            GroupMatrix resid = GroupMatrix::identity(F, 3, GroupKind::SL);
            resid.at(0, 0) = Poly::constant(F, e);
            resid.at(1, 1) = Poly::constant(F, d22);
            resid.at(2, 2) = Poly::constant(F, corner);
            auto wd = ConstantGroupTable::get(F, GroupKind::SL, 3).word_for(resid);
            if (!wd) throw ValidationError("direct finish: residual not in group table");
            assembled = log.extract(*wd);
            close_stage("diagonal", 4, 6);
        } else {
            dirichlet_move(work, log, opts.search);
            close_stage("dirichlet", 1, 1);
            trost_move(work, log, opts.search);
            close_stage("trost", 1, 1);

            Poly A0 = work.at(0, 0), B0 = work.at(0, 1), C0 = work.at(1, 0), D0 = work.at(1, 1);
            DeltaValue db = delta_of(B0), dc = delta_of(C0);
            auto [u, v] = delta_bezout(db.delta, dc.delta);
            unsigned __int128 m1u = u * db.delta, m2u = v * dc.delta;
            if (m1u > opts.max_power || m2u > opts.max_power)
                throw SearchExhausted("split exponents exceed the feasibility gate");
            int64_t m1 = static_cast<int64_t>(m1u), m2 = -static_cast<int64_t>(m2u);
            Poly tau = A0 + D0;
            long degtau = std::max(tau.deg(), 0);
            if ((static_cast<long>(m1u) + static_cast<long>(m2u)) * degtau > opts.max_work)
                throw SearchExhausted("Chebyshev degrees exceed the feasibility gate");

            GroupMatrix block(F, 2, GroupKind::SL);
            block.at(0, 0) = A0; block.at(0, 1) = B0; block.at(1, 0) = C0; block.at(1, 1) = D0;

            struct Piece { Word prefix, suffix; GroupMatrix residual{Field::get(2), 2, GroupKind::SL};
                           int swindle = 0, finish = 0; bool present = false; };
            Piece pieces[2];
            int64_t ms[2] = {m1, m2};
            for (int k = 0; k < 2; ++k) {
                int64_t m = ms[k];
                ChebPair cp = cayley_hamilton_power(block, m);
                GroupMatrix fac(F, 2, GroupKind::SL);
                fac.at(0, 0) = cp.x + cp.y * A0;
                fac.at(0, 1) = cp.y * B0;
                fac.at(1, 0) = cp.y * C0;
                fac.at(1, 1) = cp.x + cp.y * D0;
                if (fac.is_identity()) continue;
                Piece& pc = pieces[k];
                pc.present = true;
                if (fac.at(0, 1).is_zero() && fac.at(1, 0).is_zero()) {
                    // constant-diagonal factor: fold directly into the residual
                    pc.residual = embed_topleft(fac, 3);
                    continue;
                }
                // factor k = 0 carries m1 (multiple of delta(b)): argue mod b
                // using the transpose; factor k = 1 argues mod c.
                FactorResult fr = process_factor(F, fac, cp.x, cp.y, B0, C0,
                                                 /*mod_lower_left=*/k == 1);
                pc.prefix = std::move(fr.prefix);
                pc.suffix = std::move(fr.suffix);
                pc.residual = fr.residual;
                pc.swindle = fr.swindle_used;
                pc.finish = fr.finish_used;
            }
            rep.stages.push_back({"swindle_mod_b", 11, 11, pieces[0].swindle});
            rep.stages.push_back({"finish_mod_b", 3, 3, pieces[0].finish});
            rep.stages.push_back({"swindle_mod_c", 11, 11, pieces[1].swindle});
            rep.stages.push_back({"finish_mod_c", 3, 3, pieces[1].finish});
            mark = log.moves();

            // assemble: block = P1 D1 S1 P2 D2 S2
            //         = P1 (S1 P2)^{D1} (S2)^{D1 D2} D1 D2
            GroupMatrix D1 = pieces[0].present ? pieces[0].residual
                                               : GroupMatrix::identity(F, 3, GroupKind::SL);
            GroupMatrix D2 = pieces[1].present ? pieces[1].residual
                                               : GroupMatrix::identity(F, 3, GroupKind::SL);
            GroupMatrix D = D1 * D2;
            Word mid;
            mid.append(pieces[0].prefix);
            Word s1p2 = pieces[0].suffix;
            s1p2.append(pieces[1].prefix);
            mid.append(conjugate_word_by_diag(s1p2, D1));
            mid.append(conjugate_word_by_diag(pieces[1].suffix, D));

            // D = diag(f, f^{-1}, 1) after sign cancellation
            uint64_t f0 = D.at(0, 0).constant_value();
            Word wd;
            if (!D.is_identity()) {
                if (D.at(2, 2).is_one() && D.at(1, 1).constant_value() == F.inv(f0)) {
                    wd = diagonal_word(F, f0, &fallback);
                } else {
                    auto alt = ConstantGroupTable::get(F, GroupKind::SL, 3).word_for(D);
                    if (!alt) throw ValidationError("assemble: residual diagonal not expressible");
                    wd = *alt;
                }
            }
            mid.append(wd);
            rep.stages.push_back({"diagonal", 4, 6, static_cast<int>(wd.length())});
            assembled = log.extract(mid);
        }
        rep.diagonal_fallback = fallback;
        return finalize(std::move(assembled), "stage_pipeline");
    } catch (const SearchExhausted& e) {
        pipeline_failure = e.what();
    }

    // unwinding fallback for inputs outside the exact pipeline's reach
    rep.stages.clear();
    auto w = unwind(a, opts.headline_budget);
    if (!w)
        throw SearchExhausted("decompose_sl3: stage pipeline infeasible (" + pipeline_failure +
                              ") and unwinding failed");
    rep.stages.push_back({"unwind", static_cast<int>(opts.headline_budget),
                          static_cast<int>(opts.headline_budget), static_cast<int>(w->length())});
    return finalize(std::move(*w), "unwind");
}

}  // namespace sl3
}  // namespace chevwidth
