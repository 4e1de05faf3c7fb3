#include "chevwidth/words.hpp"

#include <array>

namespace chevwidth {

RootC2 negate(RootC2 r) {
    switch (r) {
        case RootC2::A: return RootC2::NegA;
        case RootC2::B: return RootC2::NegB;
        case RootC2::AB: return RootC2::NegAB;
        case RootC2::A2B: return RootC2::NegA2B;
        case RootC2::NegA: return RootC2::A;
        case RootC2::NegB: return RootC2::B;
        case RootC2::NegAB: return RootC2::AB;
        case RootC2::NegA2B: return RootC2::A2B;
    }
    throw DomainError("bad root");
}

const char* root_name(RootC2 r) {
    switch (r) {
        case RootC2::A: return "a";
        case RootC2::B: return "b";
        case RootC2::AB: return "ab";
        case RootC2::A2B: return "2ab";
        case RootC2::NegA: return "-a";
        case RootC2::NegB: return "-b";
        case RootC2::NegAB: return "-ab";
        case RootC2::NegA2B: return "-2ab";
    }
    throw DomainError("bad root");
}

RootC2 root_from_name(const std::string& s) {
    static const std::array<RootC2, 8> all = {RootC2::A, RootC2::B, RootC2::AB, RootC2::A2B,
                                              RootC2::NegA, RootC2::NegB, RootC2::NegAB, RootC2::NegA2B};
    for (auto r : all)
        if (s == root_name(r)) return r;
    throw DomainError("unknown C2 root label: " + s);
}

ElemGen ElemGen::linear(int i, int j, Poly xi) {
    if (i == j || i < 1 || j < 1) throw DomainError("transvection needs i != j, 1-indexed");
    ElemGen g;
    g.type = Type::Linear;
    g.i = i;
    g.j = j;
    g.xi = std::move(xi);
    return g;
}

ElemGen ElemGen::sp(RootC2 r, Poly xi) {
    ElemGen g;
    g.type = Type::SpRoot;
    g.root = r;
    g.xi = std::move(xi);
    return g;
}

ElemGen ElemGen::inverse() const {
    ElemGen g = *this;
    g.xi = -xi;
    return g;
}

// (i, j, sign) entries of the nilpotent part of x_r, 0-indexed.
static const std::vector<std::array<int, 3>>& root_pattern(RootC2 r) {
    static const std::vector<std::array<int, 3>> pats[8] = {
        {{0, 1, +1}, {2, 3, -1}},  // a
        {{1, 2, +1}},              // b
        {{0, 2, +1}, {1, 3, +1}},  // ab
        {{0, 3, +1}},              // 2ab
        {{1, 0, +1}, {3, 2, -1}},  // -a
        {{2, 1, +1}},              // -b
        {{2, 0, +1}, {3, 1, +1}},  // -ab
        {{3, 0, +1}},              // -2ab
    };
    return pats[static_cast<int>(r)];
}

GroupMatrix sp4_root_matrix(RootC2 r, const Poly& xi) {
    const Field& F = xi.field();
    GroupMatrix m = GroupMatrix::identity(F, 4, GroupKind::SP);
    for (const auto& [i, j, s] : root_pattern(r))
        m.at(i, j) = (s > 0) ? xi : -xi;
    return m;
}

GroupMatrix eval_gen(const ElemGen& g, const Field& f, int n, GroupKind kind) {
    if (g.type == ElemGen::Type::Linear) {
        if (kind != GroupKind::SL) throw DomainError("Linear generator in SP word");
        if (g.i > n || g.j > n) throw DomainError("transvection index out of range");
        GroupMatrix m = GroupMatrix::identity(f, n, kind);
        m.at(g.i - 1, g.j - 1) = g.xi;
        return m;
    }
    if (kind != GroupKind::SP || n != 4) throw DomainError("SpRoot generator in SL word");
    return sp4_root_matrix(g.root, g.xi);
}

void Word::push(ElemGen g) {
    if (g.is_zero_param()) return;
    gens_.push_back(std::move(g));
}

void Word::append(const Word& w) {
    for (const auto& g : w.gens_) push(g);
}

Word Word::inverse() const {
    Word w;
    for (auto it = gens_.rbegin(); it != gens_.rend(); ++it) w.push(it->inverse());
    return w;
}

GroupMatrix eval_word(const Word& w, const Field& f, int n, GroupKind kind) {
    GroupMatrix m = GroupMatrix::identity(f, n, kind);
    // apply letters left-to-right: result = g1 g2 ... gk.  Multiply in place
    // via elementary row/col updates for speed.
    for (const auto& g : w.letters()) {
        if (!g.xi.field().same_as(f)) throw DomainError("word letter field mismatch");
        if (g.type == ElemGen::Type::Linear) {
            if (kind != GroupKind::SL) throw DomainError("mixed word kinds");
            // m <- m * t_ij(xi): col j += xi col i
            m.col_add(g.j - 1, g.i - 1, g.xi);
        } else {
            if (kind != GroupKind::SP) throw DomainError("mixed word kinds");
            for (const auto& [i, j, s] : root_pattern(g.root))
                m.col_add(j, i, s > 0 ? g.xi : -g.xi);
        }
    }
    return m;
}

void MoveLog::apply(GroupMatrix& work, Side side, const ElemGen& g) {
    if (g.is_zero_param()) return;
    if (side == Side::Left) {
        if (g.type == ElemGen::Type::Linear) {
            work.row_add(g.i - 1, g.j - 1, g.xi);
        } else {
            for (const auto& [i, j, s] : root_pattern(g.root))
                work.row_add(i, j, s > 0 ? g.xi : -g.xi);
        }
    } else {
        if (g.type == ElemGen::Type::Linear) {
            work.col_add(g.j - 1, g.i - 1, g.xi);
        } else {
            for (const auto& [i, j, s] : root_pattern(g.root))
                work.col_add(j, i, s > 0 ? g.xi : -g.xi);
        }
    }
    entries_.emplace_back(side, g);
}

Word MoveLog::left_prefix() const {
    // residual = L_k ... L_1 * original * R_1 ... R_m
    // original = L_1^{-1} ... L_k^{-1} * residual * R_m^{-1} ... R_1^{-1}
    Word w;
    std::vector<const ElemGen*> lefts;
    for (const auto& [side, g] : entries_)
        if (side == Side::Left) lefts.push_back(&g);
    for (auto* g : lefts) w.push(g->inverse());
    return w;
}

Word MoveLog::right_suffix() const {
    Word w;
    std::vector<const ElemGen*> rights;
    for (const auto& [side, g] : entries_)
        if (side == Side::Right) rights.push_back(&g);
    for (auto it = rights.rbegin(); it != rights.rend(); ++it) w.push((*it)->inverse());
    return w;
}

Word MoveLog::extract(const Word& residual_word) const {
    Word w = left_prefix();
    w.append(residual_word);
    w.append(right_suffix());
    return w;
}

Word conjugate_word_by_diag(const Word& w, const GroupMatrix& D) {
    const Field& F = D.field();
    int n = D.n();
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j) {
            if (i == j && !D.at(i, j).is_unit())
                throw DomainError("diag conjugation requires constant unit diagonal");
            if (i != j && !D.at(i, j).is_zero())
                throw DomainError("diag conjugation requires a diagonal matrix");
        }
    Word out;
    for (const auto& g : w.letters()) {
        ElemGen h = g;
        if (g.type == ElemGen::Type::Linear) {
            uint64_t di = D.at(g.i - 1, g.i - 1).constant_value();
            uint64_t dj = D.at(g.j - 1, g.j - 1).constant_value();
            h.xi = g.xi.scaled(F.mul(di, F.inv(dj)));
        } else {
            const auto& pat = root_pattern(g.root);
            uint64_t di = D.at(pat[0][0], pat[0][0]).constant_value();
            uint64_t dj = D.at(pat[0][1], pat[0][1]).constant_value();
            h.xi = g.xi.scaled(F.mul(di, F.inv(dj)));
        }
        out.push(h);
    }
    return out;
}

GroupMatrix embed(const GroupMatrix& m2, Embedding target) {
    if (m2.n() != 2) throw DomainError("embed expects a 2x2 matrix");
    if (!m2.det_is_one()) throw DomainError("embed expects det = 1");
    const Field& F = m2.field();
    const Poly &a = m2.at(0, 0), &b = m2.at(0, 1), &c = m2.at(1, 0), &d = m2.at(1, 1);
    switch (target) {
        case Embedding::Sl3TopLeft:
            return embed_topleft(m2, 3);
        case Embedding::PhiAlpha: {
            GroupMatrix r = GroupMatrix::identity(F, 4, GroupKind::SP);
            r.at(0, 0) = a; r.at(0, 1) = b; r.at(1, 0) = c; r.at(1, 1) = d;
            r.at(2, 2) = a; r.at(2, 3) = -b; r.at(3, 2) = -c; r.at(3, 3) = d;
            return r;
        }
        case Embedding::PhiBeta: {
            GroupMatrix r = GroupMatrix::identity(F, 4, GroupKind::SP);
            r.at(1, 1) = a; r.at(1, 2) = b; r.at(2, 1) = c; r.at(2, 2) = d;
            return r;
        }
    }
    throw DomainError("bad embedding");
}

GroupMatrix embed_phi_2ab(const GroupMatrix& m2) {
    if (m2.n() != 2) throw DomainError("embed expects a 2x2 matrix");
    const Field& F = m2.field();
    GroupMatrix r = GroupMatrix::identity(F, 4, GroupKind::SP);
    r.at(0, 0) = m2.at(0, 0); r.at(0, 3) = m2.at(0, 1);
    r.at(3, 0) = m2.at(1, 0); r.at(3, 3) = m2.at(1, 1);
    return r;
}

bool in_phi_beta_position(const GroupMatrix& m) {
    if (m.n() != 4) return false;
    static const int zero[][2] = {{0,1},{0,2},{0,3},{1,0},{2,0},{3,0},{1,3},{2,3},{3,1},{3,2}};
    for (auto& z : zero)
        if (!m.at(z[0], z[1]).is_zero()) return false;
    return m.at(0, 0).is_one() && m.at(3, 3).is_one();
}

bool in_phi_alpha_position(const GroupMatrix& m) {
    if (m.n() != 4) return false;
    static const int zero[][2] = {{0,2},{0,3},{1,2},{1,3},{2,0},{2,1},{3,0},{3,1}};
    for (auto& z : zero)
        if (!m.at(z[0], z[1]).is_zero()) return false;
    return m.at(2, 2) == m.at(0, 0) && m.at(2, 3) == -m.at(0, 1) &&
           m.at(3, 2) == -m.at(1, 0) && m.at(3, 3) == m.at(1, 1);
}

bool in_phi_2ab_position(const GroupMatrix& m) {
    if (m.n() != 4) return false;
    static const int zero[][2] = {{0,1},{0,2},{1,0},{1,2},{1,3},{2,0},{2,1},{2,3},{3,1},{3,2}};
    for (auto& z : zero)
        if (!m.at(z[0], z[1]).is_zero()) return false;
    return m.at(1, 1).is_one() && m.at(2, 2).is_one();
}

GroupMatrix phi_beta_block(const GroupMatrix& m) {
    GroupMatrix r(m.field(), 2, GroupKind::SL);
    r.at(0, 0) = m.at(1, 1); r.at(0, 1) = m.at(1, 2);
    r.at(1, 0) = m.at(2, 1); r.at(1, 1) = m.at(2, 2);
    return r;
}

GroupMatrix phi_2ab_block(const GroupMatrix& m) {
    GroupMatrix r(m.field(), 2, GroupKind::SL);
    r.at(0, 0) = m.at(0, 0); r.at(0, 1) = m.at(0, 3);
    r.at(1, 0) = m.at(3, 0); r.at(1, 1) = m.at(3, 3);
    return r;
}

namespace {

// Declared C2 structure constants: [x_r(xi), x_s(zeta)] = prod x_{ir+js}(N xi^i zeta^j).
// Signs fixed by the explicit matrices above; the two-term corrections
// commute with each other, so term order is immaterial.
struct CommTerm { int i, j; RootC2 root; int N; };
struct CommRule { RootC2 r, s; std::vector<CommTerm> terms; };

const std::vector<CommRule>& c2_rules() {
    using R = RootC2;
    static const std::vector<CommRule> rules = {
        {R::A, R::B, {{1, 1, R::AB, +1}, {2, 1, R::A2B, +1}}},
        {R::A, R::AB, {{1, 1, R::A2B, +2}}},
        {R::A, R::NegAB, {{1, 1, R::NegB, -2}}},
        {R::A, R::NegA2B, {{1, 1, R::NegAB, -1}, {2, 1, R::NegB, +1}}},
        {R::B, R::A, {{1, 1, R::AB, -1}, {1, 2, R::A2B, -1}}},
        {R::B, R::NegAB, {{1, 1, R::NegA, +1}, {1, 2, R::NegA2B, +1}}},
        {R::AB, R::A, {{1, 1, R::A2B, -2}}},
        {R::AB, R::NegA, {{1, 1, R::B, -2}}},
        {R::AB, R::NegB, {{1, 1, R::A, +1}, {2, 1, R::A2B, -1}}},
        {R::AB, R::NegA2B, {{1, 1, R::NegA, +1}, {2, 1, R::B, -1}}},
        {R::A2B, R::NegA, {{1, 1, R::AB, -1}, {1, 2, R::B, -1}}},
        {R::A2B, R::NegAB, {{1, 1, R::A, +1}, {1, 2, R::NegB, +1}}},
        {R::NegA, R::AB, {{1, 1, R::B, +2}}},
        {R::NegA, R::A2B, {{1, 1, R::AB, +1}, {2, 1, R::B, +1}}},
        {R::NegA, R::NegB, {{1, 1, R::NegAB, -1}, {2, 1, R::NegA2B, +1}}},
        {R::NegA, R::NegAB, {{1, 1, R::NegA2B, -2}}},
        {R::NegB, R::AB, {{1, 1, R::A, -1}, {1, 2, R::A2B, +1}}},
        {R::NegB, R::NegA, {{1, 1, R::NegAB, +1}, {1, 2, R::NegA2B, -1}}},
        {R::NegAB, R::A, {{1, 1, R::NegB, +2}}},
        {R::NegAB, R::B, {{1, 1, R::NegA, -1}, {2, 1, R::NegA2B, -1}}},
        {R::NegAB, R::A2B, {{1, 1, R::A, -1}, {2, 1, R::NegB, -1}}},
        {R::NegAB, R::NegA, {{1, 1, R::NegA2B, +2}}},
        {R::NegA2B, R::A, {{1, 1, R::NegAB, +1}, {1, 2, R::NegB, -1}}},
        {R::NegA2B, R::AB, {{1, 1, R::NegA, -1}, {1, 2, R::B, +1}}},
        // commuting non-opposite pairs (empty right-hand side)
        {R::A, R::A2B, {}}, {R::A2B, R::A, {}},
        {R::A, R::NegB, {}}, {R::NegB, R::A, {}},
        {R::B, R::AB, {}}, {R::AB, R::B, {}},
        {R::B, R::A2B, {}}, {R::A2B, R::B, {}},
        {R::B, R::NegA, {}}, {R::NegA, R::B, {}},
        {R::AB, R::A2B, {}}, {R::A2B, R::AB, {}},
        {R::NegA, R::NegA2B, {}}, {R::NegA2B, R::NegA, {}},
        {R::NegB, R::NegAB, {}}, {R::NegAB, R::NegB, {}},
        {R::NegB, R::NegA2B, {}}, {R::NegA2B, R::NegB, {}},
        {R::NegAB, R::NegA2B, {}}, {R::NegA2B, R::NegAB, {}},
        {R::B, R::NegA2B, {}}, {R::NegA2B, R::B, {}},
        {R::A2B, R::NegB, {}}, {R::NegB, R::A2B, {}},
    };
    return rules;
}

Poly field_int(const Field& F, int n) {
    uint64_t v = static_cast<uint64_t>(((n % static_cast<int>(F.p())) + static_cast<int>(F.p())) % static_cast<int>(F.p()));
    // lift into the field code (prime subfield)
    return Poly::constant(F, v);
}

}  // namespace

std::vector<CommutatorCheck> verify_commutator_table(const Field& F, int degree_cap,
                                                     int trials, uint64_t seed) {
    std::vector<CommutatorCheck> out;
    Rng rng(seed);
    // C2 rules
    for (const auto& rule : c2_rules()) {
        bool ok = true;
        for (int t = 0; t < trials && ok; ++t) {
            Poly xi = rng.poly(F, degree_cap), ze = rng.poly(F, degree_cap);
            GroupMatrix X = sp4_root_matrix(rule.r, xi);
            GroupMatrix Y = sp4_root_matrix(rule.s, ze);
            GroupMatrix lhs = X * Y * sp4_root_matrix(rule.r, -xi) * sp4_root_matrix(rule.s, -ze);
            GroupMatrix rhs = GroupMatrix::identity(F, 4, GroupKind::SP);
            for (const auto& term : rule.terms) {
                Poly param = field_int(F, term.N);
                for (int k = 0; k < term.i; ++k) param = param * xi;
                for (int k = 0; k < term.j; ++k) param = param * ze;
                rhs = rhs * sp4_root_matrix(term.root, param);
            }
            ok = (lhs == rhs);
        }
        std::string rel;
        for (const auto& term : rule.terms) {
            rel += std::string("x_") + root_name(term.root) + "(" + std::to_string(term.N) + " xi^" +
                   std::to_string(term.i) + " ze^" + std::to_string(term.j) + ") ";
        }
        if (rel.empty()) rel = "1";
        std::string pair = std::string("[x_") + root_name(rule.r) + ", x_" + root_name(rule.s) + "]";
        out.push_back({pair, rel, ok});
        if (!ok) throw ValidationError("commutator identity failed for " + pair);
    }
    // A2 rules via Linear in SL(3): [t_ij(xi), t_jk(ze)] = t_ik(xi ze) for
    // distinct i, j, k; disjoint pairs commute; opposite pairs excluded.
    for (int i = 1; i <= 3; ++i)
        for (int j = 1; j <= 3; ++j)
            for (int k = 1; k <= 3; ++k)
                for (int l = 1; l <= 3; ++l) {
                    if (i == j || k == l) continue;
                    if (i == l && j == k) continue;  // opposite roots
                    bool ok = true;
                    for (int t = 0; t < trials && ok; ++t) {
                        Poly xi = rng.poly(F, degree_cap), ze = rng.poly(F, degree_cap);
                        GroupMatrix X = eval_gen(ElemGen::linear(i, j, xi), F, 3, GroupKind::SL);
                        GroupMatrix Y = eval_gen(ElemGen::linear(k, l, ze), F, 3, GroupKind::SL);
                        GroupMatrix lhs = X * Y * eval_gen(ElemGen::linear(i, j, -xi), F, 3, GroupKind::SL) *
                                          eval_gen(ElemGen::linear(k, l, -ze), F, 3, GroupKind::SL);
                        GroupMatrix rhs = GroupMatrix::identity(F, 3, GroupKind::SL);
                        if (j == k && i != l) rhs.at(i - 1, l - 1) = xi * ze;
                        if (l == i && j != k) rhs.at(k - 1, j - 1) = -(xi * ze);
                        ok = (lhs == rhs);
                    }
                    std::string pair = "[t" + std::to_string(i) + std::to_string(j) + ", t" +
                                       std::to_string(k) + std::to_string(l) + "]";
                    std::string rel = (j == k && i != l)   ? "t" + std::to_string(i) + std::to_string(l) + "(xi ze)"
                                      : (l == i && j != k) ? "t" + std::to_string(k) + std::to_string(j) + "(-xi ze)"
                                                           : "1";
                    out.push_back({pair, rel, ok});
                    if (!ok) throw ValidationError("commutator identity failed for " + pair);
                }
    return out;
}

}  // namespace chevwidth
