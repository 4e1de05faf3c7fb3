#include "chevwidth/unwind.hpp"

#include <algorithm>
#include <unordered_set>

namespace chevwidth {

namespace {

long weight(const GroupMatrix& m) {
    long w = 0;
    for (int i = 0; i < m.n(); ++i)
        for (int j = 0; j < m.n(); ++j) {
            const Poly& p = m.at(i, j);
            if (!p.is_zero()) w += p.deg() + 1;
        }
    return w;
}

struct Action { int i, j, sign; };

struct MoveTemplate {
    ElemGen gen;  // parameter placeholder
    std::vector<Action> acts;
};

std::vector<MoveTemplate> move_set(const GroupMatrix& m) {
    const Field& F = m.field();
    std::vector<MoveTemplate> out;
    Poly one = Poly::one(F);
    if (m.kind() == GroupKind::SL) {
        for (int i = 0; i < m.n(); ++i)
            for (int j = 0; j < m.n(); ++j) {
                if (i == j) continue;
                out.push_back({ElemGen::linear(i + 1, j + 1, one), {{i, j, +1}}});
            }
    } else {
        static const RootC2 roots[8] = {RootC2::A, RootC2::B, RootC2::AB, RootC2::A2B,
                                        RootC2::NegA, RootC2::NegB, RootC2::NegAB, RootC2::NegA2B};
        static const int pat[8][2][3] = {
            {{0, 1, +1}, {2, 3, -1}}, {{1, 2, +1}, {-1, -1, 0}},
            {{0, 2, +1}, {1, 3, +1}}, {{0, 3, +1}, {-1, -1, 0}},
            {{1, 0, +1}, {3, 2, -1}}, {{2, 1, +1}, {-1, -1, 0}},
            {{2, 0, +1}, {3, 1, +1}}, {{3, 0, +1}, {-1, -1, 0}},
        };
        for (int r = 0; r < 8; ++r) {
            std::vector<Action> acts;
            for (int t = 0; t < 2; ++t)
                if (pat[r][t][0] >= 0) acts.push_back({pat[r][t][0], pat[r][t][1], pat[r][t][2]});
            out.push_back({ElemGen::sp(roots[r], one), acts});
        }
    }
    return out;
}

void collect_candidates(const GroupMatrix& m, Side side, const std::vector<Action>& acts,
                        std::vector<Poly>& out) {
    const Field& F = m.field();
    for (const auto& a : acts) {
        for (int k = 0; k < m.n(); ++k) {
            const Poly *src, *dst;
            if (side == Side::Left) {
                src = &m.at(a.j, k);
                dst = &m.at(a.i, k);
            } else {
                src = &m.at(k, a.i);
                dst = &m.at(k, a.j);
            }
            if (src->is_zero() || dst->is_zero()) continue;
            if (dst->deg() < src->deg()) continue;
            Poly q = poly_divmod(*dst, *src).first;
            if (q.is_zero()) continue;
            out.push_back(a.sign > 0 ? -q : q);
        }
    }
    // small constants catch constant-parameter letters
    if (F.q() <= 9) {
        for (uint64_t c = 1; c < F.q(); ++c) out.push_back(Poly::constant(F, c));
    }
}

GroupMatrix apply_actions(const GroupMatrix& m, Side side, const std::vector<Action>& acts,
                          const Poly& xi) {
    GroupMatrix tmp = m;
    for (const auto& a : acts) {
        Poly p = (a.sign > 0) ? xi : -xi;
        if (side == Side::Left)
            tmp.row_add(a.i, a.j, p);
        else
            tmp.col_add(a.j, a.i, p);
    }
    return tmp;
}

struct MatHash {
    size_t operator()(const std::vector<uint64_t>& v) const {
        uint64_t h = 1469598103934665603ull;
        for (uint64_t x : v) {
            h ^= x;
            h *= 1099511628211ull;
        }
        return static_cast<size_t>(h);
    }
};

std::vector<uint64_t> fingerprint(const GroupMatrix& m) {
    std::vector<uint64_t> v;
    for (int i = 0; i < m.n(); ++i)
        for (int j = 0; j < m.n(); ++j) {
            const Poly& p = m.at(i, j);
            v.push_back(0x8000000000ull + p.coeffs().size());
            for (uint64_t c : p.coeffs()) v.push_back(c);
        }
    return v;
}

}  // namespace

std::optional<Word> unwind(const GroupMatrix& m0, size_t max_letters) {
    const Field& F = m0.field();
    auto moves = move_set(m0);

    struct Node {
        GroupMatrix work;
        std::vector<std::pair<Side, ElemGen>> applied;
        long w;
    };
    const size_t beam_width = 24;
    std::vector<Node> beam{{m0, {}, weight(m0)}};
    std::unordered_set<std::vector<uint64_t>, MatHash> seen{fingerprint(m0)};

    auto try_finish = [&](const Node& nd) -> std::optional<Word> {
        if (!nd.work.entries_constant()) return std::nullopt;
        const ConstantGroupTable& table = ConstantGroupTable::get(F, m0.kind(), m0.n());
        auto fin = table.word_for(nd.work);
        if (!fin) return std::nullopt;
        // rebuild through a MoveLog to reuse the extraction identity
        GroupMatrix replay = m0;
        MoveLog log(F, m0.n(), m0.kind());
        for (const auto& [side, gen] : nd.applied) log.apply(replay, side, gen);
        Word w = log.extract(*fin);
        if (w.length() > max_letters) return std::nullopt;
        if (eval_word(w, F, m0.n(), m0.kind()) != m0) return std::nullopt;
        return w;
    };

    if (auto w = try_finish(beam[0])) return w;

    for (size_t step = 0; step < max_letters; ++step) {
        std::vector<Node> next;
        for (const auto& nd : beam) {
            if (nd.applied.size() >= max_letters) continue;
            for (int s = 0; s < 2; ++s) {
                Side side = s == 0 ? Side::Left : Side::Right;
                for (const auto& mv : moves) {
                    std::vector<Poly> cands;
                    collect_candidates(nd.work, side, mv.acts, cands);
                    for (const auto& xi : cands) {
                        if (xi.is_zero()) continue;
                        GroupMatrix after = apply_actions(nd.work, side, mv.acts, xi);
                        long w = weight(after);
                        if (w > nd.w) continue;  // never move uphill
                        auto fp = fingerprint(after);
                        if (seen.count(fp)) continue;
                        seen.insert(std::move(fp));
                        Node nn{std::move(after), nd.applied, w};
                        ElemGen g = mv.gen;
                        g.xi = xi;
                        nn.applied.emplace_back(side, g);
                        next.push_back(std::move(nn));
                    }
                }
            }
        }
        if (next.empty()) return std::nullopt;
        std::sort(next.begin(), next.end(), [](const Node& a, const Node& b) {
            if (a.w != b.w) return a.w < b.w;
            return a.applied.size() < b.applied.size();
        });
        if (next.size() > beam_width) next.resize(beam_width);
        for (const auto& nd : next)
            if (auto w = try_finish(nd)) return w;
        beam = std::move(next);
    }
    return std::nullopt;
}

}  // namespace chevwidth
