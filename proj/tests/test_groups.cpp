#include "doctest.h"

#include "chevwidth/bfs.hpp"
#include "chevwidth/words.hpp"

using namespace chevwidth;

namespace {

Word random_word(const Field& F, GroupKind kind, int n, int len, int degcap, Rng& rng) {
    Word w;
    if (kind == GroupKind::SL) {
        std::vector<std::pair<int, int>> pairs;
        for (int i = 1; i <= n; ++i)
            for (int j = 1; j <= n; ++j)
                if (i != j) pairs.emplace_back(i, j);
        for (int k = 0; k < len; ++k) {
            auto [i, j] = pairs[rng.below(pairs.size())];
            w.push(ElemGen::linear(i, j, rng.poly(F, degcap)));
        }
    } else {
        static const RootC2 roots[8] = {RootC2::A, RootC2::B, RootC2::AB, RootC2::A2B,
                                        RootC2::NegA, RootC2::NegB, RootC2::NegAB, RootC2::NegA2B};
        for (int k = 0; k < len; ++k)
            w.push(ElemGen::sp(roots[rng.below(8)], rng.poly(F, degcap)));
    }
    return w;
}

}  // namespace

TEST_CASE("sp4 root matrices preserve the form, det 1, additivity") {
    static const RootC2 roots[8] = {RootC2::A, RootC2::B, RootC2::AB, RootC2::A2B,
                                    RootC2::NegA, RootC2::NegB, RootC2::NegAB, RootC2::NegA2B};
    for (uint64_t q : {2ull, 3ull, 5ull}) {
        const Field& F = Field::get(q);
        Rng rng(5 + q);
        for (auto r : roots) {
            for (int t = 0; t < 12; ++t) {
                Poly xi = rng.poly(F, 3), ze = rng.poly(F, 3);
                GroupMatrix m = sp4_root_matrix(r, xi);
                CHECK(m.det_is_one());
                CHECK(m.is_symplectic());
                CHECK(sp4_root_matrix(r, xi) * sp4_root_matrix(r, ze) == sp4_root_matrix(r, xi + ze));
            }
            Poly xi = rng.nonzero_poly(F, 2);
            CHECK(sp4_root_matrix(negate(r), xi) == sp4_root_matrix(r, xi).transposed());
        }
    }
}

TEST_CASE("explicit x_alpha, x_beta matrices") {
    const Field& F = Field::get(3);
    Poly xi = Poly::t(F);
    GroupMatrix a = sp4_root_matrix(RootC2::A, xi);
    CHECK(a.at(0, 1) == xi);
    CHECK(a.at(2, 3) == -xi);
    CHECK(a.at(1, 0).is_zero());
    GroupMatrix b = sp4_root_matrix(RootC2::B, xi);
    CHECK(b.at(1, 2) == xi);
    for (int i = 0; i < 4; ++i)
        for (int j = 0; j < 4; ++j)
            if (i != j && !(i == 1 && j == 2)) CHECK(b.at(i, j).is_zero());
}

TEST_CASE("eval_word basics") {
    const Field& F = Field::get(2);
    Word empty;
    CHECK(eval_word(empty, F, 3, GroupKind::SL).is_identity());

    Poly xi = Poly::t(F);
    Word cancel;
    cancel.push(ElemGen::linear(1, 2, xi));
    cancel.push(ElemGen::linear(1, 2, -xi));
    CHECK(eval_word(cancel, F, 3, GroupKind::SL).is_identity());

    Word ab;
    ab.push(ElemGen::sp(RootC2::A, Poly::one(F)));
    ab.push(ElemGen::sp(RootC2::B, Poly::one(F)));
    GroupMatrix direct =
        sp4_root_matrix(RootC2::A, Poly::one(F)) * sp4_root_matrix(RootC2::B, Poly::one(F));
    CHECK(eval_word(ab, F, 4, GroupKind::SP) == direct);

    Word mixed;
    mixed.push(ElemGen::sp(RootC2::A, Poly::one(F)));
    CHECK_THROWS_AS(eval_word(mixed, F, 3, GroupKind::SL), DomainError);
}

TEST_CASE("eval(w . inverse(w)) is the identity for random words") {
    for (uint64_t q : {2ull, 3ull, 5ull}) {
        const Field& F = Field::get(q);
        Rng rng(99 + q);
        for (int t = 0; t < 60; ++t) {
            Word w = random_word(F, GroupKind::SL, 3, 1 + static_cast<int>(rng.below(30)), 3, rng);
            Word prod = w;
            prod.append(w.inverse());
            CHECK(eval_word(prod, F, 3, GroupKind::SL).is_identity());

            Word v = random_word(F, GroupKind::SP, 4, 1 + static_cast<int>(rng.below(30)), 3, rng);
            Word vprod = v;
            vprod.append(v.inverse());
            CHECK(eval_word(vprod, F, 4, GroupKind::SP).is_identity());
            CHECK(eval_word(v, F, 4, GroupKind::SP).is_symplectic());
        }
    }
}

TEST_CASE("move log extraction reconstructs the original") {
    for (uint64_t q : {2ull, 3ull}) {
        const Field& F = Field::get(q);
        Rng rng(123 + q);
        for (int t = 0; t < 30; ++t) {
            Word w = random_word(F, GroupKind::SP, 4, 12, 2, rng);
            GroupMatrix orig = eval_word(w, F, 4, GroupKind::SP);
            GroupMatrix work = orig;
            MoveLog log(F, 4, GroupKind::SP);
            static const RootC2 roots[8] = {RootC2::A, RootC2::B, RootC2::AB, RootC2::A2B,
                                            RootC2::NegA, RootC2::NegB, RootC2::NegAB, RootC2::NegA2B};
            for (int k = 0; k < 7; ++k) {
                Side side = rng.below(2) ? Side::Left : Side::Right;
                log.apply(work, side, ElemGen::sp(roots[rng.below(8)], rng.poly(F, 2)));
            }
            Word prefix = log.left_prefix(), suffix = log.right_suffix();
            GroupMatrix back = eval_word(prefix, F, 4, GroupKind::SP) * work *
                               eval_word(suffix, F, 4, GroupKind::SP);
            CHECK(back == orig);
        }
    }
}

TEST_CASE("embeddings") {
    const Field& F = Field::get(5);
    GroupMatrix id2 = GroupMatrix::identity(F, 2, GroupKind::SL);
    CHECK(embed(id2, Embedding::Sl3TopLeft).is_identity());
    CHECK(embed(id2, Embedding::PhiAlpha).is_identity());
    CHECK(embed(id2, Embedding::PhiBeta).is_identity());

    Rng rng(17);
    int done = 0;
    for (int t = 0; t < 200 && done < 30; ++t) {
        Poly a = rng.poly(F, 2), b = rng.poly(F, 2), c = rng.poly(F, 2);
        Poly num = Poly::one(F) + b * c;
        if (a.is_zero()) continue;
        auto [d, rem] = poly_divmod(num, a);
        if (!rem.is_zero()) continue;
        ++done;
        GroupMatrix m(F, 2, GroupKind::SL);
        m.at(0, 0) = a; m.at(0, 1) = b; m.at(1, 0) = c; m.at(1, 1) = d;
        REQUIRE(m.det_is_one());

        GroupMatrix pa = embed(m, Embedding::PhiAlpha);
        CHECK(pa.is_symplectic());
        CHECK(in_phi_alpha_position(pa));
        CHECK(pa.at(0, 0) == a);
        CHECK(pa.at(2, 3) == -b);
        CHECK(pa.at(3, 2) == -c);

        GroupMatrix pb = embed(m, Embedding::PhiBeta);
        CHECK(pb.is_symplectic());
        CHECK(in_phi_beta_position(pb));
        CHECK(phi_beta_block(pb) == m);

        GroupMatrix pc = embed_phi_2ab(m);
        CHECK(pc.is_symplectic());
        CHECK(in_phi_2ab_position(pc));
        CHECK(phi_2ab_block(pc) == m);
    }
    CHECK(done >= 20);

    Poly xi = Poly::t(F);
    GroupMatrix e12 = GroupMatrix::identity(F, 2, GroupKind::SL);
    e12.at(0, 1) = xi;
    GroupMatrix e21 = GroupMatrix::identity(F, 2, GroupKind::SL);
    e21.at(1, 0) = xi;
    CHECK(embed(e12, Embedding::PhiAlpha) == sp4_root_matrix(RootC2::A, xi));
    CHECK(embed(e21, Embedding::PhiAlpha) == sp4_root_matrix(RootC2::NegA, xi));
    CHECK(embed(e12, Embedding::PhiBeta) == sp4_root_matrix(RootC2::B, xi));
    CHECK(embed(e21, Embedding::PhiBeta) == sp4_root_matrix(RootC2::NegB, xi));
}

TEST_CASE("root matrices are square-zero exponentials compatible with the form") {
    const Field& F = Field::get(7);
    static const RootC2 roots[8] = {RootC2::A, RootC2::B, RootC2::AB, RootC2::A2B,
                                    RootC2::NegA, RootC2::NegB, RootC2::NegAB, RootC2::NegA2B};
    GroupMatrix J(F, 4, GroupKind::SP);
    J.at(0, 3) = Poly::one(F);
    J.at(1, 2) = Poly::one(F);
    J.at(2, 1) = -Poly::one(F);
    J.at(3, 0) = -Poly::one(F);
    for (auto r : roots) {
        GroupMatrix x = sp4_root_matrix(r, Poly::one(F));
        GroupMatrix n = x;
        for (int i = 0; i < 4; ++i) n.at(i, i) = n.at(i, i) - Poly::one(F);
        GroupMatrix n2 = n * n;
        for (int i = 0; i < 4; ++i)
            for (int j = 0; j < 4; ++j) CHECK(n2.at(i, j).is_zero());
        GroupMatrix lie = n.transposed() * J;
        GroupMatrix lie2 = J * n;
        for (int i = 0; i < 4; ++i)
            for (int j = 0; j < 4; ++j) CHECK((lie.at(i, j) + lie2.at(i, j)).is_zero());
    }
}

TEST_CASE("commutator table holds for q in {2,3,5}") {
    for (uint64_t q : {2ull, 3ull, 5ull}) {
        auto checks = verify_commutator_table(Field::get(q), 2, 6, 77 + q);
        CHECK(checks.size() > 40);
        for (const auto& c : checks) CHECK(c.ok);
    }
}

TEST_CASE("diag conjugation preserves length and conjugates the evaluation") {
    const Field& F = Field::get(5);
    Rng rng(3);
    GroupMatrix D = GroupMatrix::identity(F, 4, GroupKind::SP);
    D.at(0, 0) = Poly::constant(F, 2);
    D.at(1, 1) = Poly::constant(F, 4);
    D.at(2, 2) = Poly::constant(F, F.inv(4));
    D.at(3, 3) = Poly::constant(F, F.inv(2));
    GroupMatrix Dinv = D.inverse();
    for (int t = 0; t < 20; ++t) {
        Word w = random_word(F, GroupKind::SP, 4, 8, 2, rng);
        Word cw = conjugate_word_by_diag(w, D);
        CHECK(cw.length() == w.length());
        CHECK(eval_word(cw, F, 4, GroupKind::SP) == D * eval_word(w, F, 4, GroupKind::SP) * Dinv);
    }
}
