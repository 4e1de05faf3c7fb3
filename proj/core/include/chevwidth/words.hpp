#pragma once

#include <functional>

#include "chevwidth/matrix.hpp"

namespace chevwidth {

/// The eight roots of C2; alpha short, beta long, closed under negation.
enum class RootC2 { A, B, AB, A2B, NegA, NegB, NegAB, NegA2B };

RootC2 negate(RootC2 r);
const char* root_name(RootC2 r);           // "a", "b", "ab", "2ab", "-a", ...
RootC2 root_from_name(const std::string&);

/// One elementary root unipotent with parameter.  Linear(i, j, xi) is the
/// transvection I + xi E_ij (1-indexed) in SL(n); SpRoot(r, xi) is the C2
/// root unipotent x_r(xi) in Sp(4).
struct ElemGen {
    enum class Type { Linear, SpRoot } type;
    int i = 0, j = 0;        // Linear
    RootC2 root = RootC2::A; // SpRoot
    Poly xi;

    static ElemGen linear(int i, int j, Poly xi);
    static ElemGen sp(RootC2 r, Poly xi);
    ElemGen inverse() const;
    bool is_zero_param() const { return xi.is_zero(); }
};

// Explicit 4x4 matrix of x_r(xi); preserves the Gram form, additive in xi.
GroupMatrix sp4_root_matrix(RootC2 r, const Poly& xi);

GroupMatrix eval_gen(const ElemGen& g, const Field& f, int n, GroupKind kind);

/// Finite sequence of elementary generators.  Letters with zero parameter
/// are dropped at construction; reported length excludes them.
class Word {
public:
    Word() = default;
    void push(ElemGen g);
    void append(const Word& w);
    size_t length() const { return gens_.size(); }
    bool empty() const { return gens_.empty(); }
    const std::vector<ElemGen>& letters() const { return gens_; }
    Word inverse() const;  // reversed order, negated parameters

private:
    std::vector<ElemGen> gens_;
};

GroupMatrix eval_word(const Word& w, const Field& f, int n, GroupKind kind);

enum class Side { Left, Right };

/// Two-sided log of elementary multiplications applied to a working matrix
/// during a reduction.  Replaying the log on the original matrix yields the
/// recorded residual; extraction rebuilds the original as
///   original = (reversed inverses of Left moves) * residual
///              * (reversed inverses of Right moves).
class MoveLog {
public:
    MoveLog(const Field& f, int n, GroupKind kind) : field_(&f), n_(n), kind_(kind) {}

    // multiply work in place: Left means work <- eval(g) * work
    void apply(GroupMatrix& work, Side side, const ElemGen& g);
    size_t moves() const { return entries_.size(); }
    const std::vector<std::pair<Side, ElemGen>>& entries() const { return entries_; }

    // Word W with eval(W) = original, given the residual expressed as a word.
    Word extract(const Word& residual_word) const;
    // Split form: left-inverse prefix and right-inverse suffix.
    Word left_prefix() const;
    Word right_suffix() const;

    // mark for stage accounting
    size_t checkpoint() const { return entries_.size(); }

private:
    const Field* field_;
    int n_;
    GroupKind kind_;
    std::vector<std::pair<Side, ElemGen>> entries_;
};

/// Conjugate each letter of w by the diagonal torus element D (as a matrix):
/// each x_r(xi) becomes x_r(xi') with eval = D x_r(xi) D^{-1}.  D must be
/// diagonal with unit (constant) entries; word length is preserved.
Word conjugate_word_by_diag(const Word& w, const GroupMatrix& D);

enum class Embedding { Sl3TopLeft, PhiAlpha, PhiBeta };

// SL(2) -> SL(3) top-left, or the short/long root embeddings into Sp(4).
GroupMatrix embed(const GroupMatrix& m2, Embedding target);
// the 2-alpha+beta corner embedding (rows/cols 1 and 4)
GroupMatrix embed_phi_2ab(const GroupMatrix& m2);

bool in_phi_beta_position(const GroupMatrix& m);
bool in_phi_alpha_position(const GroupMatrix& m);
bool in_phi_2ab_position(const GroupMatrix& m);
GroupMatrix phi_beta_block(const GroupMatrix& m);   // 2x2 block of a beta-position matrix
GroupMatrix phi_2ab_block(const GroupMatrix& m);

/// One checked identity of the Chevalley commutator table.
struct CommutatorCheck {
    std::string pair;     // e.g. "[x_a, x_b]"
    std::string relation; // declared right-hand side
    bool ok;
};

/// Checks [x_r(xi), x_s(zeta)] against the declared structure constants for
/// all non-opposite pairs of C2 roots (and the A2 table via Linear
/// generators), for `trials` random parameter pairs of degree <= degree_cap.
/// Throws ValidationError naming the pair on any failure.
std::vector<CommutatorCheck> verify_commutator_table(const Field& f, int degree_cap,
                                                     int trials = 8, uint64_t seed = 1);

}  // namespace chevwidth
