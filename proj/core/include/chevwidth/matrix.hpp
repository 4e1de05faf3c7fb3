#pragma once

#include "chevwidth/poly.hpp"

namespace chevwidth {

enum class GroupKind { SL, SP };

/// Exact n x n matrix over F_q[t], n in {2, 3, 4}, tagged SL (det 1) or
/// SP (symplectic for the Gram matrix with rows (0,0,0,1), (0,0,1,0),
/// (0,-1,0,0), (-1,0,0,0)).
class GroupMatrix {
public:
    GroupMatrix(const Field& f, int n, GroupKind kind);
    static GroupMatrix identity(const Field& f, int n, GroupKind kind);

    int n() const { return n_; }
    GroupKind kind() const { return kind_; }
    const Field& field() const { return *field_; }

    Poly& at(int i, int j) { return e_[i * n_ + j]; }             // 0-indexed
    const Poly& at(int i, int j) const { return e_[i * n_ + j]; }

    GroupMatrix operator*(const GroupMatrix& o) const;
    bool operator==(const GroupMatrix& o) const;
    bool operator!=(const GroupMatrix& o) const { return !(*this == o); }

    Poly det() const;
    GroupMatrix inverse() const;   // adjugate; requires det = 1
    GroupMatrix transposed() const;

    bool is_identity() const;
    bool det_is_one() const;
    bool is_symplectic() const;    // n = 4 only
    // det-1 check for SL; det-1 and form check for SP
    bool satisfies_invariants() const;
    void require_invariants(const char* where) const;

    bool entries_constant() const;
    int max_deg() const;

    // elementary row/col operations (exact): row i += xi * row j, etc.
    void row_add(int i, int j, const Poly& xi);
    void col_add(int j, int i, const Poly& xi);  // col j += xi * col i

    std::string str() const;

private:
    const Field* field_;
    int n_;
    GroupKind kind_;
    std::vector<Poly> e_;
};

// top-left embedding of an m x m block into an n x n identity
GroupMatrix embed_topleft(const GroupMatrix& m, int n);
// extract top-left block
GroupMatrix block_topleft(const GroupMatrix& m, int k);

}  // namespace chevwidth
