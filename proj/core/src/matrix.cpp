#include "chevwidth/matrix.hpp"

namespace chevwidth {

GroupMatrix::GroupMatrix(const Field& f, int n, GroupKind kind)
    : field_(&f), n_(n), kind_(kind), e_(n * n, Poly(f)) {
    if (n < 2 || n > 4) throw DomainError("matrix dimension must be 2, 3 or 4");
    if (kind == GroupKind::SP && n != 4) throw DomainError("SP requires n = 4");
}

GroupMatrix GroupMatrix::identity(const Field& f, int n, GroupKind kind) {
    GroupMatrix m(f, n, kind);
    for (int i = 0; i < n; ++i) m.at(i, i) = Poly::one(f);
    return m;
}

GroupMatrix GroupMatrix::operator*(const GroupMatrix& o) const {
    if (n_ != o.n_ || kind_ != o.kind_) throw DomainError("matrix shape/kind mismatch");
    GroupMatrix r(*field_, n_, kind_);
    for (int i = 0; i < n_; ++i)
        for (int k = 0; k < n_; ++k) {
            const Poly& a = at(i, k);
            if (a.is_zero()) continue;
            for (int j = 0; j < n_; ++j) {
                const Poly& b = o.at(k, j);
                if (b.is_zero()) continue;
                r.at(i, j) = r.at(i, j) + a * b;
            }
        }
    return r;
}

bool GroupMatrix::operator==(const GroupMatrix& o) const {
    if (n_ != o.n_) return false;
    for (int i = 0; i < n_ * n_; ++i)
        if (e_[i] != o.e_[i]) return false;
    return true;
}

namespace {

Poly det_rec(const GroupMatrix& m, std::vector<int> rows, std::vector<int> cols) {
    const Field& F = m.field();
    if (rows.size() == 1) return m.at(rows[0], cols[0]);
    Poly acc(F);
    std::vector<int> sub_rows(rows.begin() + 1, rows.end());
    for (size_t j = 0; j < cols.size(); ++j) {
        const Poly& a = m.at(rows[0], cols[j]);
        if (a.is_zero()) continue;
        std::vector<int> sub_cols;
        for (size_t k = 0; k < cols.size(); ++k)
            if (k != j) sub_cols.push_back(cols[k]);
        Poly term = a * det_rec(m, sub_rows, sub_cols);
        acc = (j % 2 == 0) ? acc + term : acc - term;
    }
    return acc;
}

}  // namespace

Poly GroupMatrix::det() const {
    std::vector<int> idx(n_);
    for (int i = 0; i < n_; ++i) idx[i] = i;
    return det_rec(*this, idx, idx);
}

GroupMatrix GroupMatrix::inverse() const {
    if (!det_is_one()) throw DomainError("inverse requires det = 1");
    GroupMatrix r(*field_, n_, kind_);
    std::vector<int> all(n_);
    for (int i = 0; i < n_; ++i) all[i] = i;
    for (int i = 0; i < n_; ++i)
        for (int j = 0; j < n_; ++j) {
            std::vector<int> rows, cols;
            for (int k = 0; k < n_; ++k) {
                if (k != i) rows.push_back(k);
                if (k != j) cols.push_back(k);
            }
            Poly cof = (n_ == 2 && rows.empty()) ? Poly::one(*field_) : det_rec(*this, rows, cols);
            if ((i + j) % 2) cof = -cof;
            r.at(j, i) = cof;  // adjugate transpose
        }
    return r;
}

GroupMatrix GroupMatrix::transposed() const {
    GroupMatrix r(*field_, n_, kind_);
    for (int i = 0; i < n_; ++i)
        for (int j = 0; j < n_; ++j) r.at(j, i) = at(i, j);
    return r;
}

bool GroupMatrix::is_identity() const {
    for (int i = 0; i < n_; ++i)
        for (int j = 0; j < n_; ++j) {
            if (i == j && !at(i, j).is_one()) return false;
            if (i != j && !at(i, j).is_zero()) return false;
        }
    return true;
}

bool GroupMatrix::det_is_one() const { return det().is_one(); }

bool GroupMatrix::is_symplectic() const {
    if (n_ != 4) return false;
    const Field& F = *field_;
    // J with rows (0,0,0,1),(0,0,1,0),(0,-1,0,0),(-1,0,0,0)
    auto Jsig = [&](int i) { return i < 2 ? 1 : -1; };
    auto Jcol = [&](int i) { return 3 - i; };
    // (M^T J M)_{ab} = sum_i M_{ia} (J M)_{ib} ; (J M)_{ib} = sig(i) M_{Jcol(i), b}
    for (int a = 0; a < 4; ++a)
        for (int b = 0; b < 4; ++b) {
            Poly acc(F);
            for (int i = 0; i < 4; ++i) {
                Poly term = at(i, a) * at(Jcol(i), b);
                acc = (Jsig(i) > 0) ? acc + term : acc - term;
            }
            Poly want(F);
            if (a + b == 3) want = (a < 2) ? Poly::one(F) : -Poly::one(F);
            if (acc != want) return false;
        }
    return true;
}

bool GroupMatrix::satisfies_invariants() const {
    if (!det_is_one()) return false;
    if (kind_ == GroupKind::SP) return is_symplectic();
    return true;
}

void GroupMatrix::require_invariants(const char* where) const {
    if (!satisfies_invariants())
        throw ValidationError(std::string(where) + ": matrix violates group invariants");
}

bool GroupMatrix::entries_constant() const {
    for (const auto& p : e_)
        if (!p.is_constant()) return false;
    return true;
}

int GroupMatrix::max_deg() const {
    int d = 0;
    for (const auto& p : e_)
        if (!p.is_zero()) d = std::max(d, p.deg());
    return d;
}

void GroupMatrix::row_add(int i, int j, const Poly& xi) {
    if (xi.is_zero()) return;
    for (int k = 0; k < n_; ++k) at(i, k) = at(i, k) + xi * at(j, k);
}

void GroupMatrix::col_add(int j, int i, const Poly& xi) {
    if (xi.is_zero()) return;
    for (int k = 0; k < n_; ++k) at(k, j) = at(k, j) + xi * at(k, i);
}

std::string GroupMatrix::str() const {
    std::string s;
    for (int i = 0; i < n_; ++i) {
        s += "[ ";
        for (int j = 0; j < n_; ++j) {
            s += at(i, j).str();
            if (j + 1 < n_) s += " | ";
        }
        s += " ]\n";
    }
    return s;
}

GroupMatrix embed_topleft(const GroupMatrix& m, int n) {
    GroupMatrix r = GroupMatrix::identity(m.field(), n, GroupKind::SL);
    for (int i = 0; i < m.n(); ++i)
        for (int j = 0; j < m.n(); ++j) r.at(i, j) = m.at(i, j);
    return r;
}

GroupMatrix block_topleft(const GroupMatrix& m, int k) {
    GroupMatrix r(m.field(), k, GroupKind::SL);
    for (int i = 0; i < k; ++i)
        for (int j = 0; j < k; ++j) r.at(i, j) = m.at(i, j);
    return r;
}

}  // namespace chevwidth
