#include "chevwidth/poly.hpp"

#include <algorithm>
#include <cctype>

namespace chevwidth {

Poly::Poly(const Field& f, std::vector<uint64_t> coeffs) : field_(&f), c_(std::move(coeffs)) {
    trim();
}

Poly Poly::constant(const Field& f, uint64_t c) {
    Poly r(f);
    if (c % 1) {}
    if (c) r.c_ = {c};
    return r;
}

Poly Poly::t(const Field& f) {
    Poly r(f);
    r.c_ = {0, 1};
    return r;
}

void Poly::trim() {
    while (!c_.empty() && c_.back() == 0) c_.pop_back();
}

void Poly::check_same(const Poly& o) const {
    if (!field_ || !o.field_) throw DomainError("uninitialized polynomial");
    if (!field_->same_as(*o.field_)) throw DomainError("field mismatch");
}

Poly Poly::operator+(const Poly& o) const {
    if (is_zero()) return o;
    if (o.is_zero()) return *this;
    check_same(o);
    Poly r(*field_);
    r.c_.resize(std::max(c_.size(), o.c_.size()), 0);
    for (size_t i = 0; i < r.c_.size(); ++i)
        r.c_[i] = field_->add(coeff(i), o.coeff(i));
    r.trim();
    return r;
}

Poly Poly::operator-() const {
    Poly r = *this;
    for (auto& x : r.c_) x = field_->neg(x);
    return r;
}

Poly Poly::operator-(const Poly& o) const { return *this + (-o); }

Poly Poly::operator*(const Poly& o) const {
    if (is_zero()) return *this;
    if (o.is_zero()) return o;
    check_same(o);
    Poly r(*field_);
    r.c_.assign(c_.size() + o.c_.size() - 1, 0);
    for (size_t i = 0; i < c_.size(); ++i) {
        if (!c_[i]) continue;
        for (size_t j = 0; j < o.c_.size(); ++j) {
            if (!o.c_[j]) continue;
            r.c_[i + j] = field_->add(r.c_[i + j], field_->mul(c_[i], o.c_[j]));
        }
    }
    r.trim();
    return r;
}

Poly Poly::scaled(uint64_t c) const {
    if (!c) return field_ ? Poly(*field_) : Poly();
    Poly r = *this;
    for (auto& x : r.c_) x = field_->mul(x, c);
    r.trim();
    return r;
}

Poly Poly::shifted(int k) const {
    if (is_zero() || k == 0) return *this;
    Poly r(*field_);
    r.c_.assign(c_.size() + k, 0);
    std::copy(c_.begin(), c_.end(), r.c_.begin() + k);
    return r;
}

Poly Poly::monic() const {
    if (is_zero()) return *this;
    return scaled(field_->inv(lc()));
}

std::pair<Poly, Poly> poly_divmod(const Poly& num, const Poly& den) {
    if (den.is_zero()) throw DomainError("division by zero polynomial");
    const Field& F = den.field();
    if (num.is_zero()) return {Poly(F), Poly(F)};
    if (!num.field().same_as(F)) throw DomainError("field mismatch");
    std::vector<uint64_t> rem = num.coeffs();
    int dd = den.deg();
    if (num.deg() < dd) return {Poly(F), num};
    std::vector<uint64_t> quot(num.deg() - dd + 1, 0);
    uint64_t inv_lc = F.inv(den.lc());
    for (int k = static_cast<int>(rem.size()) - 1; k >= dd; --k) {
        if (!rem[k]) continue;
        uint64_t q = F.mul(rem[k], inv_lc);
        quot[k - dd] = q;
        for (int i = 0; i <= dd; ++i)
            rem[k - dd + i] = F.sub(rem[k - dd + i], F.mul(q, den.coeff(i)));
    }
    return {Poly(F, std::move(quot)), Poly(F, std::move(rem))};
}

Poly poly_gcd(Poly f, Poly g) {
    if (f.is_zero() && g.is_zero()) return f;
    while (!g.is_zero()) {
        auto [q, r] = poly_divmod(f, g);
        f = g;
        g = r;
    }
    return f.monic();
}

std::tuple<Poly, Poly, Poly> poly_xgcd(const Poly& f, const Poly& g) {
    if (f.is_zero() && g.is_zero()) throw DomainError("xgcd(0, 0)");
    const Field& F = f.has_field() ? f.field() : g.field();
    Poly r0 = f, r1 = g;
    Poly s0 = Poly::one(F), s1 = Poly(F);
    Poly t0 = Poly(F), t1 = Poly::one(F);
    while (!r1.is_zero()) {
        auto [q, r] = poly_divmod(r0, r1);
        r0 = r1; r1 = r;
        Poly s2 = s0 - q * s1;
        s0 = s1; s1 = s2;
        Poly t2 = t0 - q * t1;
        t0 = t1; t1 = t2;
    }
    uint64_t c = F.inv(r0.lc());
    return {r0.scaled(c), s0.scaled(c), t0.scaled(c)};
}

Poly poly_powmod(const Poly& f, uint64_t n, const Poly& m) {
    const Field& F = m.field();
    Poly r = Poly::one(F);
    Poly base = poly_divmod(f, m).second;
    while (n) {
        if (n & 1) r = poly_divmod(r * base, m).second;
        base = poly_divmod(base * base, m).second;
        n >>= 1;
    }
    return r;
}

namespace {

// t^(q) mod m applied k times starting from `start`
Poly q_power_mod(const Poly& start, const Poly& m, uint64_t k) {
    const Field& F = m.field();
    Poly r = start;
    for (uint64_t i = 0; i < k; ++i) r = poly_powmod(r, F.q(), m);
    return r;
}

std::vector<uint64_t> prime_factors(uint64_t n) {
    std::vector<uint64_t> ps;
    for (uint64_t d = 2; d * d <= n; ++d) {
        if (n % d == 0) {
            ps.push_back(d);
            while (n % d == 0) n /= d;
        }
    }
    if (n > 1) ps.push_back(n);
    return ps;
}

}  // namespace

Poly poly_frobenius_power(const Poly& m, uint64_t k) {
    return q_power_mod(Poly::t(m.field()), m, k);
}

bool is_irreducible(const Poly& f) {
    if (f.deg() < 1) throw DomainError("irreducibility undefined for constants");
    const Field& F = f.field();
    uint64_t n = static_cast<uint64_t>(f.deg());
    if (n == 1) return true;
    Poly t = Poly::t(F);
    // Rabin: t^(q^n) == t mod f, and gcd(t^(q^(n/r)) - t, f) == 1 for each
    // prime r | n.
    Poly tn = q_power_mod(t, f, n);
    if (tn != poly_divmod(t, f).second) return false;
    for (uint64_t r : prime_factors(n)) {
        Poly th = q_power_mod(t, f, n / r);
        Poly g = poly_gcd(th - t, f);
        if (!g.is_one()) return false;
    }
    return true;
}

std::optional<Poly> poly_mth_root(const Poly& f, uint64_t m) {
    if (f.is_zero()) throw DomainError("m-th root of zero");
    if (m == 0) throw DomainError("0-th root");
    if (m == 1) return f;
    const Field& F = f.field();
    uint64_t p = F.p();
    if (m % p == 0) {
        // p-th root first: f must lie in F_q[t^p] with each coefficient a
        // p-th power (always solvable in F_q: Frobenius is bijective).
        if (f.deg() != Poly::kZeroDeg && f.deg() % p != 0 && f.deg() > 0) {
            // degree not divisible by p => no root (deg of g^p = p deg g)
        }
        std::vector<uint64_t> root;
        int d = f.deg();
        if (d % static_cast<int>(p) != 0) return std::nullopt;
        root.resize(d / p + 1, 0);
        for (int i = 0; i <= d; ++i) {
            uint64_t c = f.coeff(i);
            if (i % static_cast<int>(p) != 0) {
                if (c) return std::nullopt;
                continue;
            }
            // p-th root of c in F_q: c^(q/p) since x -> x^p is bijective
            // with inverse x -> x^(p^(e-1)) = x^(q/p).
            root[i / p] = F.pow(c, F.q() / p);
        }
        Poly g(F, std::move(root));
        // verify then recurse on remaining factor of m
        Poly check = Poly::one(F);
        for (uint64_t i = 0; i < p; ++i) check = check * g;
        if (check != f) return std::nullopt;
        return poly_mth_root(g, m / p);
    }
    // gcd(m, p) = 1: coefficient matching from the leading term.
    if (f.deg() == 0) {
        // constant: solve c = x^m in F_q^*; brute force over the cyclic group
        for (uint64_t x = 1; x < F.q(); ++x)
            if (F.pow(x, m) == f.constant_value()) return Poly::constant(F, x);
        return std::nullopt;
    }
    int df = f.deg();
    if (df % static_cast<int>(m) != 0) return std::nullopt;
    int dg = df / static_cast<int>(m);
    // leading coefficient: m-th root in F_q^*
    std::optional<uint64_t> lead;
    for (uint64_t x = 1; x < F.q(); ++x)
        if (F.pow(x, m) == f.lc()) { lead = x; break; }
    if (!lead) return std::nullopt;
    // prefer the monic root for monic input
    if (f.lc() == 1) lead = 1;
    std::vector<uint64_t> g(dg + 1, 0);
    g[dg] = *lead;
    // determine coefficients top-down: compare coefficient of t^(df - k)
    Poly acc = Poly(F, g);
    for (int k = 1; k <= dg; ++k) {
        // current residual at degree df - k
        Poly cur = Poly::one(F);
        for (uint64_t i = 0; i < m; ++i) cur = cur * acc;
        uint64_t want = f.coeff(df - k);
        uint64_t have = cur.coeff(df - k);
        uint64_t diff = F.sub(want, have);
        // coefficient of t^(dg - k) in g contributes m * lead^(m-1) * x
        uint64_t denom = F.mul(F.pow(*lead, m - 1), m % F.p());
        if (denom == 0) return std::nullopt;
        g[dg - k] = F.mul(diff, F.inv(denom));
        acc = Poly(F, g);
    }
    Poly check = Poly::one(F);
    for (uint64_t i = 0; i < m; ++i) check = check * acc;
    if (check != f) return std::nullopt;
    return acc;
}

Poly graded_lex_poly(const Field& F, uint64_t index) {
    // index 0 -> 0; then nonzero constants; then degree 1, ...
    if (index == 0) return Poly(F);
    uint64_t q = F.q();
    // degree d block has (q-1) * q^d entries
    uint64_t rest = index - 1;
    uint64_t d = 0, block = q - 1;
    while (rest >= block) {
        rest -= block;
        ++d;
        block *= q;
    }
    std::vector<uint64_t> c(d + 1, 0);
    // leading coefficient in [1, q), then lower digits base q
    for (uint64_t i = 0; i < d; ++i) {
        c[i] = rest % q;
        rest /= q;
    }
    c[d] = rest + 1;
    return Poly(F, std::move(c));
}

uint64_t Rng::next() {
    uint64_t z = (state_ += 0x9e3779b97f4a7c15ull);
    z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ull;
    z = (z ^ (z >> 27)) * 0x94d049bb133111ebull;
    return z ^ (z >> 31);
}

uint64_t Rng::below(uint64_t n) { return n ? next() % n : 0; }

Poly Rng::poly(const Field& f, int maxdeg) {
    int d = static_cast<int>(below(maxdeg + 1));
    std::vector<uint64_t> c(d + 1);
    for (auto& x : c) x = below(f.q());
    return Poly(f, std::move(c));
}

Poly Rng::nonzero_poly(const Field& f, int maxdeg) {
    for (;;) {
        Poly p = poly(f, maxdeg);
        if (!p.is_zero()) return p;
    }
}

std::string Poly::str() const {
    if (is_zero()) return "0";
    std::string s;
    for (int i = deg(); i >= 0; --i) {
        uint64_t c = coeff(i);
        if (!c) continue;
        if (!s.empty()) s += " + ";
        bool unit_coeff = (c == 1 && field_->e() == 1);
        if (i == 0) {
            s += field_->coeff_str(c);
        } else {
            if (!unit_coeff) {
                s += field_->coeff_str(c);
                s += "*";
            }
            s += (i == 1) ? "t" : "t^" + std::to_string(i);
        }
    }
    return s;
}

namespace {

void skip_ws(const std::string& s, size_t& i) {
    while (i < s.size() && std::isspace(static_cast<unsigned char>(s[i]))) ++i;
}

uint64_t parse_coeff(const Field& F, const std::string& s, size_t& i) {
    skip_ws(s, i);
    if (i < s.size() && s[i] == '(') {
        // (c_{e-1},...,c_0)
        ++i;
        std::vector<uint64_t> rev;
        for (;;) {
            skip_ws(s, i);
            size_t j = i;
            while (j < s.size() && std::isdigit(static_cast<unsigned char>(s[j]))) ++j;
            if (j == i) throw DomainError("bad coefficient tuple in polynomial: " + s);
            rev.push_back(std::stoull(s.substr(i, j - i)));
            i = j;
            skip_ws(s, i);
            if (i < s.size() && s[i] == ',') { ++i; continue; }
            if (i < s.size() && s[i] == ')') { ++i; break; }
            throw DomainError("bad coefficient tuple in polynomial: " + s);
        }
        std::vector<uint64_t> d(rev.rbegin(), rev.rend());
        return F.from_digits(d);
    }
    size_t j = i;
    while (j < s.size() && std::isdigit(static_cast<unsigned char>(s[j]))) ++j;
    if (j == i) throw DomainError("expected coefficient in polynomial: " + s);
    uint64_t v = std::stoull(s.substr(i, j - i));
    i = j;
    if (F.e() == 1) v %= F.p();
    if (v >= F.q()) throw DomainError("coefficient out of range in polynomial: " + s);
    return v;
}

}  // namespace

Poly Poly::parse(const Field& F, const std::string& s) {
    size_t i = 0;
    skip_ws(s, i);
    if (i < s.size() && s[i] == '0') {
        size_t j = i;
        skip_ws(s, ++j);
        if (j >= s.size()) return Poly(F);
    }
    std::vector<uint64_t> coeffs;
    auto put = [&](int k, uint64_t c) {
        if (k >= static_cast<int>(coeffs.size())) coeffs.resize(k + 1, 0);
        coeffs[k] = F.add(coeffs[k], c);
    };
    bool first = true;
    for (;;) {
        skip_ws(s, i);
        if (i >= s.size()) break;
        bool negate = false;
        if (!first || s[i] == '+' || s[i] == '-') {
            if (i >= s.size() || (s[i] != '+' && s[i] != '-'))
                throw DomainError("expected + between terms: " + s);
            negate = (s[i] == '-');
            ++i;
            skip_ws(s, i);
        }
        first = false;
        uint64_t c = 1;
        bool have_coeff = false;
        if (i < s.size() && (std::isdigit(static_cast<unsigned char>(s[i])) || s[i] == '(')) {
            c = parse_coeff(F, s, i);
            have_coeff = true;
            skip_ws(s, i);
            if (i < s.size() && s[i] == '*') { ++i; skip_ws(s, i); }
        }
        int k = 0;
        if (i < s.size() && s[i] == 't') {
            ++i;
            k = 1;
            if (i < s.size() && s[i] == '^') {
                ++i;
                size_t j = i;
                while (j < s.size() && std::isdigit(static_cast<unsigned char>(s[j]))) ++j;
                if (j == i) throw DomainError("bad exponent: " + s);
                k = std::stoi(s.substr(i, j - i));
                i = j;
            }
        } else if (!have_coeff) {
            throw DomainError("bad term in polynomial: " + s);
        }
        if (negate) c = F.neg(c);
        put(k, c);
    }
    return Poly(F, std::move(coeffs));
}

}  // namespace chevwidth
