#pragma once

#include <optional>
#include <tuple>

#include "chevwidth/field.hpp"

namespace chevwidth {

/// Dense polynomial over F_q, coefficients lowest degree first, no trailing
/// zeros.  The zero polynomial has an empty coefficient vector; its degree
/// is the sentinel kZeroDeg, never an ordinary integer.
class Poly {
public:
    static constexpr int kZeroDeg = INT32_MIN;

    Poly() : field_(nullptr) {}
    explicit Poly(const Field& f) : field_(&f) {}
    Poly(const Field& f, std::vector<uint64_t> coeffs);
    static Poly constant(const Field& f, uint64_t c);
    static Poly t(const Field& f);  // the variable
    static Poly zero(const Field& f) { return Poly(f); }
    static Poly one(const Field& f) { return constant(f, 1); }

    const Field& field() const { return *field_; }
    bool has_field() const { return field_ != nullptr; }
    bool is_zero() const { return c_.empty(); }
    bool is_one() const { return c_.size() == 1 && c_[0] == 1; }
    bool is_constant() const { return c_.size() <= 1; }
    bool is_unit() const { return c_.size() == 1; }
    int deg() const { return c_.empty() ? kZeroDeg : static_cast<int>(c_.size()) - 1; }
    uint64_t lc() const { return c_.empty() ? 0 : c_.back(); }
    uint64_t coeff(size_t i) const { return i < c_.size() ? c_[i] : 0; }
    const std::vector<uint64_t>& coeffs() const { return c_; }
    uint64_t constant_value() const { return c_.empty() ? 0 : c_[0]; }

    Poly operator+(const Poly& o) const;
    Poly operator-(const Poly& o) const;
    Poly operator-() const;
    Poly operator*(const Poly& o) const;
    Poly scaled(uint64_t c) const;          // multiply by a field constant
    Poly shifted(int k) const;              // multiply by t^k
    bool operator==(const Poly& o) const { return c_ == o.c_; }
    bool operator!=(const Poly& o) const { return c_ != o.c_; }

    Poly monic() const;

    std::string str() const;                        // canonical text grammar
    static Poly parse(const Field& f, const std::string& s);

private:
    void trim();
    void check_same(const Poly& o) const;

    const Field* field_;
    std::vector<uint64_t> c_;
};

// num = quot * den + rem with deg rem < deg den.  den != 0.
std::pair<Poly, Poly> poly_divmod(const Poly& num, const Poly& den);

// monic gcd
Poly poly_gcd(Poly f, Poly g);

// (d, u, v) with u f + v g = d, d the monic gcd.  Not both zero.
std::tuple<Poly, Poly, Poly> poly_xgcd(const Poly& f, const Poly& g);

// f^n mod m
Poly poly_powmod(const Poly& f, uint64_t n, const Poly& m);
// t^(q^k) mod m, via repeated q-power
Poly poly_frobenius_power(const Poly& m, uint64_t k);

// Rabin irreducibility test.  deg f >= 1 required.
bool is_irreducible(const Poly& f);

// g with g^m = f when one exists.  Handles p | m by coefficient-wise p-th
// roots (Frobenius inversion), otherwise matches coefficients from the top.
// Monic input yields monic output.
std::optional<Poly> poly_mth_root(const Poly& f, uint64_t m);

// graded-lexicographic candidate enumeration: index -> polynomial.
// Order: all polynomials of degree < d before degree d, coefficient codes
// as base-q digits, most significant digit = leading coefficient.
Poly graded_lex_poly(const Field& f, uint64_t index);

/// Deterministic counter-based generator (splitmix64) for reproducible
/// random polynomials and field elements.
class Rng {
public:
    explicit Rng(uint64_t seed) : state_(seed) {}
    uint64_t next();
    uint64_t below(uint64_t n);  // uniform in [0, n)
    Poly poly(const Field& f, int maxdeg);            // uniform coeffs, deg <= maxdeg
    Poly nonzero_poly(const Field& f, int maxdeg);

private:
    uint64_t state_;
};

}  // namespace chevwidth
