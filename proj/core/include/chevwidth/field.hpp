#pragma once

#include <cstdint>
#include <memory>
#include <stdexcept>
#include <string>
#include <vector>

namespace chevwidth {

struct DomainError : std::runtime_error {
    using std::runtime_error::runtime_error;
};
struct ValidationError : std::runtime_error {
    using std::runtime_error::runtime_error;
};
struct SearchExhausted : std::runtime_error {
    using std::runtime_error::runtime_error;
};
struct BudgetExceeded : std::runtime_error {
    using std::runtime_error::runtime_error;
};

/// Description of a finite field F_q, q = p^e.  For e > 1 the field is
/// F_p[x]/(modulus) with `modulus` monic irreducible of degree e over F_p.
/// Field elements are carried as integer codes in [0, q): the code of
/// sum c_i x^i is sum c_i p^i.
class Field {
public:
    // prime field
    explicit Field(uint64_t p);
    // extension field with explicit modulus coefficients (low to high,
    // length e+1, monic)
    Field(uint64_t p, const std::vector<uint64_t>& modulus);
    // q = p^e with the built-in modulus table (q in {4,8,9,16,25,27});
    // e = 1 for prime q
    static const Field& get(uint64_t q);
    static const Field& get(uint64_t p, uint64_t e);

    uint64_t p() const { return p_; }
    uint64_t e() const { return e_; }
    uint64_t q() const { return q_; }
    const std::vector<uint64_t>& modulus() const { return modulus_; }

    uint64_t add(uint64_t a, uint64_t b) const;
    uint64_t sub(uint64_t a, uint64_t b) const;
    uint64_t neg(uint64_t a) const;
    uint64_t mul(uint64_t a, uint64_t b) const;
    uint64_t inv(uint64_t a) const;
    uint64_t pow(uint64_t a, uint64_t n) const;

    bool same_as(const Field& o) const { return this == &o || (p_ == o.p_ && modulus_ == o.modulus_); }

    // digits of the code base p, lowest first, length e
    std::vector<uint64_t> digits(uint64_t a) const;
    uint64_t from_digits(const std::vector<uint64_t>& d) const;

    // canonical text form of one coefficient in the polynomial grammar:
    // plain integer for e = 1, "(c_{e-1},...,c_0)" for e > 1
    std::string coeff_str(uint64_t a) const;

private:
    void init_tables();
    uint64_t mul_slow(uint64_t a, uint64_t b) const;

    uint64_t p_, e_, q_;
    std::vector<uint64_t> modulus_;  // length e+1 when e > 1, else {}
    // lookup tables for small q
    bool tabled_ = false;
    std::vector<uint32_t> mul_table_;
    std::vector<uint32_t> inv_table_;
};

}  // namespace chevwidth
