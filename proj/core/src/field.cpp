#include "chevwidth/field.hpp"

#include <map>
#include <mutex>

namespace chevwidth {

namespace {

bool is_prime_u64(uint64_t n) {
    if (n < 2) return false;
    for (uint64_t d = 2; d * d <= n; ++d)
        if (n % d == 0) return false;
    return true;
}

// Conway polynomials for the shipped extension fields, coefficients low to
// high.  Overridable by constructing a Field with an explicit modulus.
const std::map<uint64_t, std::pair<uint64_t, std::vector<uint64_t>>> kModuli = {
    {4,  {2, {1, 1, 1}}},           // x^2 + x + 1
    {8,  {2, {1, 1, 0, 1}}},        // x^3 + x + 1
    {9,  {3, {2, 2, 1}}},           // x^2 + 2x + 2
    {16, {2, {1, 1, 0, 0, 1}}},     // x^4 + x + 1
    {25, {5, {2, 4, 1}}},           // x^2 + 4x + 2
    {27, {3, {1, 2, 0, 1}}},        // x^3 + 2x + 1
};

uint64_t ipow(uint64_t b, uint64_t e) {
    uint64_t r = 1;
    while (e--) r *= b;
    return r;
}

}  // namespace

Field::Field(uint64_t p) : p_(p), e_(1), q_(p) {
    if (!is_prime_u64(p)) throw DomainError("field characteristic must be prime");
    init_tables();
}

Field::Field(uint64_t p, const std::vector<uint64_t>& modulus)
    : p_(p), e_(modulus.size() - 1), q_(ipow(p, modulus.size() - 1)), modulus_(modulus) {
    if (!is_prime_u64(p)) throw DomainError("field characteristic must be prime");
    if (e_ < 1) throw DomainError("modulus must have degree >= 1");
    if (modulus_.back() != 1) throw DomainError("modulus must be monic");
    for (auto& c : modulus_)
        if (c >= p) throw DomainError("modulus coefficients must be reduced mod p");
    init_tables();
}

const Field& Field::get(uint64_t q) {
    static std::mutex mu;
    static std::map<uint64_t, std::unique_ptr<Field>> cache;
    std::lock_guard<std::mutex> lock(mu);
    auto it = cache.find(q);
    if (it != cache.end()) return *it->second;
    std::unique_ptr<Field> f;
    if (is_prime_u64(q)) {
        f = std::make_unique<Field>(q);
    } else {
        auto mit = kModuli.find(q);
        if (mit == kModuli.end())
            throw DomainError("no built-in modulus for q=" + std::to_string(q) +
                              "; construct the field with an explicit modulus");
        f = std::make_unique<Field>(mit->second.first, mit->second.second);
    }
    auto* raw = f.get();
    cache.emplace(q, std::move(f));
    return *raw;
}

const Field& Field::get(uint64_t p, uint64_t e) { return get(ipow(p, e)); }

void Field::init_tables() {
    if (q_ > 1024) return;
    tabled_ = true;
    mul_table_.assign(q_ * q_, 0);
    inv_table_.assign(q_, 0);
    for (uint64_t a = 0; a < q_; ++a)
        for (uint64_t b = a; b < q_; ++b) {
            uint32_t m = static_cast<uint32_t>(mul_slow(a, b));
            mul_table_[a * q_ + b] = m;
            mul_table_[b * q_ + a] = m;
            if (m == 1) {
                inv_table_[a] = static_cast<uint32_t>(b);
                inv_table_[b] = static_cast<uint32_t>(a);
            }
        }
}

uint64_t Field::add(uint64_t a, uint64_t b) const {
    if (e_ == 1) {
        uint64_t s = a + b;
        return s >= p_ ? s - p_ : s;
    }
    uint64_t r = 0, pk = 1;
    for (uint64_t i = 0; i < e_; ++i) {
        uint64_t da = a % p_, db = b % p_;
        a /= p_; b /= p_;
        uint64_t s = da + db;
        if (s >= p_) s -= p_;
        r += s * pk;
        pk *= p_;
    }
    return r;
}

uint64_t Field::neg(uint64_t a) const {
    if (e_ == 1) return a ? p_ - a : 0;
    uint64_t r = 0, pk = 1;
    for (uint64_t i = 0; i < e_; ++i) {
        uint64_t da = a % p_;
        a /= p_;
        r += (da ? p_ - da : 0) * pk;
        pk *= p_;
    }
    return r;
}

uint64_t Field::sub(uint64_t a, uint64_t b) const { return add(a, neg(b)); }

uint64_t Field::mul_slow(uint64_t a, uint64_t b) const {
    if (e_ == 1) return (a * b) % p_;  // q <= 1024 here or via pow paths; reduce

    // polynomial multiplication of digit vectors mod (modulus, p)
    std::vector<uint64_t> da = digits(a), db = digits(b);
    std::vector<uint64_t> prod(2 * e_ - 1, 0);
    for (uint64_t i = 0; i < e_; ++i)
        if (da[i])
            for (uint64_t j = 0; j < e_; ++j)
                prod[i + j] = (prod[i + j] + da[i] * db[j]) % p_;
    // reduce by monic modulus
    for (size_t k = prod.size(); k-- > e_;) {
        uint64_t c = prod[k];
        if (!c) continue;
        prod[k] = 0;
        for (uint64_t i = 0; i < e_; ++i) {
            uint64_t sub_ = (c * modulus_[i]) % p_;
            uint64_t& slot = prod[k - e_ + i];
            slot = (slot + p_ - sub_) % p_;
        }
    }
    prod.resize(e_);
    return from_digits(prod);
}

uint64_t Field::mul(uint64_t a, uint64_t b) const {
    if (tabled_) return mul_table_[a * q_ + b];
    if (e_ == 1) return (__uint128_t(a) * b) % p_;
    return mul_slow(a, b);
}

uint64_t Field::pow(uint64_t a, uint64_t n) const {
    uint64_t r = 1;
    while (n) {
        if (n & 1) r = mul(r, a);
        a = mul(a, a);
        n >>= 1;
    }
    return r;
}

uint64_t Field::inv(uint64_t a) const {
    if (a == 0) throw DomainError("inverse of zero field element");
    if (tabled_) return inv_table_[a];
    return pow(a, q_ - 2);
}

std::vector<uint64_t> Field::digits(uint64_t a) const {
    std::vector<uint64_t> d(e_);
    for (uint64_t i = 0; i < e_; ++i) {
        d[i] = a % p_;
        a /= p_;
    }
    return d;
}

uint64_t Field::from_digits(const std::vector<uint64_t>& d) const {
    uint64_t r = 0, pk = 1;
    for (uint64_t i = 0; i < e_; ++i) {
        r += (i < d.size() ? d[i] % p_ : 0) * pk;
        pk *= p_;
    }
    return r;
}

std::string Field::coeff_str(uint64_t a) const {
    if (e_ == 1) return std::to_string(a);
    auto d = digits(a);
    std::string s = "(";
    for (size_t i = d.size(); i-- > 0;) {
        s += std::to_string(d[i]);
        if (i) s += ",";
    }
    return s + ")";
}

}  // namespace chevwidth
