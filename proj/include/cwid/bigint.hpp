#pragma once
// Arbitrary-precision unsigned/signed integers, exact rationals, and a
// fixed-point binary logarithm. Small and exact by construction; enough for
// the bound arithmetic and rate metrics in this project, not a general
// bignum library.

#include <compare>
#include <cstdint>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

namespace cwid {

class BigUint {
public:
    BigUint() = default;
    BigUint(uint64_t v);

    static BigUint from_string(std::string_view dec);

    bool is_zero() const { return limbs_.size() == 0; }
    size_t bit_length() const;          // 0 for zero
    bool bit(size_t i) const;
    size_t trailing_zeros() const;      // undefined for zero

    bool fits_u64() const { return limbs_.size() <= 2; }
    uint64_t to_u64() const;            // throws unless fits_u64()
    double to_double() const;
    std::string to_string() const;      // decimal

    BigUint& operator+=(const BigUint& o);
    BigUint& operator-=(const BigUint& o);   // requires *this >= o
    friend BigUint operator+(BigUint a, const BigUint& b) { a += b; return a; }
    friend BigUint operator-(BigUint a, const BigUint& b) { a -= b; return a; }
    friend BigUint operator*(const BigUint& a, const BigUint& b);

    // quotient/remainder; throws on zero divisor
    static std::pair<BigUint, BigUint> divmod(const BigUint& num, const BigUint& den);
    static std::pair<BigUint, uint32_t> divmod_u32(const BigUint& num, uint32_t den);
    BigUint operator/(const BigUint& o) const { return divmod(*this, o).first; }
    BigUint operator%(const BigUint& o) const { return divmod(*this, o).second; }

    BigUint operator<<(size_t n) const;
    BigUint operator>>(size_t n) const;

    BigUint pow(uint64_t e) const;
    static BigUint gcd(BigUint a, BigUint b);

    std::strong_ordering operator<=>(const BigUint& o) const;
    bool operator==(const BigUint& o) const = default;

private:
    std::vector<uint32_t> limbs_;       // little endian base 2^32, normalized
    void trim();
    void set_bit(size_t i);
    friend BigUint log2_fixed(const BigUint&, unsigned);
};

class BigInt {
public:
    BigInt() = default;
    BigInt(int64_t v);
    BigInt(BigUint mag, int sign = 1);

    int sign() const { return sign_; }
    const BigUint& mag() const { return mag_; }

    friend BigInt operator+(const BigInt& a, const BigInt& b);
    friend BigInt operator-(const BigInt& a, const BigInt& b);
    friend BigInt operator*(const BigInt& a, const BigInt& b);
    BigInt operator-() const;

    std::strong_ordering operator<=>(const BigInt& o) const;
    bool operator==(const BigInt& o) const = default;

    std::string to_string() const;
    double to_double() const;

private:
    int sign_ = 0;                      // -1, 0, +1; zero iff mag is zero
    BigUint mag_;
};

// Exact rational with positive denominator, kept in lowest terms.
class BigRat {
public:
    BigRat() : num_(0), den_(1) {}
    BigRat(int64_t v) : num_(v), den_(1) {}
    BigRat(BigInt num, BigUint den);    // den != 0

    const BigInt& num() const { return num_; }
    const BigUint& den() const { return den_; }
    int sign() const { return num_.sign(); }

    friend BigRat operator+(const BigRat& a, const BigRat& b);
    friend BigRat operator-(const BigRat& a, const BigRat& b);
    friend BigRat operator*(const BigRat& a, const BigRat& b);
    friend BigRat operator/(const BigRat& a, const BigRat& b);  // b != 0

    std::strong_ordering operator<=>(const BigRat& o) const;
    bool operator==(const BigRat& o) const = default;

    BigInt floor() const;
    std::string to_string() const;      // "num/den"
    double to_double() const;

private:
    BigInt num_;
    BigUint den_;
    void normalize();
};

// floor(2^frac_bits * log2(x)) for x >= 1, computed by the squaring
// digit-recurrence with 32 internal guard bits.
BigUint log2_fixed(const BigUint& x, unsigned frac_bits);

// Overflow-checked helpers for parameter arithmetic on machine words.
int64_t checked_mul_i64(int64_t a, int64_t b);
int64_t checked_add_i64(int64_t a, int64_t b);
uint64_t checked_pow_u64(uint64_t base, uint64_t e);  // throws past 2^63

}  // namespace cwid
