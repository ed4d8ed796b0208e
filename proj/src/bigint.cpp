#include "cwid/bigint.hpp"

#include <algorithm>
#include <bit>
#include <cmath>
#include <stdexcept>

namespace cwid {

BigUint::BigUint(uint64_t v) {
    if (v) {
        limbs_.push_back(static_cast<uint32_t>(v));
        if (v >> 32) limbs_.push_back(static_cast<uint32_t>(v >> 32));
    }
}

void BigUint::trim() {
    while (!limbs_.empty() && limbs_.back() == 0) limbs_.pop_back();
}

size_t BigUint::bit_length() const {
    if (limbs_.empty()) return 0;
    return 32 * (limbs_.size() - 1) + (32 - std::countl_zero(limbs_.back()));
}

bool BigUint::bit(size_t i) const {
    size_t w = i / 32;
    if (w >= limbs_.size()) return false;
    return (limbs_[w] >> (i % 32)) & 1u;
}

void BigUint::set_bit(size_t i) {
    size_t w = i / 32;
    if (w >= limbs_.size()) limbs_.resize(w + 1, 0);
    limbs_[w] |= (uint32_t(1) << (i % 32));
}

size_t BigUint::trailing_zeros() const {
    for (size_t w = 0; w < limbs_.size(); ++w)
        if (limbs_[w]) return 32 * w + std::countr_zero(limbs_[w]);
    return 0;
}

uint64_t BigUint::to_u64() const {
    if (!fits_u64()) throw std::overflow_error("BigUint::to_u64: value too large");
    uint64_t v = 0;
    if (limbs_.size() > 1) v = uint64_t(limbs_[1]) << 32;
    if (limbs_.size() > 0) v |= limbs_[0];
    return v;
}

double BigUint::to_double() const {
    double r = 0.0;
    size_t n = limbs_.size();
    size_t lo = n > 3 ? n - 3 : 0;
    for (size_t i = n; i-- > lo;) r = r * 4294967296.0 + limbs_[i];
    return std::ldexp(r, 32.0 * double(lo));
}

BigUint& BigUint::operator+=(const BigUint& o) {
    if (limbs_.size() < o.limbs_.size()) limbs_.resize(o.limbs_.size(), 0);
    uint64_t carry = 0;
    for (size_t i = 0; i < limbs_.size(); ++i) {
        uint64_t s = carry + limbs_[i] + (i < o.limbs_.size() ? o.limbs_[i] : 0);
        limbs_[i] = static_cast<uint32_t>(s);
        carry = s >> 32;
    }
    if (carry) limbs_.push_back(static_cast<uint32_t>(carry));
    return *this;
}

BigUint& BigUint::operator-=(const BigUint& o) {
    if (*this < o) throw std::underflow_error("BigUint: negative subtraction");
    uint64_t borrow = 0;
    for (size_t i = 0; i < limbs_.size(); ++i) {
        uint64_t sub = borrow + (i < o.limbs_.size() ? o.limbs_[i] : 0);
        uint64_t cur = limbs_[i];
        if (cur < sub) {
            limbs_[i] = static_cast<uint32_t>(cur + (uint64_t(1) << 32) - sub);
            borrow = 1;
        } else {
            limbs_[i] = static_cast<uint32_t>(cur - sub);
            borrow = 0;
        }
    }
    trim();
    return *this;
}

BigUint operator*(const BigUint& a, const BigUint& b) {
    if (a.is_zero() || b.is_zero()) return BigUint();
    BigUint r;
    r.limbs_.assign(a.limbs_.size() + b.limbs_.size(), 0);
    for (size_t i = 0; i < a.limbs_.size(); ++i) {
        uint64_t carry = 0;
        uint64_t ai = a.limbs_[i];
        for (size_t j = 0; j < b.limbs_.size(); ++j) {
            uint64_t cur = r.limbs_[i + j] + ai * b.limbs_[j] + carry;
            r.limbs_[i + j] = static_cast<uint32_t>(cur);
            carry = cur >> 32;
        }
        size_t k = i + b.limbs_.size();
        while (carry) {
            uint64_t cur = r.limbs_[k] + carry;
            r.limbs_[k] = static_cast<uint32_t>(cur);
            carry = cur >> 32;
            ++k;
        }
    }
    r.trim();
    return r;
}

BigUint BigUint::operator<<(size_t n) const {
    if (is_zero() || n == 0) {
        BigUint r = *this;
        return r;
    }
    size_t words = n / 32, bits = n % 32;
    BigUint r;
    r.limbs_.assign(limbs_.size() + words + 1, 0);
    for (size_t i = 0; i < limbs_.size(); ++i) {
        r.limbs_[i + words] |= limbs_[i] << bits;
        if (bits) r.limbs_[i + words + 1] |= static_cast<uint32_t>(uint64_t(limbs_[i]) >> (32 - bits));
    }
    r.trim();
    return r;
}

BigUint BigUint::operator>>(size_t n) const {
    size_t words = n / 32, bits = n % 32;
    if (words >= limbs_.size()) return BigUint();
    BigUint r;
    r.limbs_.assign(limbs_.size() - words, 0);
    for (size_t i = 0; i < r.limbs_.size(); ++i) {
        r.limbs_[i] = limbs_[i + words] >> bits;
        if (bits && i + words + 1 < limbs_.size())
            r.limbs_[i] |= static_cast<uint32_t>(uint64_t(limbs_[i + words + 1]) << (32 - bits));
    }
    r.trim();
    return r;
}

std::strong_ordering BigUint::operator<=>(const BigUint& o) const {
    if (limbs_.size() != o.limbs_.size()) return limbs_.size() <=> o.limbs_.size();
    for (size_t i = limbs_.size(); i-- > 0;)
        if (limbs_[i] != o.limbs_[i]) return limbs_[i] <=> o.limbs_[i];
    return std::strong_ordering::equal;
}

std::pair<BigUint, BigUint> BigUint::divmod(const BigUint& num, const BigUint& den) {
    if (den.is_zero()) throw std::domain_error("BigUint: division by zero");
    if (num < den) return {BigUint(), num};
    if (den.limbs_.size() == 1) {
        auto [q, r] = divmod_u32(num, den.limbs_[0]);
        return {std::move(q), BigUint(r)};
    }
    size_t shift = num.bit_length() - den.bit_length();
    BigUint r = num;
    BigUint d = den << shift;
    BigUint q;
    for (size_t i = shift + 1; i-- > 0;) {
        if (r >= d) {
            r -= d;
            q.set_bit(i);
        }
        d = d >> 1;
    }
    q.trim();
    return {std::move(q), std::move(r)};
}

std::pair<BigUint, uint32_t> BigUint::divmod_u32(const BigUint& num, uint32_t den) {
    if (den == 0) throw std::domain_error("BigUint: division by zero");
    BigUint q;
    q.limbs_.assign(num.limbs_.size(), 0);
    uint64_t rem = 0;
    for (size_t i = num.limbs_.size(); i-- > 0;) {
        uint64_t cur = (rem << 32) | num.limbs_[i];
        q.limbs_[i] = static_cast<uint32_t>(cur / den);
        rem = cur % den;
    }
    q.trim();
    return {std::move(q), static_cast<uint32_t>(rem)};
}

BigUint BigUint::pow(uint64_t e) const {
    BigUint base = *this, r(1);
    while (e) {
        if (e & 1) r = r * base;
        e >>= 1;
        if (e) base = base * base;
    }
    return r;
}

BigUint BigUint::gcd(BigUint a, BigUint b) {
    if (a.is_zero()) return b;
    if (b.is_zero()) return a;
    size_t az = a.trailing_zeros(), bz = b.trailing_zeros();
    size_t shift = std::min(az, bz);
    a = a >> az;
    for (;;) {
        b = b >> b.trailing_zeros();
        if (a > b) std::swap(a, b);
        b -= a;
        if (b.is_zero()) return a << shift;
    }
}

std::string BigUint::to_string() const {
    if (is_zero()) return "0";
    std::string out;
    BigUint cur = *this;
    while (!cur.is_zero()) {
        auto [q, r] = divmod_u32(cur, 1000000000u);
        std::string chunk = std::to_string(r);
        if (!q.is_zero()) chunk.insert(0, 9 - chunk.size(), '0');
        out.insert(0, chunk);
        cur = std::move(q);
    }
    return out;
}

BigUint BigUint::from_string(std::string_view dec) {
    if (dec.empty()) throw std::invalid_argument("BigUint::from_string: empty string");
    BigUint r;
    size_t i = 0;
    while (i < dec.size()) {
        size_t take = std::min<size_t>(9, dec.size() - i);
        uint32_t chunk = 0;
        for (size_t j = 0; j < take; ++j) {
            char c = dec[i + j];
            if (c < '0' || c > '9') throw std::invalid_argument("BigUint::from_string: not a digit");
            chunk = chunk * 10 + uint32_t(c - '0');
        }
        uint32_t scale = 1;
        for (size_t j = 0; j < take; ++j) scale *= 10;
        r = r * BigUint(scale) + BigUint(chunk);
        i += take;
    }
    return r;
}

// ---- BigInt ----

BigInt::BigInt(int64_t v) {
    if (v > 0) {
        sign_ = 1;
        mag_ = BigUint(static_cast<uint64_t>(v));
    } else if (v < 0) {
        sign_ = -1;
        mag_ = BigUint(static_cast<uint64_t>(-(v + 1)) + 1);
    }
}

BigInt::BigInt(BigUint mag, int sign) : sign_(mag.is_zero() ? 0 : (sign < 0 ? -1 : 1)), mag_(std::move(mag)) {}

BigInt BigInt::operator-() const {
    BigInt r = *this;
    r.sign_ = -r.sign_;
    return r;
}

BigInt operator+(const BigInt& a, const BigInt& b) {
    if (a.sign_ == 0) return b;
    if (b.sign_ == 0) return a;
    if (a.sign_ == b.sign_) return BigInt(a.mag_ + b.mag_, a.sign_);
    if (a.mag_ == b.mag_) return BigInt();
    if (a.mag_ > b.mag_) return BigInt(a.mag_ - b.mag_, a.sign_);
    return BigInt(b.mag_ - a.mag_, b.sign_);
}

BigInt operator-(const BigInt& a, const BigInt& b) { return a + (-b); }

BigInt operator*(const BigInt& a, const BigInt& b) {
    if (a.sign_ == 0 || b.sign_ == 0) return BigInt();
    return BigInt(a.mag_ * b.mag_, a.sign_ * b.sign_);
}

std::strong_ordering BigInt::operator<=>(const BigInt& o) const {
    if (sign_ != o.sign_) return sign_ <=> o.sign_;
    if (sign_ >= 0) return mag_ <=> o.mag_;
    return o.mag_ <=> mag_;
}

std::string BigInt::to_string() const {
    if (sign_ < 0) return "-" + mag_.to_string();
    return mag_.to_string();
}

double BigInt::to_double() const { return sign_ < 0 ? -mag_.to_double() : mag_.to_double(); }

// ---- BigRat ----

BigRat::BigRat(BigInt num, BigUint den) : num_(std::move(num)), den_(std::move(den)) {
    if (den_.is_zero()) throw std::domain_error("BigRat: zero denominator");
    normalize();
}

void BigRat::normalize() {
    if (num_.sign() == 0) {
        den_ = BigUint(1);
        return;
    }
    BigUint g = BigUint::gcd(num_.mag(), den_);
    if (g > BigUint(1)) {
        num_ = BigInt(num_.mag() / g, num_.sign());
        den_ = den_ / g;
    }
}

BigRat operator+(const BigRat& a, const BigRat& b) {
    BigInt num = a.num_ * BigInt(b.den_) + b.num_ * BigInt(a.den_);
    return BigRat(std::move(num), a.den_ * b.den_);
}

BigRat operator-(const BigRat& a, const BigRat& b) {
    BigInt num = a.num_ * BigInt(b.den_) - b.num_ * BigInt(a.den_);
    return BigRat(std::move(num), a.den_ * b.den_);
}

BigRat operator*(const BigRat& a, const BigRat& b) {
    return BigRat(a.num_ * b.num_, a.den_ * b.den_);
}

BigRat operator/(const BigRat& a, const BigRat& b) {
    if (b.sign() == 0) throw std::domain_error("BigRat: division by zero");
    BigInt num = a.num_ * BigInt(b.den_);
    BigUint den = a.den_ * b.num_.mag();
    if (b.sign() < 0) num = -num;
    return BigRat(std::move(num), std::move(den));
}

std::strong_ordering BigRat::operator<=>(const BigRat& o) const {
    BigInt lhs = num_ * BigInt(o.den_);
    BigInt rhs = o.num_ * BigInt(den_);
    return lhs <=> rhs;
}

BigInt BigRat::floor() const {
    auto [q, r] = BigUint::divmod(num_.mag(), den_);
    if (num_.sign() >= 0) return BigInt(std::move(q), 1);
    if (r.is_zero()) return BigInt(std::move(q), -1);
    return BigInt(q + BigUint(1), -1);
}

std::string BigRat::to_string() const { return num_.to_string() + "/" + den_.to_string(); }

double BigRat::to_double() const {
    if (sign() == 0) return 0.0;
    // align both operands into double range before dividing
    size_t nb = num_.mag().bit_length(), db = den_.bit_length();
    int shift_n = nb > 512 ? int(nb - 512) : 0;
    int shift_d = db > 512 ? int(db - 512) : 0;
    double n = (num_.mag() >> size_t(shift_n)).to_double();
    double d = (den_ >> size_t(shift_d)).to_double();
    return (num_.sign() < 0 ? -1.0 : 1.0) * std::ldexp(n / d, shift_n - shift_d);
}

// ---- fixed-point log2 ----

BigUint log2_fixed(const BigUint& x, unsigned frac_bits) {
    if (x.is_zero()) throw std::domain_error("log2_fixed: log of zero");
    const unsigned guard = 32;
    const unsigned f = frac_bits + guard;
    size_t b = x.bit_length() - 1;
    BigUint v = (x << f) >> b;                    // value in [1, 2) at scale 2^f
    BigUint res = BigUint(b) << f;
    BigUint two = BigUint(1) << (f + 1);
    for (unsigned i = 1; i <= f; ++i) {
        v = (v * v) >> f;
        if (v >= two) {
            v = v >> 1;
            res += BigUint(1) << (f - i);
        }
    }
    return res >> guard;
}

// ---- checked machine arithmetic ----

int64_t checked_mul_i64(int64_t a, int64_t b) {
    int64_t r;
    if (__builtin_mul_overflow(a, b, &r)) throw std::overflow_error("i64 multiply overflow");
    return r;
}

int64_t checked_add_i64(int64_t a, int64_t b) {
    int64_t r;
    if (__builtin_add_overflow(a, b, &r)) throw std::overflow_error("i64 add overflow");
    return r;
}

uint64_t checked_pow_u64(uint64_t base, uint64_t e) {
    uint64_t r = 1;
    const uint64_t cap = uint64_t(1) << 63;
    for (uint64_t i = 0; i < e; ++i) {
        if (base != 0 && r > cap / base) throw std::overflow_error("u64 power overflow");
        r *= base;
    }
    return r;
}

}  // namespace cwid
