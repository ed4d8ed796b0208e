#include "cwid/finite_field.hpp"

#include <stdexcept>
#include <string>

namespace cwid {

bool is_prime(uint64_t n) {
    if (n < 2) return false;
    if (n % 2 == 0) return n == 2;
    if (n % 3 == 0) return n == 3;
    for (uint64_t d = 5; d * d <= n; d += 6) {
        if (n % d == 0 || n % (d + 2) == 0) return false;
    }
    return true;
}

std::optional<std::pair<uint64_t, int>> is_prime_power(uint64_t n) {
    if (n < 2) throw std::invalid_argument("is_prime_power: n must be >= 2");
    uint64_t f = 0;
    for (uint64_t d = 2; d * d <= n; ++d) {
        if (n % d == 0) {
            f = d;
            break;
        }
    }
    if (f == 0) return std::make_pair(n, 1);  // n itself is prime
    int m = 0;
    uint64_t cur = n;
    while (cur % f == 0) {
        cur /= f;
        ++m;
    }
    if (cur != 1) return std::nullopt;
    return std::make_pair(f, m);
}

namespace {

using Poly = std::vector<uint32_t>;  // coefficient of x^i at index i, over GF(p)

// degree of poly ignoring leading zeros; -1 for the zero poly
int degree(const Poly& a) {
    for (size_t i = a.size(); i-- > 0;)
        if (a[i]) return int(i);
    return -1;
}

Poly poly_mod(Poly a, const Poly& mod, uint64_t p) {
    int dm = degree(mod);
    for (int i = degree(a); i >= dm; --i) {
        uint64_t c = a[i];
        if (!c) continue;
        // mod is monic: subtract c * x^{i-dm} * mod
        for (int j = 0; j <= dm; ++j) {
            uint64_t sub = (c * mod[j]) % p;
            a[i - dm + j] = uint32_t((a[i - dm + j] + p - sub) % p);
        }
    }
    a.resize(dm > 0 ? dm : 1, 0);
    return a;
}

Poly poly_mulmod(const Poly& a, const Poly& b, const Poly& mod, uint64_t p) {
    Poly r(a.size() + b.size() - 1, 0);
    for (size_t i = 0; i < a.size(); ++i) {
        if (!a[i]) continue;
        for (size_t j = 0; j < b.size(); ++j) {
            r[i + j] = uint32_t((r[i + j] + uint64_t(a[i]) * b[j]) % p);
        }
    }
    return poly_mod(std::move(r), mod, p);
}

bool poly_is_zero(const Poly& a) { return degree(a) < 0; }

// trial division by every monic polynomial of degree 1..deg/2
bool is_irreducible(const Poly& f, uint64_t p) {
    int df = degree(f);
    if (df < 1) return false;
    if (df == 1) return true;
    for (int d = 1; 2 * d <= df; ++d) {
        uint64_t count = 1;
        for (int i = 0; i < d; ++i) count *= p;
        for (uint64_t t = 0; t < count; ++t) {
            Poly g(d + 1, 0);
            uint64_t v = t;
            for (int i = 0; i < d; ++i) {
                g[i] = uint32_t(v % p);
                v /= p;
            }
            g[d] = 1;
            if (poly_is_zero(poly_mod(f, g, p))) return false;
        }
    }
    return true;
}

uint64_t value_of(const Poly& a, uint64_t p) {
    uint64_t v = 0;
    for (size_t i = a.size(); i-- > 0;) v = v * p + a[i];
    return v;
}

Poly poly_of(uint64_t value, int m, uint64_t p) {
    Poly a(size_t(m > 0 ? m : 1), 0);
    for (int i = 0; i < m && value; ++i) {
        a[i] = uint32_t(value % p);
        value /= p;
    }
    return a;
}

uint32_t elem_mulmod(uint32_t a, uint32_t b, const Poly& mod, uint64_t p, int m) {
    return uint32_t(value_of(poly_mulmod(poly_of(a, m, p), poly_of(b, m, p), mod, p), p));
}

uint32_t elem_powmod(uint32_t a, uint64_t e, const Poly& mod, uint64_t p, int m) {
    uint32_t r = 1, base = a;
    while (e) {
        if (e & 1) r = elem_mulmod(r, base, mod, p, m);
        e >>= 1;
        if (e) base = elem_mulmod(base, base, mod, p, m);
    }
    return r;
}

std::vector<uint64_t> prime_factors(uint64_t n) {
    std::vector<uint64_t> fs;
    for (uint64_t d = 2; d * d <= n; ++d) {
        if (n % d == 0) {
            fs.push_back(d);
            while (n % d == 0) n /= d;
        }
    }
    if (n > 1) fs.push_back(n);
    return fs;
}

}  // namespace

FieldCtx FieldCtx::build(uint64_t p, int m, std::vector<uint32_t> modulus, uint64_t q) {
    FieldCtx f;
    f.p_ = p;
    f.m_ = m;
    f.q_ = q;
    modulus.resize(size_t(m) + 1);
    f.modulus_ = std::move(modulus);

    auto factors = prime_factors(q - 1);
    uint32_t alpha = 0;
    for (uint64_t a = 1; a < q; ++a) {
        if (elem_powmod(uint32_t(a), q - 1, f.modulus_, p, m) != 1) continue;
        bool primitive = true;
        for (uint64_t r : factors) {
            if (elem_powmod(uint32_t(a), (q - 1) / r, f.modulus_, p, m) == 1) {
                primitive = false;
                break;
            }
        }
        if (primitive) {
            alpha = uint32_t(a);
            break;
        }
    }
    if (!alpha) throw std::runtime_error("make_field: no primitive element found");
    f.alpha_ = alpha;

    f.exp_.assign(q - 1, 0);
    f.log_.assign(q, 0);
    uint32_t cur = 1;
    for (uint64_t k = 0; k < q - 1; ++k) {
        f.exp_[k] = cur;
        f.log_[cur] = uint32_t(k);
        cur = elem_mulmod(cur, alpha, f.modulus_, p, m);
    }
    if (cur != 1) throw std::runtime_error("make_field: exp table did not close");
    return f;
}

namespace {

uint64_t checked_q(uint64_t p, int m, uint64_t cap) {
    if (m < 1) throw std::invalid_argument("make_field: m must be >= 1");
    uint64_t q = 1;
    for (int i = 0; i < m; ++i) {
        if (q > cap / p) throw std::length_error("make_field: field larger than table cap");
        q *= p;
    }
    if (q > cap) throw std::length_error("make_field: field larger than table cap");
    return q;
}

}  // namespace

FieldCtx make_field(uint64_t p, int m, uint64_t cap) {
    if (!is_prime(p)) throw std::invalid_argument("make_field: p = " + std::to_string(p) + " is not prime");
    uint64_t q = checked_q(p, m, cap);
    Poly modulus;
    if (m == 1) {
        modulus = {0, 1};  // x
    } else {
        // scan lower-coefficient vectors in ascending base-p value
        bool found = false;
        for (uint64_t t = 0; t < q && !found; ++t) {
            Poly g = poly_of(t, m, p);
            g.resize(size_t(m) + 1, 0);
            g[size_t(m)] = 1;
            if (is_irreducible(g, p)) {
                modulus = std::move(g);
                found = true;
            }
        }
        if (!found) throw std::runtime_error("make_field: no irreducible modulus found");
    }
    return FieldCtx::build(p, m, std::move(modulus), q);
}

FieldCtx make_field(uint64_t p, int m, const std::vector<uint32_t>& modulus, uint64_t cap) {
    if (!is_prime(p)) throw std::invalid_argument("make_field: p = " + std::to_string(p) + " is not prime");
    uint64_t q = checked_q(p, m, cap);
    if (int(modulus.size()) != m + 1 || modulus[size_t(m)] != 1)
        throw std::invalid_argument("make_field: modulus must be monic of degree m");
    for (uint32_t c : modulus)
        if (c >= p) throw std::invalid_argument("make_field: modulus coefficient out of range");
    if (!is_irreducible(modulus, p)) throw std::invalid_argument("make_field: modulus is reducible");
    return FieldCtx::build(p, m, modulus, q);
}

void FieldCtx::check(FieldElem a) const {
    if (a >= q_) throw std::out_of_range("FieldCtx: element out of range");
}

FieldElem FieldCtx::add(FieldElem a, FieldElem b) const {
    check(a);
    check(b);
    if (m_ == 1) return FieldElem((uint64_t(a) + b) % p_);
    FieldElem r = 0;
    uint64_t scale = 1;
    while (a || b) {
        uint64_t da = a % p_, db = b % p_;
        r += FieldElem(((da + db) % p_) * scale);
        a = FieldElem(a / p_);
        b = FieldElem(b / p_);
        scale *= p_;
    }
    return r;
}

FieldElem FieldCtx::neg(FieldElem a) const {
    check(a);
    if (m_ == 1) return FieldElem((p_ - a) % p_);
    FieldElem r = 0;
    uint64_t scale = 1;
    while (a) {
        uint64_t da = a % p_;
        r += FieldElem(((p_ - da) % p_) * scale);
        a = FieldElem(a / p_);
        scale *= p_;
    }
    return r;
}

FieldElem FieldCtx::sub(FieldElem a, FieldElem b) const { return add(a, neg(b)); }

FieldElem FieldCtx::mul(FieldElem a, FieldElem b) const {
    check(a);
    check(b);
    if (a == 0 || b == 0) return 0;
    uint64_t k = uint64_t(log_[a]) + log_[b];
    if (k >= q_ - 1) k -= q_ - 1;
    return exp_[k];
}

FieldElem FieldCtx::inv(FieldElem a) const {
    check(a);
    if (a == 0) throw std::domain_error("FieldCtx::inv: division by zero");
    uint64_t k = (q_ - 1 - log_[a]) % (q_ - 1);
    return exp_[k];
}

FieldElem FieldCtx::pow(FieldElem a, uint64_t e) const {
    check(a);
    if (a == 0) return e == 0 ? 1 : 0;
    uint64_t k = (uint64_t(log_[a]) * (e % (q_ - 1))) % (q_ - 1);
    return exp_[k];
}

FieldElem FieldCtx::exp(uint64_t k) const { return exp_[k % (q_ - 1)]; }

uint64_t FieldCtx::log(FieldElem x) const {
    check(x);
    if (x == 0) throw std::domain_error("FieldCtx::log: log of zero");
    return log_[x];
}

}  // namespace cwid
