#pragma once
// Exact arithmetic in GF(p^m) with full exp/log tables, deterministic
// modulus and primitive-element selection, and prime-power testing.

#include <cstdint>
#include <optional>
#include <utility>
#include <vector>

namespace cwid {

bool is_prime(uint64_t n);

// n >= 2 -> (p, m) with n = p^m and p prime, or empty.
std::optional<std::pair<uint64_t, int>> is_prime_power(uint64_t n);

using FieldElem = uint32_t;  // canonical value in [0, q): base-p digits of the polynomial

class FieldCtx {
public:
    static constexpr uint64_t kDefaultCap = uint64_t(1) << 20;

    uint64_t p() const { return p_; }
    int m() const { return m_; }
    uint64_t q() const { return q_; }
    // monic irreducible modulus, coefficient of x^i at index i, degree m
    const std::vector<uint32_t>& modulus() const { return modulus_; }
    FieldElem alpha() const { return alpha_; }

    FieldElem add(FieldElem a, FieldElem b) const;
    FieldElem sub(FieldElem a, FieldElem b) const;
    FieldElem neg(FieldElem a) const;
    FieldElem mul(FieldElem a, FieldElem b) const;
    FieldElem inv(FieldElem a) const;                // a != 0
    FieldElem pow(FieldElem a, uint64_t e) const;
    FieldElem exp(uint64_t k) const;                 // alpha^k
    uint64_t log(FieldElem x) const;                 // discrete log base alpha, x != 0

private:
    uint64_t p_ = 0;
    int m_ = 0;
    uint64_t q_ = 0;
    std::vector<uint32_t> modulus_;
    FieldElem alpha_ = 0;
    std::vector<uint32_t> exp_;   // size q-1
    std::vector<uint32_t> log_;   // size q, log_[0] unused

    void check(FieldElem a) const;
    static FieldCtx build(uint64_t p, int m, std::vector<uint32_t> modulus, uint64_t q);

    friend FieldCtx make_field(uint64_t p, int m, uint64_t cap);
    friend FieldCtx make_field(uint64_t p, int m, const std::vector<uint32_t>& modulus, uint64_t cap);
};

// Deterministic construction: lowest-lexicographic monic irreducible modulus,
// smallest primitive element. Throws on non-prime p or q above the cap.
FieldCtx make_field(uint64_t p, int m, uint64_t cap = FieldCtx::kDefaultCap);

// Same with a caller-supplied modulus (validated for degree, monicity and
// irreducibility) so external test vectors can be matched.
FieldCtx make_field(uint64_t p, int m, const std::vector<uint32_t>& modulus,
                    uint64_t cap = FieldCtx::kDefaultCap);

}  // namespace cwid
