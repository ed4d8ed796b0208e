#pragma once
// Binary constant-weight code data model and verification: cross-correlation,
// cyclic correlations, minimum distance, and the identification-optimality
// metrics. Codewords are stored as sorted supports; code sizes are exact and
// may be kept in symbolic base^exponent form.

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "cwid/bigint.hpp"

namespace cwid {

// Exact code size N; keeps base^exponent alongside the materialized integer
// so log log N stays computable when N is astronomically large.
class CodeSize {
public:
    CodeSize() : value_(BigUint(0)) {}
    CodeSize(uint64_t v) : value_(BigUint(v)) {}
    explicit CodeSize(BigUint v) : value_(std::move(v)) {}
    static CodeSize power(uint64_t base, uint64_t exp);

    bool has_value() const { return value_.has_value(); }
    const BigUint& value() const;                     // throws if too large to materialize
    bool has_pow() const { return pow_.has_value(); }
    uint64_t base() const { return pow_->first; }
    uint64_t exponent() const { return pow_->second; }

    BigUint log2_fixed(unsigned frac_bits) const;     // floor(2^F log2 N), N >= 1
    bool equals(const BigUint& other) const;
    bool equals_u64(uint64_t other) const { return equals(BigUint(other)); }
    std::string to_string() const;                    // decimal, or "base^exp" if huge

private:
    std::optional<BigUint> value_;
    std::optional<std::pair<uint64_t, uint64_t>> pow_;
    static constexpr size_t kMaterializeBits = size_t(1) << 16;
};

struct CodeParams {
    int64_t S = 0;
    CodeSize N;
    int64_t W = 0;
    int64_t K = 0;
};

struct CwCodeword {
    int64_t blocklength = 0;
    std::vector<int64_t> support;  // strictly increasing indices in [0, blocklength)
    int64_t weight() const { return int64_t(support.size()); }
};

// Validates, sorts, and rejects duplicate or out-of-range indices.
CwCodeword make_codeword(int64_t blocklength, std::vector<int64_t> support);

struct CwcFamily {
    int64_t blocklength = 0;
    std::vector<CwCodeword> codewords;
    CodeParams claimed;
};

// |support(a) ∩ support(b)|; throws on blocklength mismatch.
int64_t cross_correlation(const CwCodeword& a, const CwCodeword& b);

struct VerificationReport {
    int64_t S = 0;
    int64_t N = 0;
    int64_t W_min = 0;
    int64_t W_max = 0;
    int64_t K_actual = 0;                    // max over distinct pairs, 0 if N < 2
    std::optional<int64_t> min_distance;     // empty if N < 2
    bool K_attained = false;                 // K_actual == claimed K
    bool pass = false;
    std::vector<std::string> failures;
};

// Exhaustive pairwise verification against the family's claimed parameters.
// Mismatches become report entries, never exceptions; K_actual < claimed K
// still passes.
VerificationReport verify_cwc(const CwcFamily& fam);

struct CyclicCorrelations {
    int64_t max_auto = 0;   // shifts in [1, S-1], per codeword
    int64_t max_cross = 0;  // shifts in [0, S-1], distinct pairs
};
CyclicCorrelations cyclic_correlations(const CwcFamily& fam);

// 2(W - K)
int64_t min_distance_from_params(const CodeParams& params);

struct OptimalityMetrics {
    double weight_factor = 0;       // log2(W) / log2(S)
    double second_order_rate = 0;   // log2(log2(N)) / log2(S)
    BigRat overlap_fraction;        // K / W, exact
};

// Throws on degenerate inputs (S < 2, W < 1, N < 2).
OptimalityMetrics optimality_metrics(const CodeParams& params, unsigned precision_bits = 96);

}  // namespace cwid
