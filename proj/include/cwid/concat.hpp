#pragma once
// Concatenation of an inner constant-weight code with a chain of outer MDS
// codes: exact parameter arithmetic and lazy per-identifier codeword
// generation. A length-n outer code over GF(N_inner) turns each of its
// symbols into one inner codeword, giving an
// (S n, N^k, W n, W(n-d) + K n) constant-weight code.

#include <cstdint>
#include <memory>
#include <optional>
#include <vector>

#include "cwid/cwc.hpp"
#include "cwid/finite_field.hpp"
#include "cwid/rs.hpp"

namespace cwid {

// Pure parameter composition; the caller is responsible for the outer field
// size matching the inner code size.
CodeParams concat_params(const CodeParams& inner, uint64_t n_o, uint64_t k_o, uint64_t d_o);

struct ConcatLevel {
    RsSpec spec;
    std::shared_ptr<const FieldCtx> field;
};

struct ConcatSpec {
    CwcFamily inner;
    std::vector<ConcatLevel> outers;  // innermost first
    CodeParams params;
};

// Validates the field-size chain (level 0 over GF(|inner|), each next level
// over GF(q_prev^{k_prev})) and builds the needed field tables.
ConcatSpec make_concat(CwcFamily inner, const std::vector<RsSpec>& outers,
                       uint64_t field_cap = FieldCtx::kDefaultCap);

// Deterministic codeword of one identifier: base-N digits feed the outermost
// encoder, each symbol expands through the level below, inner codewords land
// in consecutive blocks.
CwCodeword concat_codeword(const ConcatSpec& spec, const BigUint& id);

// Materializes every codeword; requires the total size to stay enumerable.
CwcFamily concat_enumerate(const ConcatSpec& spec, uint64_t max_codewords = 10000);

enum class OuterVariant { rs, dext_rs };

// Modified prime sequences doubly concatenated with [p-1,k_o] RS over GF(p)
// and [p^{k_o}-1,k_oo] RS over GF(p^{k_o}), or the doubly-extended analogues.
CodeParams construction1_full_params(uint64_t p, uint64_t ko, uint64_t koo, OuterVariant variant);

// Norm-equation inner code doubly concatenated with [p^m-3,k_o] RS over
// GF(p^m-2) and the matching second outer code; requires p^m-2 to be a prime
// power unless a truncation target is supplied.
CodeParams construction2_full_params(uint64_t p, int m, uint64_t ko, uint64_t koo,
                                     OuterVariant variant,
                                     std::optional<uint64_t> truncate = std::nullopt);

// Pulse-position inner code with two outer extended RS codes (the benchmark
// construction).
CodeParams ppm_bench_params(uint64_t q, uint64_t ko, uint64_t koo);

struct OptimalityRatios {
    double log2_koo = 0;
    double log2_koo_over_ko = 0;
    double ko_over_p = 0;
    double koo_over_p_ko = 0;
    OptimalityMetrics metrics;  // for the standard-RS parameter set
};

OptimalityRatios id_optimality_report(uint64_t p, uint64_t ko, uint64_t koo);

}  // namespace cwid
