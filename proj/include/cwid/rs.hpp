#pragma once
// Reed-Solomon evaluation encoders over GF(q): standard, extended (extra
// evaluation at zero), and doubly-extended (additionally the leading
// coefficient, the evaluation at infinity). All three are MDS.

#include <cstdint>
#include <vector>

#include "cwid/bigint.hpp"
#include "cwid/finite_field.hpp"

namespace cwid {

enum class RsVariant { standard, extended, doubly_extended };

struct RsSpec {
    uint64_t q = 0;  // field size, prime power
    uint64_t k = 0;  // dimension
    RsVariant variant = RsVariant::standard;
};

struct RsParams {
    uint64_t n = 0;
    uint64_t k = 0;
    uint64_t d = 0;
};

// (q-1, k, q-k) / (q, k, q-k+1) / (q+1, k, q-k+2); validates 1 <= k < q-1
// for standard and 1 <= k <= q otherwise.
RsParams rs_params(const RsSpec& spec);

// Evaluation encoding of the degree-<k message polynomial (coefficients
// little-endian) at alpha^0..alpha^{q-2}, then 0, then infinity, by variant.
std::vector<FieldElem> rs_codeword(const RsSpec& spec, const FieldCtx& field,
                                   const std::vector<FieldElem>& message);

// Canonical message indexing: base-q digits of the index, little-endian,
// exactly k digits.
std::vector<FieldElem> rs_message_from_index(const RsSpec& spec, const BigUint& index);

// Minimum nonzero codeword weight over the whole code; requires
// q^k <= max_codewords.
uint64_t exhaustive_min_distance(const RsSpec& spec, const FieldCtx& field,
                                 uint64_t max_codewords = 1000000);

}  // namespace cwid
