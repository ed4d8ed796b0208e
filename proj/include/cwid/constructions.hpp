#pragma once
// Inner constant-weight code generators: prime sequences (plain and
// modified), the norm-equation optical orthogonal code family, and the
// pulse-position-modulation code.

#include <cstdint>
#include <vector>

#include "cwid/cwc.hpp"
#include "cwid/finite_field.hpp"

namespace cwid {

struct PrimeSequence {
    uint64_t p = 0;
    uint64_t j = 0;                  // multiplier in [0, p-1]
    std::vector<uint32_t> symbols;   // symbols[s] = j*s mod p
};

std::vector<PrimeSequence> prime_sequences(uint64_t p);

// One-hot encoding: symbol v at position s becomes a single one at index
// alphabet*s + v; blocklength alphabet*len(symbols).
CwCodeword one_hot(const std::vector<uint32_t>& symbols, uint64_t alphabet);

// All p one-hot prime sequences as a (p^2, p, p, 1) family. Overlap 1 comes
// from the shared leading zero symbol.
CwcFamily prime_sequence_cwc(uint64_t p);

// Prime sequences with the leading zero symbol removed, one-hot encoded:
// a (p^2-p, p, p-1, 0) family.
CwcFamily modified_prime_cwc(uint64_t p);

// Solution sets of (x-1)^{p^m+1} = alpha^{i(p^m+1)} over GF(p^{2m}), indexed
// by discrete logs: a (p^{2m}-1, p^m-2, p^m+1, 0) family.
CwcFamily construction2_cwc(uint64_t p, int m, uint64_t field_cap = FieldCtx::kDefaultCap);

// Prefix truncation (codewords i = 1..target_size) so the size can be brought
// down to a prime power when p^m-2 is not one.
CwcFamily construction2_truncated(uint64_t p, int m, uint64_t target_size,
                                  uint64_t field_cap = FieldCtx::kDefaultCap);

// (q, q, 1, 0): codeword i has the single one at index i.
CwcFamily ppm_cwc(uint64_t q);

}  // namespace cwid
