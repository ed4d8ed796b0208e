#pragma once
// Identification semantics on the noiseless channel: uniform encoding over
// the support of an identifier's codeword, support-membership demapping,
// exact and simulated pairwise error rates, and the rate/exponent metrics.

#include <cstdint>
#include <memory>
#include <vector>

#include "cwid/bigint.hpp"
#include "cwid/concat.hpp"
#include "cwid/cwc.hpp"

namespace cwid {

// Identifier i encodes to a uniformly random support position of codeword i;
// receiver i' accepts iff the received position lies in its own support.
class IdCode {
public:
    static IdCode from_family(CwcFamily fam);
    static IdCode from_concat(ConcatSpec spec);

    const CodeParams& params() const { return params_; }
    CwCodeword codeword(const BigUint& id) const;
    bool id_in_range(const BigUint& id) const;

private:
    CodeParams params_;
    std::shared_ptr<const CwcFamily> family_;
    std::shared_ptr<const ConcatSpec> concat_;
};

// gamma_{i,i'} / W: the exact probability that receiver i' accepts a
// transmission meant for i. Throws on i == i'.
BigRat exact_pairwise_type2(const IdCode& code, const BigUint& i, const BigUint& i_prime);

struct SimResult {
    uint64_t trials = 0;
    uint64_t type1_errors = 0;   // own receiver rejected
    uint64_t type2_accepts = 0;  // other receiver accepted
    double lambda1() const { return double(type1_errors) / double(trials); }
    double lambda2() const { return double(type2_accepts) / double(trials); }
};

// Seeded and bit-reproducible; the identity channel forwards the sampled
// support position unchanged.
SimResult simulate_id(const IdCode& code, const BigUint& i, const BigUint& i_prime,
                      uint64_t trials, uint64_t seed);

struct IdMetrics {
    double n_id = 0;           // log2(S)
    double r_id = 0;           // log2(log2(N)) / n_id
    double e2 = 0;             // -log2(K/W) / n_id; +inf when K = 0
    double capacity_gap = 0;   // 1 - (r_id + 2 e2); -inf when K = 0
    bool e2_infinite = false;
    unsigned precision_bits = 0;
};

// Requires S >= 2, N >= 4, 1 <= W, 0 <= K <= W.
IdMetrics id_metrics(const CodeParams& params, unsigned precision_bits = 96);

struct CapacityLineRow {
    double r_id = 0;
    double e2 = 0;
    double sum = 0;   // r_id + 2 e2
    bool within = false;
};

struct CapacityLineReport {
    std::vector<CapacityLineRow> rows;
    size_t within_count = 0;
};

// Diagnostic against the capacity line r + 2 e2 <= 1 of the binary noiseless
// channel; rows with infinite e2 are skipped.
CapacityLineReport capacity_line_check(const std::vector<IdMetrics>& metrics);

}  // namespace cwid
