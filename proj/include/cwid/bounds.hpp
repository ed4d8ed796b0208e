#pragma once
// Exact-arithmetic size bounds for binary constant-weight codes: the nested
// Johnson recursion and the correlation-moment bound, with inversion to a
// minimum-distance lower bound. Everything here is integers and rationals;
// no floating point.

#include <cstdint>
#include <optional>

#include "cwid/bigint.hpp"
#include "cwid/cwc.hpp"

namespace cwid {

BigUint binomial(uint64_t n, uint64_t k);

// Number of surjections from an ell-set onto a u-set:
// sum_{k=0}^{u} (-1)^k C(u,k) (u-k)^ell.
BigUint surjection_count(uint64_t ell, uint64_t u);

// floor(S/W floor((S-1)/(W-1) ... floor((S-K)/(W-K)) ... )); requires
// 0 <= K < W <= S.
BigUint johnson_bound(int64_t S, int64_t W, int64_t K);

// Correlation-moment bound for one (ell, d') pair; empty when the innermost
// denominator is not positive. Requires 1 <= d' <= K.
std::optional<BigUint> correlation_bound(int64_t S, int64_t W, int64_t K, uint64_t ell,
                                         int64_t dprime);

struct BestCorrelation {
    BigUint bound;
    uint64_t ell = 0;
    int64_t dprime = 0;
};

// Minimum over ell in [1, ell_max] and d' in [1, K]; ties broken by smaller
// ell, then smaller d'. Empty when no pair is feasible or K = 0.
std::optional<BestCorrelation> best_correlation_bound(int64_t S, int64_t W, int64_t K,
                                                      uint64_t ell_max = 8);

// m_ell = (sum_{j,j'} gamma^ell - N W^ell) / (N(N-1)); requires N >= 2 and
// uniform weight.
BigRat correlation_moment(const CwcFamily& fam, uint64_t ell);

struct DistanceLowerBound {
    int64_t K_star = 0;
    int64_t d_lower = 0;  // 2(W - K_star)
};

// Smallest K* with min(johnson, correlation) >= N, turned into a minimum
// distance via d = 2(W - K*). K* = W (d = 0) when no smaller K* certifies N.
DistanceLowerBound min_distance_lower_bound(int64_t S, const BigUint& N, int64_t W,
                                            uint64_t ell_max = 8);

// min of the available bounds, reported as the identifier-count bound.
BigUint id_size_bound(int64_t S, int64_t W, int64_t K, uint64_t ell_max = 8);

struct BoundReport {
    int64_t S = 0, W = 0, K = 0;
    BigUint johnson;
    std::optional<BigUint> correlation;  // best over the (ell, d') grid
    uint64_t best_ell = 0;
    int64_t best_dprime = 0;
    BigUint n_id_bound;                  // min of the bounds above
};

BoundReport bound_report(int64_t S, int64_t W, int64_t K, uint64_t ell_max = 8);

}  // namespace cwid
