#include "cwid/bounds.hpp"

#include <stdexcept>

namespace cwid {

BigUint binomial(uint64_t n, uint64_t k) {
    if (k > n) return BigUint(0);
    if (k > n - k) k = n - k;
    BigUint c(1);
    for (uint64_t i = 1; i <= k; ++i) {
        c = c * BigUint(n - k + i);
        c = BigUint::divmod_u32(c, uint32_t(i)).first;  // exact at every step
    }
    return c;
}

BigUint surjection_count(uint64_t ell, uint64_t u) {
    if (ell < 1 || u < 1 || u > ell) throw std::invalid_argument("surjection_count: need 1 <= u <= ell");
    BigInt acc(0);
    for (uint64_t k = 0; k <= u; ++k) {
        BigInt term(binomial(u, k) * BigUint(u - k).pow(ell), (k % 2) ? -1 : 1);
        acc = acc + term;
    }
    return acc.mag();
}

static void check_swk(int64_t S, int64_t W, int64_t K) {
    if (K < 0 || K > W || W > S || W < 1)
        throw std::invalid_argument("bounds: need 0 <= K <= W <= S, W >= 1");
}

BigUint johnson_bound(int64_t S, int64_t W, int64_t K) {
    check_swk(S, W, K);
    if (W == K) throw std::invalid_argument("johnson_bound: W = K is degenerate");
    BigUint r(uint64_t((S - K) / (W - K)));
    for (int64_t i = K - 1; i >= 0; --i) {
        r = (BigUint(uint64_t(S - i)) * r) / BigUint(uint64_t(W - i));
    }
    return r;
}

std::optional<BigUint> correlation_bound(int64_t S, int64_t W, int64_t K, uint64_t ell,
                                         int64_t dprime) {
    check_swk(S, W, K);
    if (ell < 1) throw std::invalid_argument("correlation_bound: ell must be >= 1");
    if (dprime < 1 || dprime > K) throw std::invalid_argument("correlation_bound: d' must be in [1, K]");
    const uint64_t Sp = uint64_t(S - dprime);
    const uint64_t Wp = uint64_t(W - dprime);
    const uint64_t Kp = uint64_t(K - dprime);

    BigUint kp_ell = BigUint(Kp).pow(ell);
    BigRat denom = BigRat(BigInt(kp_ell), BigUint(1)) * BigRat(-1);
    for (uint64_t u = 1; u <= ell && u <= Wp; ++u) {
        BigUint num = binomial(Wp, u);
        num = num * num * surjection_count(ell, u);
        denom = denom + BigRat(BigInt(num), binomial(Sp, u));
    }
    if (denom.sign() <= 0) return std::nullopt;

    BigRat numer(BigInt(BigUint(Wp).pow(ell)) - BigInt(kp_ell), BigUint(1));
    BigInt inner = (numer / denom).floor();
    BigUint r = inner.sign() > 0 ? inner.mag() : BigUint(0);
    for (int64_t i = dprime - 1; i >= 0; --i) {
        r = (BigUint(uint64_t(S - i)) * r) / BigUint(uint64_t(W - i));
    }
    return r;
}

std::optional<BestCorrelation> best_correlation_bound(int64_t S, int64_t W, int64_t K,
                                                      uint64_t ell_max) {
    check_swk(S, W, K);
    std::optional<BestCorrelation> best;
    for (uint64_t ell = 1; ell <= ell_max; ++ell) {
        for (int64_t d = 1; d <= K; ++d) {
            auto b = correlation_bound(S, W, K, ell, d);
            if (!b) continue;
            if (!best || *b < best->bound) best = BestCorrelation{*b, ell, d};
        }
    }
    return best;
}

BigRat correlation_moment(const CwcFamily& fam, uint64_t ell) {
    const uint64_t n = fam.codewords.size();
    if (n < 2) throw std::invalid_argument("correlation_moment: need at least two codewords");
    const int64_t w = fam.codewords.front().weight();
    for (const auto& c : fam.codewords)
        if (c.weight() != w) throw std::invalid_argument("correlation_moment: weights are not uniform");
    BigUint off_diag(0);
    for (size_t i = 0; i < n; ++i) {
        for (size_t j = i + 1; j < n; ++j) {
            int64_t g = cross_correlation(fam.codewords[i], fam.codewords[j]);
            off_diag += BigUint(uint64_t(g)).pow(ell);
        }
    }
    // ordered pairs count both directions
    return BigRat(BigInt(off_diag * BigUint(2)), BigUint(n) * BigUint(n - 1));
}

DistanceLowerBound min_distance_lower_bound(int64_t S, const BigUint& N, int64_t W,
                                            uint64_t ell_max) {
    if (W < 1 || W > S) throw std::invalid_argument("min_distance_lower_bound: need 1 <= W <= S");
    if (N.is_zero()) throw std::invalid_argument("min_distance_lower_bound: N must be >= 1");
    for (int64_t k = 0; k < W; ++k) {
        BigUint b = johnson_bound(S, W, k);
        if (k >= 1) {
            auto c = best_correlation_bound(S, W, k, ell_max);
            if (c && c->bound < b) b = c->bound;
        }
        if (b >= N) return {k, 2 * (W - k)};
    }
    return {W, 0};  // K = W constrains nothing
}

BigUint id_size_bound(int64_t S, int64_t W, int64_t K, uint64_t ell_max) {
    BigUint b = johnson_bound(S, W, K);
    if (K >= 1) {
        auto c = best_correlation_bound(S, W, K, ell_max);
        if (c && c->bound < b) b = c->bound;
    }
    return b;
}

BoundReport bound_report(int64_t S, int64_t W, int64_t K, uint64_t ell_max) {
    BoundReport rep;
    rep.S = S;
    rep.W = W;
    rep.K = K;
    rep.johnson = johnson_bound(S, W, K);
    rep.n_id_bound = rep.johnson;
    if (K >= 1) {
        auto c = best_correlation_bound(S, W, K, ell_max);
        if (c) {
            rep.correlation = c->bound;
            rep.best_ell = c->ell;
            rep.best_dprime = c->dprime;
            if (c->bound < rep.n_id_bound) rep.n_id_bound = c->bound;
        }
    }
    return rep;
}

}  // namespace cwid
