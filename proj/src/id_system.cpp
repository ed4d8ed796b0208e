#include "cwid/id_system.hpp"

#include <algorithm>
#include <limits>
#include <random>
#include <stdexcept>

namespace cwid {

IdCode IdCode::from_family(CwcFamily fam) {
    IdCode code;
    code.params_ = fam.claimed;
    code.family_ = std::make_shared<CwcFamily>(std::move(fam));
    return code;
}

IdCode IdCode::from_concat(ConcatSpec spec) {
    IdCode code;
    code.params_ = spec.params;
    code.concat_ = std::make_shared<ConcatSpec>(std::move(spec));
    return code;
}

bool IdCode::id_in_range(const BigUint& id) const {
    if (family_) return BigUint(family_->codewords.size()) > id;
    return params_.N.has_value() ? params_.N.value() > id : true;
}

CwCodeword IdCode::codeword(const BigUint& id) const {
    if (!id_in_range(id)) throw std::out_of_range("IdCode: identifier out of range");
    if (family_) return family_->codewords[size_t(id.to_u64())];
    return concat_codeword(*concat_, id);
}

BigRat exact_pairwise_type2(const IdCode& code, const BigUint& i, const BigUint& i_prime) {
    if (i == i_prime) throw std::invalid_argument("exact_pairwise_type2: identifiers must differ");
    CwCodeword a = code.codeword(i);
    CwCodeword b = code.codeword(i_prime);
    int64_t g = cross_correlation(a, b);
    return BigRat(BigInt(g), BigUint(uint64_t(a.weight())));
}

namespace {

uint64_t bounded_uniform(std::mt19937_64& gen, uint64_t n) {
    // rejection sampling keeps the draw exactly uniform and reproducible
    const uint64_t limit = std::numeric_limits<uint64_t>::max() -
                           std::numeric_limits<uint64_t>::max() % n;
    uint64_t x;
    do {
        x = gen();
    } while (x >= limit);
    return x % n;
}

}  // namespace

SimResult simulate_id(const IdCode& code, const BigUint& i, const BigUint& i_prime,
                      uint64_t trials, uint64_t seed) {
    if (trials < 1) throw std::invalid_argument("simulate_id: trials must be >= 1");
    if (i == i_prime) throw std::invalid_argument("simulate_id: identifiers must differ");
    CwCodeword own = code.codeword(i);
    CwCodeword other = code.codeword(i_prime);
    if (own.support.empty()) throw std::invalid_argument("simulate_id: empty support");

    std::mt19937_64 gen(seed);
    SimResult res;
    res.trials = trials;
    for (uint64_t t = 0; t < trials; ++t) {
        int64_t sent = own.support[size_t(bounded_uniform(gen, own.support.size()))];
        // identity channel: received position equals sent position
        bool own_accepts = std::binary_search(own.support.begin(), own.support.end(), sent);
        bool other_accepts = std::binary_search(other.support.begin(), other.support.end(), sent);
        if (!own_accepts) ++res.type1_errors;
        if (other_accepts) ++res.type2_accepts;
    }
    return res;
}

namespace {

double fixed_over_fixed(const BigInt& num_fp, const BigUint& den_fp, unsigned f) {
    BigUint q = (num_fp.mag() << f) / den_fp;
    double d = q.to_double() / std::ldexp(1.0, int(f));
    return num_fp.sign() < 0 ? -d : d;
}

}  // namespace

IdMetrics id_metrics(const CodeParams& params, unsigned precision_bits) {
    if (params.S < 2 || params.W < 1 || params.K < 0 || params.K > params.W)
        throw std::invalid_argument("id_metrics: degenerate parameters");
    const unsigned f = precision_bits;
    IdMetrics out;
    out.precision_bits = f;

    BigUint n_fp = log2_fixed(BigUint(uint64_t(params.S)), f);
    BigUint logn = params.N.log2_fixed(f);
    if (!(logn > (BigUint(1) << f)))
        throw std::invalid_argument("id_metrics: log log N must be positive (N too small)");
    BigInt loglog = BigInt(log2_fixed(logn, f)) - BigInt(BigUint(f) << f);

    out.n_id = n_fp.to_double() / std::ldexp(1.0, int(f));
    out.r_id = fixed_over_fixed(loglog, n_fp, f);
    if (params.K == 0) {
        out.e2_infinite = true;
        out.e2 = std::numeric_limits<double>::infinity();
        out.capacity_gap = -std::numeric_limits<double>::infinity();
        return out;
    }
    // -log2(K/W) = log2 W - log2 K
    BigInt e2_num = BigInt(log2_fixed(BigUint(uint64_t(params.W)), f)) -
                    BigInt(log2_fixed(BigUint(uint64_t(params.K)), f));
    out.e2 = fixed_over_fixed(e2_num, n_fp, f);
    out.capacity_gap = 1.0 - (out.r_id + 2.0 * out.e2);
    return out;
}

CapacityLineReport capacity_line_check(const std::vector<IdMetrics>& metrics) {
    CapacityLineReport rep;
    for (const auto& m : metrics) {
        if (m.e2_infinite) continue;
        CapacityLineRow row;
        row.r_id = m.r_id;
        row.e2 = m.e2;
        row.sum = m.r_id + 2.0 * m.e2;
        row.within = row.sum <= 1.0;
        rep.within_count += row.within;
        rep.rows.push_back(row);
    }
    return rep;
}

}  // namespace cwid
