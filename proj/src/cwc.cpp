#include "cwid/cwc.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

namespace cwid {

CodeSize CodeSize::power(uint64_t base, uint64_t exp) {
    CodeSize s;
    s.pow_ = {base, exp};
    double bits = exp * std::log2(double(base ? base : 1));
    if (base == 0) {
        s.value_ = BigUint(exp == 0 ? 1 : 0);
    } else if (bits <= double(kMaterializeBits)) {
        s.value_ = BigUint(base).pow(exp);
    } else {
        s.value_.reset();
    }
    return s;
}

const BigUint& CodeSize::value() const {
    if (!value_) throw std::length_error("CodeSize: value too large to materialize");
    return *value_;
}

BigUint CodeSize::log2_fixed(unsigned frac_bits) const {
    if (pow_) {
        if (pow_->first == 0) throw std::domain_error("CodeSize: log of zero");
        return cwid::log2_fixed(BigUint(pow_->first), frac_bits) * BigUint(pow_->second);
    }
    return cwid::log2_fixed(value(), frac_bits);
}

bool CodeSize::equals(const BigUint& other) const {
    if (value_) return *value_ == other;
    // huge symbolic value can never equal a comparable operand of sane size
    return false;
}

std::string CodeSize::to_string() const {
    if (value_) return value_->to_string();
    return std::to_string(pow_->first) + "^" + std::to_string(pow_->second);
}

CwCodeword make_codeword(int64_t blocklength, std::vector<int64_t> support) {
    if (blocklength <= 0) throw std::invalid_argument("make_codeword: blocklength must be positive");
    std::sort(support.begin(), support.end());
    for (size_t i = 0; i < support.size(); ++i) {
        if (support[i] < 0 || support[i] >= blocklength)
            throw std::invalid_argument("make_codeword: support index out of range");
        if (i > 0 && support[i] == support[i - 1])
            throw std::invalid_argument("make_codeword: duplicate support index");
    }
    return CwCodeword{blocklength, std::move(support)};
}

int64_t cross_correlation(const CwCodeword& a, const CwCodeword& b) {
    if (a.blocklength != b.blocklength)
        throw std::invalid_argument("cross_correlation: blocklength mismatch");
    int64_t count = 0;
    size_t i = 0, j = 0;
    while (i < a.support.size() && j < b.support.size()) {
        if (a.support[i] < b.support[j]) {
            ++i;
        } else if (a.support[i] > b.support[j]) {
            ++j;
        } else {
            ++count;
            ++i;
            ++j;
        }
    }
    return count;
}

VerificationReport verify_cwc(const CwcFamily& fam) {
    if (fam.codewords.empty()) throw std::invalid_argument("verify_cwc: empty family");
    VerificationReport rep;
    rep.S = fam.blocklength;
    rep.N = int64_t(fam.codewords.size());
    rep.W_min = fam.codewords.front().weight();
    rep.W_max = rep.W_min;
    for (const auto& c : fam.codewords) {
        if (c.blocklength != fam.blocklength)
            throw std::invalid_argument("verify_cwc: codeword blocklength differs from family");
        rep.W_min = std::min(rep.W_min, c.weight());
        rep.W_max = std::max(rep.W_max, c.weight());
    }
    for (size_t i = 0; i < fam.codewords.size(); ++i) {
        for (size_t j = i + 1; j < fam.codewords.size(); ++j) {
            int64_t g = cross_correlation(fam.codewords[i], fam.codewords[j]);
            rep.K_actual = std::max(rep.K_actual, g);
            int64_t dist = fam.codewords[i].weight() + fam.codewords[j].weight() - 2 * g;
            if (!rep.min_distance || dist < *rep.min_distance) rep.min_distance = dist;
        }
    }
    const CodeParams& cl = fam.claimed;
    if (cl.S != rep.S)
        rep.failures.push_back("blocklength " + std::to_string(rep.S) + " != claimed " + std::to_string(cl.S));
    if (!cl.N.equals_u64(uint64_t(rep.N)))
        rep.failures.push_back("size " + std::to_string(rep.N) + " != claimed " + cl.N.to_string());
    if (rep.W_min != cl.W || rep.W_max != cl.W)
        rep.failures.push_back("weights [" + std::to_string(rep.W_min) + "," + std::to_string(rep.W_max) +
                               "] != claimed " + std::to_string(cl.W));
    if (rep.K_actual > cl.K)
        rep.failures.push_back("max overlap " + std::to_string(rep.K_actual) + " > claimed " +
                               std::to_string(cl.K));
    rep.K_attained = (rep.K_actual == cl.K);
    rep.pass = rep.failures.empty();
    return rep;
}

CyclicCorrelations cyclic_correlations(const CwcFamily& fam) {
    if (fam.codewords.empty()) throw std::invalid_argument("cyclic_correlations: empty family");
    const int64_t S = fam.blocklength;
    std::vector<std::vector<uint8_t>> bits(fam.codewords.size(), std::vector<uint8_t>(size_t(S), 0));
    for (size_t j = 0; j < fam.codewords.size(); ++j) {
        if (fam.codewords[j].blocklength != S)
            throw std::invalid_argument("cyclic_correlations: codeword blocklength differs from family");
        for (int64_t s : fam.codewords[j].support) bits[j][size_t(s)] = 1;
    }
    CyclicCorrelations out;
    for (size_t j = 0; j < fam.codewords.size(); ++j) {
        for (int64_t tau = 1; tau < S; ++tau) {
            int64_t sum = 0;
            for (int64_t s : fam.codewords[j].support) sum += bits[j][size_t((s + tau) % S)];
            out.max_auto = std::max(out.max_auto, sum);
        }
    }
    for (size_t j = 0; j < fam.codewords.size(); ++j) {
        for (size_t j2 = 0; j2 < fam.codewords.size(); ++j2) {
            if (j == j2) continue;
            for (int64_t tau = 0; tau < S; ++tau) {
                int64_t sum = 0;
                for (int64_t s : fam.codewords[j].support) sum += bits[j2][size_t((s + tau) % S)];
                out.max_cross = std::max(out.max_cross, sum);
            }
        }
    }
    return out;
}

int64_t min_distance_from_params(const CodeParams& params) {
    if (params.K > params.W) throw std::invalid_argument("min_distance_from_params: K > W");
    return 2 * (params.W - params.K);
}

namespace {

double fixed_ratio_to_double(const BigInt& num_fp, const BigUint& den_fp, unsigned f) {
    // (num_fp / den_fp) where both carry 2^f scaling; result is the plain ratio
    BigInt scaled = BigInt(num_fp.mag() << f, num_fp.sign());
    auto [q, r] = BigUint::divmod(scaled.mag(), den_fp);
    double d = q.to_double() / std::ldexp(1.0, int(f));
    return num_fp.sign() < 0 ? -d : d;
}

}  // namespace

OptimalityMetrics optimality_metrics(const CodeParams& params, unsigned precision_bits) {
    if (params.S < 2 || params.W < 1)
        throw std::invalid_argument("optimality_metrics: degenerate parameters");
    // a composed overlap bound may exceed the weight; the fraction is then
    // vacuous (> 1) but still well-defined
    if (params.K < 0) throw std::invalid_argument("optimality_metrics: negative K");
    const unsigned f = precision_bits;
    BigUint n_fp = log2_fixed(BigUint(uint64_t(params.S)), f);
    BigUint logn = params.N.log2_fixed(f);
    if (logn.is_zero()) throw std::invalid_argument("optimality_metrics: N must be >= 2");

    OptimalityMetrics out;
    BigUint w_fp = log2_fixed(BigUint(uint64_t(params.W)), f);
    out.weight_factor = fixed_ratio_to_double(BigInt(w_fp), n_fp, f);
    // log2(log2 N) = log2(logn) - f, both at scale 2^f
    BigInt loglog = BigInt(log2_fixed(logn, f)) - BigInt(BigUint(f) << f);
    out.second_order_rate = fixed_ratio_to_double(loglog, n_fp, f);
    out.overlap_fraction = BigRat(BigInt(params.K), BigUint(uint64_t(params.W)));
    return out;
}

}  // namespace cwid
