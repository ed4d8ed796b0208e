#include "cwid/constructions.hpp"

#include <stdexcept>
#include <string>

namespace cwid {

std::vector<PrimeSequence> prime_sequences(uint64_t p) {
    if (!is_prime(p)) throw std::invalid_argument("prime_sequences: p is not prime");
    std::vector<PrimeSequence> out;
    out.reserve(size_t(p));
    for (uint64_t j = 0; j < p; ++j) {
        PrimeSequence seq{p, j, {}};
        seq.symbols.reserve(size_t(p));
        for (uint64_t s = 0; s < p; ++s) seq.symbols.push_back(uint32_t((j * s) % p));
        out.push_back(std::move(seq));
    }
    return out;
}

CwCodeword one_hot(const std::vector<uint32_t>& symbols, uint64_t alphabet) {
    std::vector<int64_t> support;
    support.reserve(symbols.size());
    for (size_t s = 0; s < symbols.size(); ++s) {
        if (symbols[s] >= alphabet) throw std::invalid_argument("one_hot: symbol out of range");
        support.push_back(int64_t(alphabet) * int64_t(s) + symbols[s]);
    }
    return make_codeword(int64_t(alphabet) * int64_t(symbols.size()), std::move(support));
}

CwcFamily prime_sequence_cwc(uint64_t p) {
    auto seqs = prime_sequences(p);
    CwcFamily fam;
    fam.blocklength = int64_t(p * p);
    for (const auto& seq : seqs) fam.codewords.push_back(one_hot(seq.symbols, p));
    fam.claimed = CodeParams{int64_t(p * p), CodeSize(p), int64_t(p), 1};
    return fam;
}

CwcFamily modified_prime_cwc(uint64_t p) {
    auto seqs = prime_sequences(p);
    CwcFamily fam;
    fam.blocklength = int64_t(p * (p - 1));
    for (const auto& seq : seqs) {
        std::vector<uint32_t> tail(seq.symbols.begin() + 1, seq.symbols.end());
        fam.codewords.push_back(one_hot(tail, p));
    }
    fam.claimed = CodeParams{int64_t(p * (p - 1)), CodeSize(p), int64_t(p - 1), 0};
    return fam;
}

CwcFamily construction2_cwc(uint64_t p, int m, uint64_t field_cap) {
    if (m < 1) throw std::invalid_argument("construction2_cwc: m must be >= 1");
    FieldCtx field = make_field(p, 2 * m, field_cap);
    const uint64_t qq = field.q();           // p^{2m}
    const uint64_t q = checked_pow_u64(p, uint64_t(m));  // p^m
    const uint64_t order = qq - 1;
    if (q < 3) throw std::invalid_argument("construction2_cwc: p^m - 2 must be >= 1");

    // bucket every nonzero x by the exponent class of (x-1)^{q+1}
    std::vector<std::vector<int64_t>> buckets(order);
    for (uint64_t x = 1; x < qq; ++x) {
        FieldElem y = field.sub(FieldElem(x), 1);
        if (y == 0) continue;  // x = 1 never solves: left side is zero
        uint64_t e = (field.log(y) * (q + 1)) % order;
        buckets[e].push_back(int64_t(field.log(FieldElem(x))));
    }
    // x = 0 must never appear as a solution for any i in range
    const uint64_t e0 = (field.log(field.neg(1)) * (q + 1)) % order;
    for (uint64_t i = 1; i + 1 < q; ++i) {
        if (((i * (q + 1)) % order) == e0)
            throw std::runtime_error("construction2_cwc: x = 0 solves the norm equation");
    }

    CwcFamily fam;
    fam.blocklength = int64_t(order);
    for (uint64_t i = 1; i + 1 < q; ++i) {
        uint64_t e = (i * (q + 1)) % order;
        if (buckets[e].size() != q + 1)
            throw std::runtime_error("construction2_cwc: solution set for i = " + std::to_string(i) +
                                     " has size " + std::to_string(buckets[e].size()) +
                                     " instead of " + std::to_string(q + 1));
        fam.codewords.push_back(make_codeword(int64_t(order), buckets[e]));
    }
    fam.claimed = CodeParams{int64_t(order), CodeSize(q - 2), int64_t(q + 1), 0};
    return fam;
}

CwcFamily construction2_truncated(uint64_t p, int m, uint64_t target_size, uint64_t field_cap) {
    CwcFamily fam = construction2_cwc(p, m, field_cap);
    uint64_t n = fam.codewords.size();
    if (target_size < 1 || target_size > n)
        throw std::invalid_argument("construction2_truncated: target size exceeds family size");
    fam.codewords.resize(size_t(target_size));
    fam.claimed.N = CodeSize(target_size);
    return fam;
}

CwcFamily ppm_cwc(uint64_t q) {
    if (q < 2) throw std::invalid_argument("ppm_cwc: q must be >= 2");
    CwcFamily fam;
    fam.blocklength = int64_t(q);
    for (uint64_t i = 0; i < q; ++i)
        fam.codewords.push_back(CwCodeword{int64_t(q), {int64_t(i)}});
    fam.claimed = CodeParams{int64_t(q), CodeSize(q), 1, 0};
    return fam;
}

}  // namespace cwid
