#include "cwid/concat.hpp"

#include <cmath>
#include <stdexcept>
#include <string>

namespace cwid {

CodeParams concat_params(const CodeParams& inner, uint64_t n_o, uint64_t k_o, uint64_t d_o) {
    if (d_o > n_o) throw std::invalid_argument("concat_params: d > n");
    CodeParams out;
    out.S = checked_mul_i64(inner.S, int64_t(n_o));
    out.W = checked_mul_i64(inner.W, int64_t(n_o));
    out.K = checked_add_i64(checked_mul_i64(inner.W, int64_t(n_o - d_o)),
                            checked_mul_i64(inner.K, int64_t(n_o)));
    if (inner.N.has_pow()) {
        out.N = CodeSize::power(inner.N.base(), inner.N.exponent() * k_o);
    } else if (inner.N.value().fits_u64()) {
        out.N = CodeSize::power(inner.N.value().to_u64(), k_o);
    } else {
        out.N = CodeSize(inner.N.value().pow(k_o));
    }
    return out;
}

ConcatSpec make_concat(CwcFamily inner, const std::vector<RsSpec>& outers, uint64_t field_cap) {
    ConcatSpec spec;
    spec.params = inner.claimed;
    uint64_t level_size = inner.codewords.size();
    if (!inner.claimed.N.equals_u64(level_size))
        throw std::invalid_argument("make_concat: claimed inner size differs from codeword count");
    for (const RsSpec& rspec : outers) {
        if (rspec.q != level_size)
            throw std::invalid_argument("make_concat: outer field size " + std::to_string(rspec.q) +
                                        " != code size below " + std::to_string(level_size));
        RsParams par = rs_params(rspec);
        auto pp = is_prime_power(rspec.q);
        if (!pp) throw std::invalid_argument("make_concat: outer field size is not a prime power");
        ConcatLevel level;
        level.spec = rspec;
        level.field = std::make_shared<FieldCtx>(make_field(pp->first, pp->second, field_cap));
        spec.outers.push_back(std::move(level));
        spec.params = concat_params(spec.params, par.n, par.k, par.d);
        level_size = checked_pow_u64(rspec.q, rspec.k);
    }
    spec.inner = std::move(inner);
    return spec;
}

namespace {

// expand one outer symbol of level `lvl` into inner-code support indices
void expand_symbol(const ConcatSpec& spec, size_t lvl, uint64_t symbol, int64_t offset,
                   std::vector<int64_t>& support) {
    if (lvl == 0) {
        const CwCodeword& cw = spec.inner.codewords.at(size_t(symbol));
        for (int64_t s : cw.support) support.push_back(offset + s);
        return;
    }
    const ConcatLevel& level = spec.outers[lvl - 1];
    auto msg = rs_message_from_index(level.spec, BigUint(symbol));
    auto cw = rs_codeword(level.spec, *level.field, msg);
    int64_t stride = spec.inner.blocklength;
    for (size_t l = 0; l + 1 < lvl; ++l) stride *= int64_t(rs_params(spec.outers[l].spec).n);
    for (size_t t = 0; t < cw.size(); ++t)
        expand_symbol(spec, lvl - 1, cw[t], offset + int64_t(t) * stride, support);
}

}  // namespace

CwCodeword concat_codeword(const ConcatSpec& spec, const BigUint& id) {
    if (spec.outers.empty()) {
        if (!(BigUint(spec.inner.codewords.size()) > id))
            throw std::out_of_range("concat_codeword: identifier out of range");
        return spec.inner.codewords[size_t(id.to_u64())];
    }
    const ConcatLevel& top = spec.outers.back();
    BigUint total = BigUint(top.spec.q).pow(top.spec.k);
    if (!(total > id)) throw std::out_of_range("concat_codeword: identifier out of range");

    auto msg = rs_message_from_index(top.spec, id);
    auto cw = rs_codeword(top.spec, *top.field, msg);
    int64_t stride = spec.inner.blocklength;
    for (size_t l = 0; l + 1 < spec.outers.size(); ++l)
        stride *= int64_t(rs_params(spec.outers[l].spec).n);

    std::vector<int64_t> support;
    support.reserve(size_t(spec.params.W));
    for (size_t t = 0; t < cw.size(); ++t)
        expand_symbol(spec, spec.outers.size() - 1, cw[t], int64_t(t) * stride, support);
    return make_codeword(spec.params.S, std::move(support));
}

CwcFamily concat_enumerate(const ConcatSpec& spec, uint64_t max_codewords) {
    if (!spec.params.N.has_value() || !spec.params.N.value().fits_u64())
        throw std::length_error("concat_enumerate: code too large");
    uint64_t n = spec.params.N.value().to_u64();
    if (n > max_codewords) throw std::length_error("concat_enumerate: code too large");
    CwcFamily fam;
    fam.blocklength = spec.params.S;
    fam.claimed = spec.params;
    for (uint64_t id = 0; id < n; ++id) fam.codewords.push_back(concat_codeword(spec, BigUint(id)));
    return fam;
}

namespace {

RsSpec outer_spec(uint64_t q, uint64_t k, OuterVariant variant) {
    return RsSpec{q, k, variant == OuterVariant::rs ? RsVariant::standard : RsVariant::doubly_extended};
}

CodeParams double_concat_params(CodeParams inner, uint64_t q1, uint64_t ko, uint64_t q2, uint64_t koo,
                                OuterVariant variant) {
    RsParams o1 = rs_params(outer_spec(q1, ko, variant));
    RsParams o2 = rs_params(outer_spec(q2, koo, variant));
    CodeParams level1 = concat_params(inner, o1.n, o1.k, o1.d);
    return concat_params(level1, o2.n, o2.k, o2.d);
}

}  // namespace

CodeParams construction1_full_params(uint64_t p, uint64_t ko, uint64_t koo, OuterVariant variant) {
    if (!is_prime(p)) throw std::invalid_argument("construction1_full_params: p is not prime");
    uint64_t q2 = checked_pow_u64(p, ko);
    CodeParams inner{int64_t(p * (p - 1)), CodeSize(p), int64_t(p - 1), 0};
    CodeParams out = double_concat_params(inner, p, ko, q2, koo, variant);
    out.N = CodeSize::power(p, ko * koo);
    return out;
}

CodeParams construction2_full_params(uint64_t p, int m, uint64_t ko, uint64_t koo,
                                     OuterVariant variant, std::optional<uint64_t> truncate) {
    if (!is_prime(p)) throw std::invalid_argument("construction2_full_params: p is not prime");
    if (m < 1) throw std::invalid_argument("construction2_full_params: m must be >= 1");
    uint64_t q = checked_pow_u64(p, uint64_t(m));
    uint64_t qq = checked_mul_i64(int64_t(q), int64_t(q));
    uint64_t inner_size = q - 2;
    if (truncate) {
        if (*truncate > inner_size)
            throw std::invalid_argument("construction2_full_params: truncation target exceeds family size");
        inner_size = *truncate;
    }
    if (!is_prime_power(inner_size))
        throw std::invalid_argument("construction2_full_params: inner size " + std::to_string(inner_size) +
                                    " is not a prime power; truncate to one");
    uint64_t q2 = checked_pow_u64(inner_size, ko);
    CodeParams inner{int64_t(qq - 1), CodeSize(inner_size), int64_t(q + 1), 0};
    CodeParams out = double_concat_params(inner, inner_size, ko, q2, koo, variant);
    out.N = CodeSize::power(inner_size, ko * koo);
    return out;
}

CodeParams ppm_bench_params(uint64_t q, uint64_t ko, uint64_t koo) {
    if (!is_prime_power(q)) throw std::invalid_argument("ppm_bench_params: q is not a prime power");
    uint64_t q2 = checked_pow_u64(q, ko);
    RsParams o1 = rs_params(RsSpec{q, ko, RsVariant::extended});
    RsParams o2 = rs_params(RsSpec{q2, koo, RsVariant::extended});
    CodeParams inner{int64_t(q), CodeSize(q), 1, 0};
    CodeParams level1 = concat_params(inner, o1.n, o1.k, o1.d);
    CodeParams out = concat_params(level1, o2.n, o2.k, o2.d);
    out.N = CodeSize::power(q, ko * koo);
    return out;
}

OptimalityRatios id_optimality_report(uint64_t p, uint64_t ko, uint64_t koo) {
    if (ko < 1 || koo < 1) throw std::invalid_argument("id_optimality_report: dimensions must be >= 1");
    OptimalityRatios out;
    out.log2_koo = std::log2(double(koo));
    out.log2_koo_over_ko = out.log2_koo / double(ko);
    out.ko_over_p = double(ko) / double(p);
    out.koo_over_p_ko = double(koo) / double(checked_pow_u64(p, ko));
    out.metrics = optimality_metrics(construction1_full_params(p, ko, koo, OuterVariant::rs));
    return out;
}

}  // namespace cwid
