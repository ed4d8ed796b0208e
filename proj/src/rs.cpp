#include "cwid/rs.hpp"

#include <stdexcept>

namespace cwid {

RsParams rs_params(const RsSpec& spec) {
    if (spec.q < 2) throw std::invalid_argument("rs_params: field size must be >= 2");
    switch (spec.variant) {
        case RsVariant::standard:
            if (spec.k < 1 || spec.k + 1 >= spec.q)
                throw std::invalid_argument("rs_params: standard RS needs 1 <= k < q-1");
            return {spec.q - 1, spec.k, spec.q - spec.k};
        case RsVariant::extended:
            if (spec.k < 1 || spec.k > spec.q)
                throw std::invalid_argument("rs_params: extended RS needs 1 <= k <= q");
            return {spec.q, spec.k, spec.q - spec.k + 1};
        case RsVariant::doubly_extended:
            if (spec.k < 1 || spec.k > spec.q)
                throw std::invalid_argument("rs_params: doubly-extended RS needs 1 <= k <= q");
            return {spec.q + 1, spec.k, spec.q - spec.k + 2};
    }
    throw std::logic_error("rs_params: unknown variant");
}

std::vector<FieldElem> rs_codeword(const RsSpec& spec, const FieldCtx& field,
                                   const std::vector<FieldElem>& message) {
    RsParams par = rs_params(spec);
    if (field.q() != spec.q) throw std::invalid_argument("rs_codeword: field size mismatch");
    if (message.size() != par.k) throw std::invalid_argument("rs_codeword: message length mismatch");

    auto eval = [&](FieldElem x) {
        FieldElem acc = 0;
        for (size_t i = message.size(); i-- > 0;) acc = field.add(field.mul(acc, x), message[i]);
        return acc;
    };

    std::vector<FieldElem> cw;
    cw.reserve(par.n);
    for (uint64_t i = 0; i + 1 < spec.q; ++i) cw.push_back(eval(field.exp(i)));
    if (spec.variant != RsVariant::standard) cw.push_back(message[0]);  // f(0)
    if (spec.variant == RsVariant::doubly_extended) cw.push_back(message[spec.k - 1]);
    return cw;
}

std::vector<FieldElem> rs_message_from_index(const RsSpec& spec, const BigUint& index) {
    std::vector<FieldElem> msg(spec.k, 0);
    BigUint cur = index;
    BigUint q(spec.q);
    for (uint64_t i = 0; i < spec.k; ++i) {
        auto [next, digit] = BigUint::divmod(cur, q);
        msg[i] = FieldElem(digit.is_zero() ? 0 : digit.to_u64());
        cur = std::move(next);
    }
    if (!cur.is_zero()) throw std::invalid_argument("rs_message_from_index: index out of range");
    return msg;
}

uint64_t exhaustive_min_distance(const RsSpec& spec, const FieldCtx& field, uint64_t max_codewords) {
    RsParams par = rs_params(spec);
    uint64_t total = 1;
    for (uint64_t i = 0; i < par.k; ++i) {
        if (total > max_codewords / spec.q) throw std::length_error("exhaustive_min_distance: code too large");
        total *= spec.q;
    }
    std::vector<FieldElem> msg(par.k, 0);
    uint64_t best = par.n + 1;
    for (uint64_t idx = 1; idx < total; ++idx) {
        // odometer increment in base q
        for (size_t i = 0; i < msg.size(); ++i) {
            if (++msg[i] == spec.q) {
                msg[i] = 0;
            } else {
                break;
            }
        }
        auto cw = rs_codeword(spec, field, msg);
        uint64_t w = 0;
        for (FieldElem c : cw) w += (c != 0);
        if (w < best) best = w;
    }
    return best;
}

}  // namespace cwid
