#include "doctest.h"

#include <vector>

#include "cwid/finite_field.hpp"

using namespace cwid;

TEST_SUITE_BEGIN("finite_field");

namespace {

// independent irreducibility check: a monic poly of degree m over GF(p) is
// irreducible iff it has no monic divisor of degree 1..m-1
bool divides(const std::vector<uint32_t>& g, std::vector<uint32_t> f, uint64_t p) {
    int dg = int(g.size()) - 1;
    for (int i = int(f.size()) - 1; i >= dg; --i) {
        uint64_t c = f[size_t(i)];
        if (!c) continue;
        for (int j = 0; j <= dg; ++j)
            f[size_t(i - dg + j)] = uint32_t((f[size_t(i - dg + j)] + p - (c * g[size_t(j)]) % p) % p);
    }
    for (int i = 0; i < dg; ++i)
        if (f[size_t(i)]) return false;
    return true;
}

bool brute_irreducible(const std::vector<uint32_t>& f, uint64_t p) {
    int m = int(f.size()) - 1;
    for (int d = 1; d < m; ++d) {
        uint64_t count = 1;
        for (int i = 0; i < d; ++i) count *= p;
        for (uint64_t t = 0; t < count; ++t) {
            std::vector<uint32_t> g(size_t(d) + 1, 0);
            uint64_t v = t;
            for (int i = 0; i < d; ++i) {
                g[size_t(i)] = uint32_t(v % p);
                v /= p;
            }
            g[size_t(d)] = 1;
            if (divides(g, f, p)) return false;
        }
    }
    return true;
}

}  // namespace

TEST_CASE("GF(2) has alpha = 1") {
    FieldCtx f = make_field(2, 1);
    CHECK(f.q() == 2);
    CHECK(f.alpha() == 1);
    CHECK(f.mul(1, 1) == 1);
    CHECK(f.add(1, 1) == 0);
}

TEST_CASE("GF(5) arithmetic and discrete logs") {
    FieldCtx f = make_field(5, 1);
    CHECK(f.alpha() == 2);  // order 4: 2,4,3,1
    CHECK(f.mul(2, 3) == 1);
    CHECK(f.inv(4) == 4);
    CHECK(f.log(1) == 0);
    CHECK(f.log(f.alpha()) == 1);
    CHECK(f.log(4) == 2);
    CHECK_THROWS(f.inv(0));
    CHECK_THROWS(f.log(0));
}

TEST_CASE("GF(16) is built on the lowest-lexicographic irreducible modulus") {
    FieldCtx f = make_field(2, 4);
    CHECK(f.q() == 16);
    CHECK(f.modulus() == std::vector<uint32_t>{1, 1, 0, 0, 1});  // x^4 + x + 1
    CHECK(brute_irreducible(f.modulus(), 2));
    CHECK(f.pow(f.alpha(), 15) == 1);
    for (uint64_t r : {3ull, 5ull}) CHECK(f.pow(f.alpha(), 15 / r) != 1);
    for (uint64_t k = 0; k < 15; ++k) CHECK(f.log(f.exp(k)) == k);
}

TEST_CASE("exhaustive field axioms for q <= 64") {
    struct Case { uint64_t p; int m; };
    for (auto [p, m] : {Case{2, 6}, Case{3, 3}, Case{5, 2}, Case{7, 2}, Case{61, 1}}) {
        FieldCtx f = make_field(p, m);
        const uint64_t q = f.q();
        for (uint64_t a = 0; a < q; ++a) {
            for (uint64_t b = 0; b < q; ++b) {
                CHECK(f.mul(FieldElem(a), FieldElem(b)) == f.mul(FieldElem(b), FieldElem(a)));
                CHECK(f.add(FieldElem(a), FieldElem(b)) == f.add(FieldElem(b), FieldElem(a)));
            }
        }
        for (uint64_t a = 1; a < q; ++a) {
            CHECK(f.mul(FieldElem(a), f.inv(FieldElem(a))) == 1);
            CHECK(f.pow(FieldElem(a), q - 1) == 1);
            CHECK(f.exp(f.log(FieldElem(a))) == a);
        }
        for (uint64_t a = 0; a < q; ++a) {
            for (uint64_t b = 0; b < q; ++b) {
                for (uint64_t c = 0; c < q; ++c) {
                    bool assoc = f.mul(f.mul(FieldElem(a), FieldElem(b)), FieldElem(c)) ==
                                 f.mul(FieldElem(a), f.mul(FieldElem(b), FieldElem(c)));
                    bool distr = f.mul(FieldElem(a), f.add(FieldElem(b), FieldElem(c))) ==
                                 f.add(f.mul(FieldElem(a), FieldElem(b)),
                                       f.mul(FieldElem(a), FieldElem(c)));
                    if (!assoc || !distr) {
                        CAPTURE(a);
                        CAPTURE(b);
                        CAPTURE(c);
                        REQUIRE(assoc);
                        REQUIRE(distr);
                    }
                }
            }
        }
    }
}

TEST_CASE("construction preconditions") {
    CHECK_THROWS(make_field(4, 1));   // not prime
    CHECK_THROWS(make_field(6, 2));
    CHECK_THROWS(make_field(2, 21));  // past the table cap
    CHECK_THROWS(make_field(2, 0));
}

TEST_CASE("user-supplied modulus is validated and usable") {
    // x^4 + x^3 + 1 is the other degree-4 binary irreducible trinomial
    FieldCtx f = make_field(2, 4, std::vector<uint32_t>{1, 0, 0, 1, 1});
    CHECK(f.q() == 16);
    CHECK(f.pow(f.alpha(), 15) == 1);
    for (uint64_t a = 1; a < 16; ++a) CHECK(f.mul(FieldElem(a), f.inv(FieldElem(a))) == 1);
    // (x + 1)^4 = x^4 + 1 over GF(2) is reducible
    CHECK_THROWS(make_field(2, 4, std::vector<uint32_t>{1, 0, 0, 0, 1}));
    CHECK_THROWS(make_field(2, 4, std::vector<uint32_t>{1, 1, 0, 0, 2}));  // not monic over GF(2)
}

TEST_CASE("prime powers") {
    CHECK(is_prime_power(23) == std::pair<uint64_t, int>{23, 1});
    CHECK(is_prime_power(25) == std::pair<uint64_t, int>{5, 2});
    CHECK(!is_prime_power(6));
    CHECK(is_prime_power(19681) == std::pair<uint64_t, int>{19681, 1});  // 3^9 - 2, prime
    CHECK(is_prime_power(64) == std::pair<uint64_t, int>{2, 6});
    CHECK_THROWS(is_prime_power(1));
}

TEST_CASE("prime-power yes/no lists for p^m - 2") {
    auto val = [](uint64_t p, int m) {
        uint64_t q = 1;
        for (int i = 0; i < m; ++i) q *= p;
        return q - 2;
    };
    // pairs that do yield prime powers
    struct Case { uint64_t p; int m; };
    for (auto [p, m] : {Case{2, 2}, Case{3, 2}, Case{3, 3}, Case{3, 4}, Case{3, 5}, Case{3, 6},
                        Case{3, 9}, Case{7, 2}, Case{13, 2}, Case{19, 2}}) {
        CAPTURE(p);
        CAPTURE(m);
        CHECK(is_prime_power(val(p, m)).has_value());
    }
    // pairs that do not
    for (auto [p, m] : {Case{2, 3}, Case{2, 5}, Case{3, 7}, Case{3, 8}, Case{5, 3}, Case{11, 2},
                        Case{23, 3}}) {
        CAPTURE(p);
        CAPTURE(m);
        CHECK(!is_prime_power(val(p, m)).has_value());
    }
}

TEST_SUITE_END();
