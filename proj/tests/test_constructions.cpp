#include "doctest.h"

#include <set>
#include <string>

#include "cwid/constructions.hpp"

using namespace cwid;

TEST_SUITE_BEGIN("constructions");

namespace {

std::string symbols_str(const PrimeSequence& s) {
    std::string out;
    for (uint32_t v : s.symbols) out += std::to_string(v);
    return out;
}

std::string bits_str(const CwCodeword& cw) {
    std::string out(size_t(cw.blocklength), '0');
    for (int64_t s : cw.support) out[size_t(s)] = '1';
    return out;
}

}  // namespace

TEST_CASE("prime sequences match the classical tables") {
    auto s5 = prime_sequences(5);
    REQUIRE(s5.size() == 5);
    CHECK(symbols_str(s5[0]) == "00000");
    CHECK(symbols_str(s5[1]) == "01234");
    CHECK(symbols_str(s5[2]) == "02413");
    CHECK(symbols_str(s5[3]) == "03142");
    CHECK(symbols_str(s5[4]) == "04321");

    auto s2 = prime_sequences(2);
    CHECK(symbols_str(s2[0]) == "00");
    CHECK(symbols_str(s2[1]) == "01");

    auto s3 = prime_sequences(3);
    CHECK(symbols_str(s3[0]) == "000");
    CHECK(symbols_str(s3[1]) == "012");
    CHECK(symbols_str(s3[2]) == "021");

    CHECK_THROWS(prime_sequences(4));
}

TEST_CASE("one-hot encoding") {
    auto s5 = prime_sequences(5);
    CwCodeword cw = one_hot(s5[1].symbols, 5);
    CHECK(bits_str(cw) == "1000001000001000001000001");
    CHECK(cw.support == std::vector<int64_t>{0, 6, 12, 18, 24});

    CHECK(bits_str(one_hot({0}, 2)) == "10");
    CHECK(one_hot({2, 1}, 3).support == std::vector<int64_t>{2, 4});
    CHECK_THROWS(one_hot({3}, 3));
}

TEST_CASE("modified prime families") {
    CwcFamily f5 = modified_prime_cwc(5);
    CHECK(f5.blocklength == 20);
    CHECK(f5.codewords.size() == 5);
    CHECK(f5.codewords[0].support == std::vector<int64_t>{0, 5, 10, 15});   // (0000)
    CHECK(f5.codewords[1].support == std::vector<int64_t>{1, 7, 13, 19});   // (1234)
    CHECK(verify_cwc(f5).pass);

    CwcFamily f2 = modified_prime_cwc(2);
    CHECK(f2.blocklength == 2);
    CHECK(f2.codewords[0].support == std::vector<int64_t>{0});
    CHECK(f2.codewords[1].support == std::vector<int64_t>{1});
    CHECK(verify_cwc(f2).pass);

    CwcFamily f7 = modified_prime_cwc(7);
    VerificationReport rep = verify_cwc(f7);
    CHECK(rep.pass);
    CHECK(rep.S == 42);
    CHECK(rep.N == 7);
    CHECK(rep.W_min == 6);
    CHECK(rep.K_actual == 0);
}

TEST_CASE("zero-overlap property of modified prime sequences holds for every prime up to 100") {
    for (uint64_t p = 2; p <= 100; ++p) {
        if (!is_prime(p)) continue;
        CAPTURE(p);
        VerificationReport rep = verify_cwc(modified_prime_cwc(p));
        CHECK(rep.pass);
        CHECK(rep.K_actual == 0);
    }
}

TEST_CASE("unmodified one-hot prime sequences overlap exactly once on every pair") {
    for (uint64_t p : {3ull, 5ull, 7ull, 11ull}) {
        CwcFamily fam = prime_sequence_cwc(p);
        for (size_t i = 0; i < fam.codewords.size(); ++i)
            for (size_t j = i + 1; j < fam.codewords.size(); ++j)
                CHECK(cross_correlation(fam.codewords[i], fam.codewords[j]) == 1);
        VerificationReport rep = verify_cwc(fam);
        CHECK(rep.pass);
        CHECK(rep.K_attained);
    }
}

TEST_CASE("norm-equation family at (2,2)") {
    CwcFamily fam = construction2_cwc(2, 2);
    CHECK(fam.blocklength == 15);
    CHECK(fam.codewords.size() == 2);
    for (const auto& cw : fam.codewords) CHECK(cw.weight() == 5);
    VerificationReport rep = verify_cwc(fam);
    CHECK(rep.pass);
    CHECK(rep.K_actual == 0);

    // independent re-derivation: solve the equation by scanning the field
    FieldCtx f = make_field(2, 4);
    for (size_t idx = 0; idx < fam.codewords.size(); ++idx) {
        uint64_t i = idx + 1;
        std::set<int64_t> expected;
        for (uint64_t x = 1; x < f.q(); ++x) {
            FieldElem lhs = f.pow(f.sub(FieldElem(x), 1), 5);
            if (lhs == f.exp(i * 5)) expected.insert(int64_t(f.log(FieldElem(x))));
        }
        std::set<int64_t> got(fam.codewords[idx].support.begin(), fam.codewords[idx].support.end());
        CHECK(got == expected);
    }
}

TEST_CASE("norm-equation family parameters at (3,2) and (5,2)") {
    CwcFamily f32 = construction2_cwc(3, 2);
    VerificationReport r32 = verify_cwc(f32);
    CHECK(r32.pass);
    CHECK(r32.S == 80);
    CHECK(r32.N == 7);
    CHECK(r32.W_min == 10);
    CHECK(r32.K_actual == 0);

    CwcFamily f52 = construction2_cwc(5, 2);
    VerificationReport r52 = verify_cwc(f52);
    CHECK(r52.pass);
    CHECK(r52.S == 624);
    CHECK(r52.N == 23);
    CHECK(r52.W_min == 26);
    CHECK(r52.K_actual == 0);
    CHECK(is_prime(23));  // enables outer codes over GF(23)
}

TEST_CASE("norm-equation supports are disjoint and cover the expected count") {
    for (auto [p, m] : {std::pair<uint64_t, int>{2, 2}, {3, 2}, {2, 3}, {5, 2}}) {
        CAPTURE(p);
        CAPTURE(m);
        CwcFamily fam = construction2_cwc(p, m);
        std::set<int64_t> all;
        size_t total = 0;
        for (const auto& cw : fam.codewords) {
            all.insert(cw.support.begin(), cw.support.end());
            total += cw.support.size();
        }
        CHECK(all.size() == total);  // pairwise disjoint
        uint64_t q = 1;
        for (int i = 0; i < m; ++i) q *= p;
        CHECK(total == (q - 2) * (q + 1));
    }
}

TEST_CASE("cyclic correlation claims of the source optical codes") {
    auto c22 = cyclic_correlations(construction2_cwc(2, 2));
    CHECK(c22.max_auto <= 2);
    CHECK(c22.max_cross <= 2);
    auto c32 = cyclic_correlations(construction2_cwc(3, 2));
    CHECK(c32.max_auto <= 2);
    CHECK(c32.max_cross <= 2);

    auto seqs = prime_sequences(7);
    CwcFamily ooc;
    ooc.blocklength = 49;
    for (size_t j = 1; j < seqs.size(); ++j) ooc.codewords.push_back(one_hot(seqs[j].symbols, 7));
    ooc.claimed = CodeParams{49, CodeSize(6), 7, 1};
    auto cp = cyclic_correlations(ooc);
    CHECK(cp.max_auto <= 6);
    CHECK(cp.max_cross <= 2);
}

TEST_CASE("truncation keeps a deterministic prefix") {
    CwcFamily full = construction2_cwc(2, 3);
    CHECK(full.codewords.size() == 6);  // 2^3 - 2 is not a prime power
    CwcFamily cut = construction2_truncated(2, 3, 5);
    CHECK(cut.codewords.size() == 5);
    for (size_t i = 0; i < 5; ++i) CHECK(cut.codewords[i].support == full.codewords[i].support);
    CHECK(cut.claimed.N.equals_u64(5));
    CHECK(verify_cwc(cut).pass);

    CwcFamily same = construction2_truncated(3, 2, 7);
    CHECK(same.codewords.size() == 7);
    CHECK_THROWS(construction2_truncated(2, 3, 7));
}

TEST_CASE("pulse-position family") {
    CwcFamily f2 = ppm_cwc(2);
    CHECK(f2.codewords[0].support == std::vector<int64_t>{0});
    CHECK(f2.codewords[1].support == std::vector<int64_t>{1});

    CwcFamily f23 = ppm_cwc(23);
    VerificationReport rep = verify_cwc(f23);
    CHECK(rep.pass);
    CHECK(rep.S == 23);
    CHECK(rep.N == 23);
    CHECK(rep.W_max == 1);
    CHECK(rep.K_actual == 0);

    CHECK(verify_cwc(ppm_cwc(5)).K_actual == 0);
    CHECK_THROWS(ppm_cwc(1));
}

TEST_SUITE_END();
