#include <doctest.h>

#include <cmath>

#include "lat2red/gen.hpp"
#include "lat2red/halfgcd.hpp"
#include "lat2red/oracle.hpp"
#include "support.hpp"

using namespace lat2red;

namespace {

bool hvec_precondition(const LVec& a, const LVec& b) {
    const std::size_t s = max_bit_size(a, b) / 2 + 1;
    return min_bit_size(a, b) > s && min_bit_size(a + b, a - b) > s;
}

// Random pairs meeting the hvec precondition; the second vector is sometimes a near multiple of the first so
// that long quotient runs occur.
std::pair<LVec, LVec> hvec_input(testing::TestRng& rng, unsigned bits) {
    for (;;) {
        LVec a(rng.exact_bits(bits), rng.exact_bits(bits));
        LVec b(rng.signed_bits(bits), rng.signed_bits(bits));
        if (rng.range(0, 1)) {
            const BigInt k = rng.signed_bits(static_cast<unsigned>(rng.range(1, 6)));
            b = k * a + LVec(rng.signed_bits(bits / 2), rng.signed_bits(bits / 2));
        }
        if (!is_reduced(a, b) && hvec_precondition(a, b)) return {a, b};
    }
}

void check_hvec_contract(const LVec& a, const LVec& b, const HVecOutput& r) {
    CHECK(apply(Basis{r.c, r.d}, r.M) == Basis{a, b});
    CHECK(abs(det(r.M)) == 1);
    const std::size_t s = max_bit_size(a, b) / 2 + 1;
    if (!is_reduced(r.c, r.d)) {
        CHECK(min_bit_size(r.c, r.d) > s);
        CHECK(min_bit_size(r.c - r.d, r.c + r.d) <= s);
    }
}

}  // namespace

TEST_CASE("split") {
    SplitParts p = split(LVec(13, -13), 2);
    CHECK(p.high == LVec(3, -4));
    CHECK(p.low == LVec(1, 3));
    p = split(LVec(-5, 9), 0);
    CHECK(p.high == LVec(-5, 9));
    CHECK(p.low == LVec(0, 0));

    testing::TestRng rng(20);
    for (int i = 0; i < 1000; ++i) {
        const LVec v(rng.signed_bits(200), rng.signed_bits(150));
        const std::size_t k = static_cast<std::size_t>(rng.range(0, 220));
        p = split(v, k);
        const BigInt scale = BigInt(1) << k;
        CHECK(scale * p.high + p.low == v);
        CHECK(sgn(p.low.v1) >= 0);
        CHECK(p.low.v1 < scale);
        CHECK(sgn(p.low.v2) >= 0);
        CHECK(p.low.v2 < scale);
    }
}

TEST_CASE("hvec on a reduced pair is the identity") {
    const HVecOutput r = hvec(LVec(3, 5), LVec(5, -2));
    CHECK(r.c == LVec(3, 5));
    CHECK(r.d == LVec(5, -2));
    CHECK(r.M == Unimodular::identity());
}

TEST_CASE("hvec rejects inputs outside its precondition") {
    CHECK_THROWS_AS(hvec(LVec(1000000, 999999), LVec(3, 2)), precondition_error);
    // a - b is tiny
    CHECK_THROWS_AS(hvec(LVec(1000000, 999999), LVec(999999, 999998)), precondition_error);
}

TEST_CASE("hvec contract on random 64-bit inputs") {
    testing::TestRng rng(21);
    for (int i = 0; i < 1000; ++i) {
        auto [a, b] = hvec_input(rng, 64);
        check_hvec_contract(a, b, hvec(a, b, nullptr, 8));
    }
}

TEST_CASE("hvec contract, loop bounds and depth on large inputs") {
    testing::TestRng rng(22);
    HVecStats total;
    for (int i = 0; i < 300; ++i) {
        const unsigned bits = static_cast<unsigned>(rng.range(100, 6000));
        auto [a, b] = hvec_input(rng, bits);
        HVecStats st;
        const HVecOutput r = hvec(a, b, &st, 16);
        check_hvec_contract(a, b, r);
        CHECK(st.max_loop1 <= 8);
        CHECK(st.max_loop2 <= 4);
        CHECK(st.max_depth <= static_cast<std::size_t>(std::ceil(std::log2(bits))) + 2);
        total.calls += st.calls;
    }
    CHECK(total.calls > 300);
}

TEST_CASE("hvec_sbp worked examples and errors") {
    ReductionResult r = hvec_sbp(Basis{{4, 3}, {1, 1}});
    CHECK(r.lambda1 == 1);
    CHECK(r.lambda2 == 1);
    r = hvec_sbp(Basis{{2, 1}, {-1, 2}});
    CHECK(r.steps == 0);
    CHECK(r.basis.b == extract_second_linf(Basis{{2, 1}, {-1, 2}}));
    CHECK_THROWS_AS(hvec_sbp(Basis{{3, 6}, {1, 2}}), precondition_error);
}

TEST_CASE("hvec_sbp agrees with the enumeration oracle") {
    GenConfig cfg;
    cfg.seed = 23;
    for (const Basis& B : generate(cfg, 1500)) {
        for (NormKind k : {NormKind::linf, NormKind::l2}) {
            const MinimaWitness w = enum_minima(B, k);
            const ReductionResult r = hvec_sbp(B, k, nullptr, 4);
            CHECK(r.lambda1 == w.lambda1);
            CHECK(r.lambda2 == w.lambda2);
        }
    }
}

TEST_CASE("hvec_sbp agrees with cross_euc on 4096-bit bases") {
    testing::TestRng rng(24);
    for (int i = 0; i < 60; ++i) {
        Basis B = rng.basis_bits(4096);
        if (i % 2) {
            // nearly dependent columns
            B.b = B.a + LVec(rng.signed_bits(1000), rng.signed_bits(1000));
            if (sgn(det(B)) == 0) continue;
        }
        HVecStats st;
        const ReductionResult h = hvec_sbp(B, NormKind::linf, &st);
        const ReductionResult c = cross_euc(B);
        CHECK(h.lambda1 == c.lambda1);
        CHECK(h.lambda2 == c.lambda2);
        CHECK(testing::same_lattice(B, h.basis));
        CHECK(st.max_loop1 <= 8);
        CHECK(st.max_loop2 <= 4);
        const ReductionResult h2 = hvec_sbp(B, NormKind::l2);
        const ReductionResult c2 = cross_euc_l2(B);
        CHECK(h2.lambda1 == c2.lambda1);
        CHECK(h2.lambda2 == c2.lambda2);
    }
}

TEST_CASE("int_hgcd") {
    CHECK_THROWS_AS(int_hgcd(5, 5), precondition_error);
    CHECK_THROWS_AS(int_hgcd(5, 0), precondition_error);
    const HgcdOutput t = int_hgcd(1000, 1);
    CHECK(t.a == 1000);
    CHECK(t.b == 1);
    CHECK(t.M == Unimodular::identity());

    testing::TestRng rng(25);
    for (int i = 0; i < 10000; ++i) {
        const unsigned bits = static_cast<unsigned>(i < 9000 ? rng.range(2, 600) : rng.range(600, 5000));
        BigInt a = abs(rng.exact_bits(bits)), b = abs(rng.signed_bits(bits));
        if (sgn(b) == 0 || a == b) continue;
        if (a < b) std::swap(a, b);
        const HgcdOutput r = int_hgcd(a, b, 32);
        CHECK(testing::classical_gcd(r.a, r.b) == testing::classical_gcd(a, b));
        CHECK(r.M.m11 * r.a + r.M.m12 * r.b == a);
        CHECK(r.M.m21 * r.a + r.M.m22 * r.b == b);
        CHECK(abs(det(r.M)) == 1);
        const std::size_t s = bit_size(a) / 2 + 1;
        CHECK(bit_size(r.b) <= s);
        // Below the threshold there is nothing to straddle.
        if (bit_size(a) > s) CHECK((bit_size(r.a) > s || sgn(r.b) == 0));
    }
}

TEST_CASE("extended gcd") {
    // (a, b, g, x, y) with the normalized Bezout pair, computed outside the library.
    struct Row {
        long a, b, g, x, y;
    };
    const Row rows[] = {{240, 46, 2, 14, -73}, {46, 240, 2, 47, -9}, {-240, 46, 2, 9, 47}, {17, 5, 1, 3, -10},
                        {0, 5, 5, 0, 1},       {5, 0, 5, 1, 0},      {12, -18, 6, 2, 1}};
    for (const auto& row : rows) {
        CAPTURE(row.a);
        CAPTURE(row.b);
        for (const XgcdResult& r : {xgcd_classical(row.a, row.b), xgcd_hgcd(row.a, row.b)}) {
            CHECK(r.g == row.g);
            CHECK(r.x == row.x);
            CHECK(r.y == row.y);
        }
    }
    const XgcdResult z = xgcd_hgcd(0, 0);
    CHECK(z.g == 0);

    testing::TestRng rng(26);
    for (int i = 0; i < 1500; ++i) {
        const unsigned bits = static_cast<unsigned>(rng.range(1, 6000));
        const BigInt a = rng.signed_bits(bits), b = rng.signed_bits(static_cast<unsigned>(rng.range(1, bits)));
        const XgcdResult c = xgcd_classical(a, b), h = xgcd_hgcd(a, b);
        CHECK(c.g == testing::classical_gcd(a, b));
        CHECK(c.x * a + c.y * b == c.g);
        CHECK(h.g == c.g);
        CHECK(h.x == c.x);
        CHECK(h.y == c.y);
    }
}
