#include <doctest.h>

#include "lat2red/gen.hpp"
#include "lat2red/oracle.hpp"
#include "lat2red/reduce.hpp"
#include "support.hpp"

using namespace lat2red;

TEST_CASE("is_reduced") {
    CHECK(is_reduced(Basis{{1, 0}, {0, 1}}));
    CHECK_FALSE(is_reduced(Basis{{8, 3}, {5, -2}}));
    CHECK(is_reduced(Basis{{3, 5}, {5, -2}}));
    CHECK(sign_product(LVec(1, 2), LVec(3, 4)) == 1);
    CHECK(sign_product(LVec(1, 0), LVec(3, 4)) == 0);
    CHECK(gap_product(LVec(8, 3), LVec(5, -2)) == 1);
}

TEST_CASE("umtrans1 worked examples") {
    StepResult r = umtrans1(LVec(13, 7), LVec(5, 3));
    CHECK(r.basis == Basis{{5, 3}, {3, 1}});
    CHECK(r.q == 2);
    r = umtrans1(LVec(29, 7), LVec(5, 1));
    CHECK(r.basis == Basis{{5, 1}, {-1, 1}});
    CHECK(r.q == 6);
    CHECK_THROWS_AS(umtrans1(LVec(1, 0), LVec(1, 1)), precondition_error);
    CHECK_THROWS_AS(umtrans1(LVec(1, -1), LVec(1, 1)), precondition_error);
}

TEST_CASE("umtrans2 worked example") {
    StepResult r = umtrans2(LVec(8, 3), LVec(5, -2));
    CHECK(r.basis == Basis{{5, -2}, {3, 5}});
    CHECK(r.q == 1);
    CHECK(is_reduced(r.basis));
    CHECK_THROWS_AS(umtrans2(LVec(3, 5), LVec(5, -2)), precondition_error);
}

TEST_CASE("single steps round-trip through (0 1; 1 -q)") {
    testing::TestRng rng(10);
    int seen1 = 0, seen2 = 0;
    for (int i = 0; i < 3000; ++i) {
        const Basis B = rng.small_basis(1 << 12);
        StepResult r;
        if (sign_product(B.a, B.b) > 0) {
            r = umtrans1(B.a, B.b);
            ++seen1;
        } else if (gap_product(B.a, B.b) > 0) {
            r = umtrans2(B.a, B.b);
            ++seen2;
        } else {
            continue;
        }
        CHECK(apply(B, Unimodular{0, 1, 1, -r.q}) == r.basis);
        CHECK(apply(r.basis, unimodular_inverse(Unimodular{0, 1, 1, -r.q})) == B);
    }
    CHECK(seen1 > 100);
    CHECK(seen2 > 100);
}

TEST_CASE("umtrans1 shrinks b by half while the sign product stays positive") {
    testing::TestRng rng(11);
    int persisting = 0;
    for (int i = 0; i < 20000; ++i) {
        Basis B = rng.basis_bits(80);
        if (i % 2) B.b = BigInt(rng.range(1, 40)) * B.a + LVec(rng.signed_bits(40), rng.signed_bits(40));
        if (cmp_linf(B.a, B.b) < 0) std::swap(B.a, B.b);
        if (sign_product(B.a, B.b) <= 0) continue;
        const StepResult r = umtrans1(B.a, B.b);
        CHECK(r.basis.a == B.b);
        if (sign_product(r.basis.a, r.basis.b) <= 0) continue;
        ++persisting;
        CHECK(2 * linf(r.basis.b) < linf(B.a));
        CHECK(cmp_linf(r.basis.b, r.basis.a) < 0);
        CHECK(linf(r.basis.b) <= std::min(linf(B.a - B.b), linf(B.a + B.b)));
    }
    CHECK(persisting > 100);
}

TEST_CASE("umtrans2 halves the coordinate gap unless reduced") {
    testing::TestRng rng(12);
    int checked = 0;
    for (int i = 0; i < 20000; ++i) {
        Basis B = rng.basis_bits(80);
        if (cmp_linf(B.a, B.b) < 0) std::swap(B.a, B.b);
        if (sign_product(B.a, B.b) > 0 || gap_product(B.a, B.b) <= 0) continue;
        const StepResult r = umtrans2(B.a, B.b);
        if (is_reduced(r.basis)) continue;
        ++checked;
        CHECK(sign_product(r.basis.a, r.basis.b) <= 0);
        CHECK(2 * linf(r.basis.b) < linf(B.a));
        CHECK(cmp_linf(r.basis.b, r.basis.a) < 0);
        const BigInt before = abs(BigInt(abs(B.a.v1) - abs(B.a.v2)));
        const BigInt after = abs(BigInt(abs(r.basis.b.v1) - abs(r.basis.b.v2)));
        CHECK(2 * after < before);
    }
    CHECK(checked > 100);
}

TEST_CASE("cross_euc worked examples") {
    ReductionResult r = cross_euc(Basis{{4, 3}, {1, 1}});
    CHECK(r.basis == Basis{{1, 1}, {0, 1}});
    CHECK(r.lambda1 == 1);
    CHECK(r.lambda2 == 1);
    r = cross_euc(Basis{{1, 0}, {0, 1}});
    CHECK(r.basis == Basis{{1, 0}, {0, 1}});
    CHECK(r.lambda1 == 1);
    CHECK(r.lambda2 == 1);
    CHECK(r.steps == 0);
    CHECK_THROWS_AS(cross_euc(Basis{{1, 2}, {2, 4}}), precondition_error);
    CHECK_THROWS_AS(cross_euc_l2(Basis{{1, 2}, {2, 4}}), precondition_error);
}

TEST_CASE("extraction worked examples") {
    CHECK(extract_second_linf(Basis{{2, 1}, {-1, 2}}) == LVec(-1, 2));
    CHECK(extract_second_linf(Basis{{1, 0}, {0, 1}}) == LVec(0, 1));
    CHECK_THROWS_AS(extract_second_linf(Basis{{8, 3}, {5, -2}}), precondition_error);
    CHECK_THROWS_AS(extract_second_linf(Basis{{0, 3}, {1, 0}}), precondition_error);

    auto [u, v] = extract_l2_shortest(Basis{{2, 1}, {-1, 2}});
    CHECK(u == LVec(2, 1));
    CHECK(v == LVec(-1, 2));
    auto [u2, v2] = extract_l2_shortest(Basis{{1, 0}, {0, 1}});
    CHECK(u2 == LVec(1, 0));
    CHECK(v2 == LVec(0, 1));

    const ReductionResult r = cross_euc_l2(Basis{{1, 0}, {4, 1}});
    CHECK(r.lambda1 == 1);
    CHECK(r.lambda2 == 1);
    CHECK(r.norm_kind == NormKind::l2);
}

TEST_CASE("frozen minima of hand-picked bases") {
    // (basis, linf minima, squared l2 minima), computed by exhaustive search outside the library.
    struct Row {
        Basis B;
        long l1, l2, q1, q2;
    };
    const Row rows[] = {
        {{{2, 1}, {-1, 2}}, 2, 2, 5, 5},           {{{4, 3}, {1, 1}}, 1, 1, 1, 1},
        {{{13, 8}, {5, 3}}, 1, 1, 1, 1},           {{{7, -3}, {2, 5}}, 5, 7, 29, 58},
        {{{100, 37}, {-41, 13}}, 41, 59, 1850, 4293}, {{{31, -17}, {45, 22}}, 31, 39, 1250, 1717},
        {{{12, 7}, {7, 4}}, 1, 1, 1, 1},           {{{-9, 15}, {22, -37}}, 1, 2, 2, 5},
        {{{64, 1}, {1, 64}}, 63, 64, 4097, 4097},
    };
    for (const auto& row : rows) {
        CAPTURE(to_string(row.B));
        const ReductionResult r = cross_euc(row.B);
        CHECK(r.lambda1 == row.l1);
        CHECK(r.lambda2 == row.l2);
        const ReductionResult s = cross_euc_l2(row.B);
        CHECK(s.lambda1 == row.q1);
        CHECK(s.lambda2 == row.q2);
    }
}

TEST_CASE("cross_euc matches exhaustive search on random small bases") {
    testing::TestRng rng(13);
    for (int i = 0; i < 400; ++i) {
        const Basis B = rng.small_basis(12);
        CAPTURE(to_string(B));
        const auto [l1, l2] = testing::brute_minima(B, NormKind::linf, 40);
        const ReductionResult r = cross_euc(B);
        CHECK(r.lambda1 == l1);
        CHECK(r.lambda2 == l2);
        const auto [q1, q2] = testing::brute_minima(B, NormKind::l2, 40);
        const ReductionResult s = cross_euc_l2(B);
        CHECK(s.lambda1 == q1);
        CHECK(s.lambda2 == q2);
    }
}

TEST_CASE("extraction matches the enumeration oracle on reduced bases") {
    GenConfig cfg;
    cfg.seed = 14;
    int checked = 0;
    for (const Basis& B : generate(cfg, 2000)) {
        LVec a = B.a, b = B.b;
        detail::reduce_loops(a, b);
        const ReductionResult r = cross_euc(B);
        REQUIRE(r.reduced);
        CHECK(is_reduced(*r.reduced));
        const MinimaWitness w = enum_minima(B, NormKind::linf);
        CHECK(linf(r.basis.b) == w.lambda2);
        const MinimaWitness w2 = enum_minima(B, NormKind::l2);
        auto [u, v] = extract_l2_shortest(*r.reduced);
        CHECK(l2sq(u) == w2.lambda1);
        CHECK(l2sq(v) == w2.lambda2);
        ++checked;
    }
    CHECK(checked == 2000);
}

TEST_CASE("extract_l2_shortest: either choice of x achieves lambda2") {
    testing::TestRng rng(15);
    int checked = 0;
    for (int i = 0; i < 5000; ++i) {
        const Basis B = rng.small_basis(300);
        LVec a = B.a, b = B.b;
        detail::reduce_loops(a, b);
        const LVec cand[4] = {a, b, a + b, a - b};
        int best = 0;
        for (int k = 1; k < 4; ++k)
            if (l2sq(cand[k]) < l2sq(cand[best])) best = k;
        if (best < 2) continue;
        const LVec& u = cand[best];
        auto second = [&](const LVec& x) { return l2sq(x - round_nearest_div(inner(x, u), l2sq(u)) * u); };
        CHECK(second(a) == second(b));
        ++checked;
    }
    CHECK(checked > 20);
}

TEST_CASE("extract_second_linf ties: both candidates are optimal") {
    GenConfig cfg;
    cfg.seed = 16;
    int ties = 0;
    for (const Basis& B : generate(cfg, 3000)) {
        const ReductionResult r = cross_euc(B);
        const Basis& R = *r.reduced;
        if (sgn(det(R)) == 0 || cmp_linf(R.a, R.b) > 0) continue;
        const BigInt w = enum_minima(B, NormKind::linf).lambda2;
        // Both neighbours of the chosen multiple that tie with it must also reach lambda2.
        for (int d : {-1, 1}) {
            const LVec alt = r.basis.b + BigInt(d) * R.a;
            if (linf(alt) == linf(r.basis.b)) {
                ++ties;
                CHECK(linf(alt) == w);
            }
        }
    }
    CHECK(ties > 0);
}

TEST_CASE("cross_euc step count stays below log|a| + log|b| + 1") {
    testing::TestRng rng(17);
    for (int i = 0; i < 2000; ++i) {
        const Basis B = rng.basis_bits(static_cast<unsigned>(rng.range(8, 256)));
        LVec a = B.a, b = B.b;
        const std::uint64_t k = detail::reduce_loops(a, b);
        // k < log2(|a|) + log2(|b|) + 1  <=>  2^(k-1) < |a| * |b|
        if (k == 0) continue;
        CHECK((BigInt(1) << (k - 1)) < linf(B.a) * linf(B.b));
    }
}

TEST_CASE("outputs stay in the input lattice") {
    testing::TestRng rng(18);
    for (int i = 0; i < 1000; ++i) {
        const Basis B = rng.basis_bits(static_cast<unsigned>(rng.range(4, 200)));
        for (const ReductionResult& r : {cross_euc(B), cross_euc_l2(B)}) {
            CHECK(testing::same_lattice(B, r.basis));
            CHECK(testing::same_lattice(B, *r.reduced));
            CHECK(is_reduced(*r.reduced));
            CHECK(r.lambda1 <= r.lambda2);
        }
    }
}
