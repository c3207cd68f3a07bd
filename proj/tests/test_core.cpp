#include <doctest.h>

#include "lat2red/core.hpp"
#include "support.hpp"

using namespace lat2red;

TEST_CASE("bit_size") {
    CHECK(bit_size(BigInt(0)) == 0);
    CHECK(bit_size(BigInt(7)) == 3);
    CHECK(bit_size(BigInt(8)) == 4);
    CHECK(bit_size(BigInt(-8)) == 4);
    CHECK(bit_size(LVec(-300, 5)) == 9);
    CHECK(min_bit_size(LVec(1, 2), LVec(1000, 1)) == 2);
    CHECK(max_bit_size(LVec(1, 2), LVec(1000, 1)) == 10);
}

TEST_CASE("bit_size brackets |x| + 1") {
    testing::TestRng rng(1);
    for (int i = 0; i < 2000; ++i) {
        BigInt x = rng.signed_bits(static_cast<unsigned>(rng.range(1, 300)));
        if (sgn(x) == 0) continue;
        const std::size_t n = bit_size(x);
        const BigInt lo = BigInt(1) << (n - 1);
        const BigInt hi = BigInt(1) << n;
        CHECK(lo <= abs(x) + 1);
        CHECK(abs(x) + 1 <= hi);
    }
}

TEST_CASE("division conventions") {
    CHECK(trunc_div(7, 2) == 3);
    CHECK(trunc_div(-7, 2) == -3);
    CHECK(trunc_div(-7, -2) == 3);
    CHECK(floor_div(-7, 2) == -4);
    CHECK(ceil_div(-7, 2) == -3);
    CHECK(round_nearest_div(5, 2) == 3);
    CHECK(round_nearest_div(-5, 2) == -2);
    CHECK(round_nearest_div(7, -2) == -3);
    CHECK_THROWS(trunc_div(1, 0));
    CHECK_THROWS(floor_div(1, 0));
    CHECK_THROWS(ceil_div(1, 0));
    CHECK_THROWS(round_nearest_div(1, 0));
}

TEST_CASE("division properties") {
    testing::TestRng rng(2);
    for (int i = 0; i < 5000; ++i) {
        const BigInt a = rng.signed_bits(static_cast<unsigned>(rng.range(1, 200)));
        BigInt b = rng.signed_bits(static_cast<unsigned>(rng.range(1, 120)));
        if (sgn(b) == 0) b = 3;
        const BigInt q = trunc_div(a, b);
        const BigInt r = a - q * b;
        CHECK(abs(r) < abs(b));
        CHECK(sgn(r) * sgn(a) >= 0);
        const BigInt f = floor_div(a, b), c = ceil_div(a, b), n = round_nearest_div(a, b);
        CHECK(f <= n);
        CHECK(n <= c);
        CHECK(c - f <= 1);
        // nearest: |a/b - n| <= 1/2, i.e. |2a - 2nb| <= |b|
        CHECK(abs(2 * a - 2 * n * b) <= abs(b));
    }
}

TEST_CASE("rounding ties give vectors of equal norm") {
    testing::TestRng rng(3);
    int ties = 0;
    for (int i = 0; i < 20000 && ties < 200; ++i) {
        const LVec a(rng.range(-40, 40), rng.range(-40, 40));
        const LVec b(rng.range(-400, 400), rng.range(-400, 400));
        if (a.is_zero()) continue;
        const BigInt num = inner(a, b), den = l2sq(a);
        if (!mpz_divisible_p(BigInt(2 * num).get_mpz_t(), den.get_mpz_t()) ||
            mpz_divisible_p(num.get_mpz_t(), den.get_mpz_t()))
            continue;
        ++ties;
        const BigInt mu = round_nearest_div(num, den);
        CHECK(l2sq(b - mu * a) == l2sq(b - (mu - 1) * a));
    }
    CHECK(ties > 0);
}

TEST_CASE("sign and norms") {
    CHECK(sgn_pm(BigInt(0)) == 1);
    CHECK(sgn_pm(BigInt(5)) == 1);
    CHECK(sgn_pm(BigInt(-5)) == -1);
    CHECK(linf(LVec(3, -5)) == 5);
    CHECK(l2sq(LVec(3, -5)) == 34);
    CHECK(inner(LVec(3, -5), LVec(2, 1)) == 1);
    CHECK(det(Basis{{2, 1}, {-1, 2}}) == 5);
    CHECK(cmp_linf(LVec(3, -5), LVec(-5, 0)) == 0);
    CHECK(cmp_linf(LVec(3, -5), LVec(6, 0)) < 0);
}

TEST_CASE("unimodular algebra") {
    const Unimodular I = Unimodular::identity();
    CHECK(unimodular_inverse(I) == I);
    const BigInt q = 7;
    CHECK(unimodular_inverse(Unimodular::quotient(q)) == Unimodular{0, 1, 1, -7});
    CHECK_THROWS_AS(unimodular_inverse(Unimodular{2, 0, 0, 1}), precondition_error);
    CHECK(is_unimodular(Unimodular::quotient(q)));
    CHECK_FALSE(is_unimodular(Unimodular{2, 1, 1, 2}));

    Unimodular M;
    push_quotient_left(M, 3);
    CHECK(M == Unimodular::quotient(3));
    push_quotient_left(M, 2);
    CHECK(M == compose(Unimodular::quotient(2), Unimodular::quotient(3)));
}

TEST_CASE("unimodular properties") {
    testing::TestRng rng(4);
    auto random_unimodular = [&] {
        Unimodular M;
        const int k = static_cast<int>(rng.range(0, 12));
        for (int i = 0; i < k; ++i) push_quotient_left(M, rng.range(-50, 50));
        return M;
    };
    for (int i = 0; i < 500; ++i) {
        const Basis B = rng.basis_bits(64);
        const Unimodular M1 = random_unimodular(), M2 = random_unimodular();
        CHECK(is_unimodular(M1));
        CHECK(apply(apply(B, M1), M2) == apply(B, compose(M1, M2)));
        CHECK(det(apply(B, M1)) == det(B) * det(M1));
        CHECK(apply(apply(B, unimodular_inverse(M1)), M1) == B);
        CHECK(unimodular_inverse(unimodular_inverse(M1)) == M1);
        CHECK(compose(M1, unimodular_inverse(M1)) == Unimodular::identity());
    }
}

TEST_CASE("lattice coordinates") {
    const Basis B{{2, 1}, {-1, 2}};
    BigInt z1, z2;
    REQUIRE(lattice_coordinates(B, LVec(1, 3), z1, z2));
    CHECK(z1 == 1);
    CHECK(z2 == 1);
    CHECK_FALSE(lattice_coordinates(B, LVec(1, 0), z1, z2));
    CHECK_THROWS(lattice_coordinates(Basis{{1, 2}, {2, 4}}, LVec(1, 2), z1, z2));
}

TEST_CASE("to_string") {
    CHECK(to_string(LVec(3, -5)) == "(3, -5)");
}
