#include "lat2red/oracle.hpp"

#include <algorithm>
#include <cmath>
#include <tuple>

namespace lat2red {

namespace {

using i128 = __int128;

// Entries above this magnitude are outside what the enumeration is meant for.
constexpr std::int64_t kMaxEntry = std::int64_t{1} << 40;

struct SmallBasis {
    std::int64_t a1, a2, b1, b2;
    i128 det;
    i128 sum;
};

std::optional<SmallBasis> to_small(const Basis& B) {
    const BigInt* xs[4] = {&B.a.v1, &B.a.v2, &B.b.v1, &B.b.v2};
    std::int64_t v[4];
    for (int i = 0; i < 4; ++i) {
        if (!xs[i]->fits_slong_p() || abs(*xs[i]) > kMaxEntry) return std::nullopt;
        v[i] = xs[i]->get_si();
    }
    SmallBasis s{v[0], v[1], v[2], v[3], 0, 0};
    s.det = static_cast<i128>(s.a1) * s.b2 - static_cast<i128>(s.a2) * s.b1;
    for (std::int64_t x : v) s.sum += x < 0 ? -static_cast<i128>(x) : x;
    return s;
}

i128 iabs(i128 x) { return x < 0 ? -x : x; }

i128 floor_div128(i128 a, i128 b) {
    i128 q = a / b;
    if ((a % b != 0) && ((a < 0) != (b < 0))) --q;
    return q;
}

i128 ceil_div128(i128 a, i128 b) { return -floor_div128(-a, b); }

i128 isqrt_ceil(i128 x) {
    i128 r = static_cast<i128>(std::sqrt(static_cast<long double>(x)));
    while (r * r > x) --r;
    while (r * r < x) ++r;
    return r;
}

i128 norm_of(i128 x, i128 y, NormKind k) {
    if (k == NormKind::linf) return std::max(iabs(x), iabs(y));
    return x * x + y * y;
}

// Integer length bound R with |v_i| <= R for every v of norm at most `norm_value`.
i128 linear_radius(i128 norm_value, NormKind k) { return k == NormKind::linf ? norm_value : isqrt_ceil(norm_value); }

i128 coefficient_bound(const SmallBasis& s, i128 radius) { return ceil_div128(radius * s.sum, iabs(s.det)); }

struct Best {
    bool found = false;
    i128 norm = 0;
    std::int64_t z1 = 0, z2 = 0;
};

auto tie_key(std::int64_t z1, std::int64_t z2) { return std::make_tuple(std::llabs(z1), std::llabs(z2), z1, z2); }

// Visits every (z1, z2) != 0 with |z| <= zmax and |z1 a_i + z2 b_i| <= radius, keeping the smallest norm
// among the vectors accepted by `accept`.
template <class Accept>
Best enumerate(const SmallBasis& s, NormKind k, i128 radius, i128 zmax, const Accept& accept) {
    Best best;
    for (i128 z1 = -zmax; z1 <= zmax; ++z1) {
        i128 lo = -zmax, hi = zmax;
        const i128 base[2] = {z1 * s.a1, z1 * s.a2};
        const i128 bs[2] = {s.b1, s.b2};
        for (int i = 0; i < 2; ++i) {
            if (bs[i] == 0) {
                if (iabs(base[i]) > radius) lo = 1, hi = 0;
                continue;
            }
            // -radius <= base + z2 * b <= radius
            i128 l = -radius - base[i], h = radius - base[i];
            i128 zl, zh;
            if (bs[i] > 0) {
                zl = ceil_div128(l, bs[i]);
                zh = floor_div128(h, bs[i]);
            } else {
                zl = ceil_div128(h, bs[i]);
                zh = floor_div128(l, bs[i]);
            }
            lo = std::max(lo, zl);
            hi = std::min(hi, zh);
        }
        for (i128 z2 = lo; z2 <= hi; ++z2) {
            if (z1 == 0 && z2 == 0) continue;
            const i128 x = base[0] + z2 * s.b1;
            const i128 y = base[1] + z2 * s.b2;
            if (!accept(x, y)) continue;
            const i128 nv = norm_of(x, y, k);
            const auto zz1 = static_cast<std::int64_t>(z1), zz2 = static_cast<std::int64_t>(z2);
            if (!best.found || nv < best.norm || (nv == best.norm && tie_key(zz1, zz2) < tie_key(best.z1, best.z2))) {
                best = {true, nv, zz1, zz2};
            }
        }
    }
    return best;
}

BigInt to_big(i128 x) {
    const bool neg = x < 0;
    unsigned __int128 u = neg ? -static_cast<unsigned __int128>(x) : static_cast<unsigned __int128>(x);
    BigInt r = static_cast<unsigned long>(static_cast<std::uint64_t>(u >> 64));
    r <<= 64;
    r += static_cast<unsigned long>(static_cast<std::uint64_t>(u));
    return neg ? BigInt(-r) : r;
}

LVec combine(const SmallBasis& s, std::int64_t z1, std::int64_t z2) {
    return {to_big(static_cast<i128>(z1) * s.a1 + static_cast<i128>(z2) * s.b1),
            to_big(static_cast<i128>(z1) * s.a2 + static_cast<i128>(z2) * s.b2)};
}

}  // namespace

std::optional<std::int64_t> enumeration_bound(const Basis& B, NormKind norm) {
    auto s = to_small(B);
    if (!s || s->det == 0) return std::nullopt;
    const i128 r = std::min(linear_radius(norm_of(s->a1, s->a2, norm), norm),
                            linear_radius(norm_of(s->b1, s->b2, norm), norm));
    return static_cast<std::int64_t>(coefficient_bound(*s, r));
}

MinimaWitness enum_minima(const Basis& B, NormKind norm) {
    auto s = to_small(B);
    if (!s) throw precondition_error("oracle: entries too large for enumeration");
    if (s->det == 0) throw precondition_error("zero determinant");
    const i128 na = norm_of(s->a1, s->a2, norm), nb = norm_of(s->b1, s->b2, norm);
    const i128 r1 = linear_radius(std::min(na, nb), norm);
    const i128 z_1 = coefficient_bound(*s, r1);
    if (z_1 > kOracleMaxBound) throw precondition_error("oracle: enumeration bound exceeds the cap");

    Best first = enumerate(*s, norm, r1, z_1, [](i128, i128) { return true; });
    const LVec v1 = combine(*s, first.z1, first.z2);
    const i128 x1 = static_cast<i128>(first.z1) * s->a1 + static_cast<i128>(first.z2) * s->b1;
    const i128 y1 = static_cast<i128>(first.z1) * s->a2 + static_cast<i128>(first.z2) * s->b2;

    // One of the input columns is independent of v1; Minkowski's second theorem caps lambda2 as well.
    i128 bound2 = (x1 * s->a2 - y1 * s->a1 != 0) ? na : nb;
    if (x1 * s->b2 - y1 * s->b1 != 0) bound2 = std::min(bound2, nb);
    i128 r2 = linear_radius(bound2, norm);
    const i128 adet = iabs(s->det);
    if (norm == NormKind::linf) {
        r2 = std::min(r2, adet / first.norm);
    } else {
        // lambda1 * lambda2 <= (4/pi) |det| < (4/3) |det|
        const i128 l1 = std::max<i128>(1, isqrt_ceil(first.norm) - 1);
        r2 = std::min(r2, ceil_div128(4 * adet, 3 * l1));
    }
    const i128 z_2 = coefficient_bound(*s, r2);
    if (z_2 > kOracleMaxBound) throw precondition_error("oracle: enumeration bound exceeds the cap");
    Best second = enumerate(*s, norm, r2, z_2, [&](i128 x, i128 y) { return x1 * y - y1 * x != 0; });
    if (!second.found) throw std::logic_error("oracle: no independent vector inside the bound");

    MinimaWitness w;
    w.norm_kind = norm;
    w.lambda1 = to_big(first.norm);
    w.v1 = v1;
    w.lambda2 = to_big(second.norm);
    w.v2 = combine(*s, second.z1, second.z2);
    w.z1[0] = first.z1;
    w.z1[1] = first.z2;
    w.z2[0] = second.z1;
    w.z2[1] = second.z2;
    return w;
}

std::size_t decimal_digits(const BigInt& x) {
    if (sgn(x) == 0) return 1;
    std::size_t k = mpz_sizeinbase(x.get_mpz_t(), 10);
    BigInt p;
    mpz_ui_pow_ui(p.get_mpz_t(), 10, k - 1);
    if (mpz_cmpabs(x.get_mpz_t(), p.get_mpz_t()) < 0) --k;
    return k;
}

std::vector<BigInt> cf_quotients(const BigInt& p, const BigInt& q) {
    if (sgn(q) == 0) throw precondition_error("continued fraction of a zero denominator");
    BigInt num = p, den = q;
    if (sgn(den) < 0) {
        num = -num;
        den = -den;
    }
    std::vector<BigInt> out;
    BigInt a, r;
    while (sgn(den) != 0) {
        mpz_fdiv_qr(a.get_mpz_t(), r.get_mpz_t(), num.get_mpz_t(), den.get_mpz_t());
        out.push_back(a);
        num.swap(den);
        den.swap(r);
    }
    return out;
}

namespace {

std::int64_t floor_neg_log10(const mpq_class& delta) {
    // floor(log10(D / N)) for delta = N / D: the largest j with D >= N * 10^j.
    const BigInt& n = delta.get_num();
    const BigInt& d = delta.get_den();
    std::int64_t j = static_cast<std::int64_t>(decimal_digits(d)) - static_cast<std::int64_t>(decimal_digits(n));
    auto holds = [&](std::int64_t e) {
        BigInt p;
        mpz_ui_pow_ui(p.get_mpz_t(), 10, static_cast<unsigned long>(e < 0 ? -e : e));
        return e >= 0 ? d >= n * p : d * p >= n;
    };
    if (!holds(j)) --j;
    return j;
}

void require_nonzero_denominators(const Basis& B) {
    if (sgn(B.b.v1) == 0 || sgn(B.b.v2) == 0) throw precondition_error("measure requires b1, b2 nonzero");
}

}  // namespace

DifficultyMeasure measure_delta(const Basis& B) {
    require_nonzero_denominators(B);
    DifficultyMeasure m;
    m.delta = mpq_class(abs(det(B)), abs(B.b.v1 * B.b.v2));
    m.delta.canonicalize();
    if (sgn(m.delta) == 0) throw precondition_error("delta is zero for dependent columns");
    m.delta_digits = floor_neg_log10(m.delta);
    return m;
}

mpq_class measure_kappa(const Basis& B) {
    require_nonzero_denominators(B);
    const auto s = cf_quotients(B.a.v1, B.b.v1);
    const auto t = cf_quotients(B.a.v2, B.b.v2);
    const std::size_t len = std::max(s.size(), t.size());
    std::size_t prefix = 0;
    while (prefix < s.size() && prefix < t.size() && s[prefix] == t[prefix]) ++prefix;
    mpq_class k(static_cast<unsigned long>(len - prefix), static_cast<unsigned long>(len));
    k.canonicalize();
    return k;
}

DifficultyMeasure measure_difficulty(const Basis& B) {
    DifficultyMeasure m = measure_delta(B);
    m.kappa = measure_kappa(B);
    return m;
}

}  // namespace lat2red
