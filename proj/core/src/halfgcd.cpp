#include "lat2red/halfgcd.hpp"

#include <algorithm>

namespace lat2red {

SplitParts split(const LVec& v, std::size_t n_ell) {
    SplitParts p;
    mpz_fdiv_q_2exp(p.high.v1.get_mpz_t(), v.v1.get_mpz_t(), n_ell);
    mpz_fdiv_q_2exp(p.high.v2.get_mpz_t(), v.v2.get_mpz_t(), n_ell);
    mpz_fdiv_r_2exp(p.low.v1.get_mpz_t(), v.v1.get_mpz_t(), n_ell);
    mpz_fdiv_r_2exp(p.low.v2.get_mpz_t(), v.v2.get_mpz_t(), n_ell);
    return p;
}

namespace {

bool is_identity(const Unimodular& M) { return M == Unimodular::identity(); }

struct HVecContext {
    HVecStats* stats;
    std::size_t base_bits;
    LVec scratch;
    BigInt q;
    BigInt tmp;
};

// min(#(c+d), #(c-d)) <= s
bool sum_or_difference_small(const LVec& c, const LVec& d, std::size_t s, LVec& t) {
    mpz_add(t.v1.get_mpz_t(), c.v1.get_mpz_t(), d.v1.get_mpz_t());
    mpz_add(t.v2.get_mpz_t(), c.v2.get_mpz_t(), d.v2.get_mpz_t());
    if (bit_size(t) <= s) return true;
    mpz_sub(t.v1.get_mpz_t(), c.v1.get_mpz_t(), d.v1.get_mpz_t());
    mpz_sub(t.v2.get_mpz_t(), c.v2.get_mpz_t(), d.v2.get_mpz_t());
    return bit_size(t) <= s;
}

void hvec_step(LVec& c, LVec& d, std::size_t s, Unimodular& M, HVecContext& ctx) {
    if (sign_product(c, d) > 0)
        detail::umtrans1_inplace(c, d, ctx.q, ctx.tmp);
    else
        detail::umtrans2_inplace(c, d, ctx.q);
    if (bit_size(d) <= s) {
        // Move the last quotient by one so that d stays above the threshold: q-1 (d := c + d) if
        // that clears it, otherwise q+1 (d := d - c); one of the two does since max(|c+d|, |c-d|) >= |c|.
        d += c;
        if (bit_size(d) > s) {
            ctx.q -= 1;
        } else {
            d -= c;
            d -= c;
            ctx.q += 1;
        }
        if (ctx.stats) ++ctx.stats->backups;
    }
    push_quotient_left(M, ctx.q);
    if (ctx.stats) ++ctx.stats->steps;
}

HVecOutput hvec_rec(LVec c, LVec d, std::size_t depth, HVecContext& ctx);

// Replaces (c, d) by (c, d) * M1^{-1} where M1 reduces the top bits, and sets M := M1 * M.
void split_and_recurse(LVec& c, LVec& d, Unimodular& M, std::size_t n_ell, std::size_t depth, HVecContext& ctx) {
    SplitParts pc = split(c, n_ell);
    SplitParts pd = split(d, n_ell);
    HVecOutput r = hvec_rec(std::move(pc.high), std::move(pd.high), depth + 1, ctx);
    if (is_identity(r.M)) return;
    Basis low = apply(Basis{std::move(pc.low), std::move(pd.low)}, unimodular_inverse(r.M));
    mpz_mul_2exp(c.v1.get_mpz_t(), r.c.v1.get_mpz_t(), n_ell);
    mpz_mul_2exp(c.v2.get_mpz_t(), r.c.v2.get_mpz_t(), n_ell);
    mpz_mul_2exp(d.v1.get_mpz_t(), r.d.v1.get_mpz_t(), n_ell);
    mpz_mul_2exp(d.v2.get_mpz_t(), r.d.v2.get_mpz_t(), n_ell);
    c += low.a;
    d += low.b;
    M = is_identity(M) ? std::move(r.M) : compose(r.M, M);
}

HVecOutput hvec_rec(LVec c, LVec d, std::size_t depth, HVecContext& ctx) {
    if (ctx.stats) {
        ++ctx.stats->calls;
        ctx.stats->max_depth = std::max(ctx.stats->max_depth, depth);
    }
    HVecOutput out{std::move(c), std::move(d), Unimodular::identity()};
    LVec& cc = out.c;
    LVec& dd = out.d;
    Unimodular& M = out.M;
    if (is_reduced(cc, dd)) return out;

    const std::size_t n = max_bit_size(cc, dd);
    const std::size_t s = n / 2 + 1;
    const std::size_t three_quarters = 3 * n / 4;

    bool split1 = false;
    if (n > ctx.base_bits && min_bit_size(cc, dd) >= three_quarters + 2) {
        split_and_recurse(cc, dd, M, n / 2, depth, ctx);
        split1 = true;
    }

    std::size_t iterations = 0;
    while (max_bit_size(cc, dd) > three_quarters + 1 && !sum_or_difference_small(cc, dd, s, ctx.scratch)) {
        if (is_reduced(cc, dd)) return out;
        hvec_step(cc, dd, s, M, ctx);
        ++iterations;
    }
    if (split1 && ctx.stats) ctx.stats->max_loop1 = std::max(ctx.stats->max_loop1, iterations);

    bool split2 = false;
    // Once min #(c+d, c-d) <= s the final loop is a no-op, so the second split is skipped as well;
    // otherwise the first loop has left #(c, d) <= 3n/4 + 1 and the split halves the remaining work.
    if (n > ctx.base_bits && min_bit_size(cc, dd) > s + 2 && !sum_or_difference_small(cc, dd, s, ctx.scratch)) {
        const std::size_t n2 = max_bit_size(cc, dd);
        if (2 * s + 1 > n2) {
            split_and_recurse(cc, dd, M, 2 * s + 1 - n2, depth, ctx);
            split2 = true;
        }
    }

    iterations = 0;
    while (!sum_or_difference_small(cc, dd, s, ctx.scratch)) {
        if (is_reduced(cc, dd)) return out;
        hvec_step(cc, dd, s, M, ctx);
        ++iterations;
    }
    if (split2 && ctx.stats) ctx.stats->max_loop2 = std::max(ctx.stats->max_loop2, iterations);
    return out;
}

// Plain reduction step used when the pair is too unbalanced for a half-size call.
void single_step(LVec& a, LVec& b, HVecContext& ctx) {
    if (sign_product(a, b) > 0)
        detail::umtrans1_inplace(a, b, ctx.q, ctx.tmp);
    else
        detail::umtrans2_inplace(a, b, ctx.q);
}

}  // namespace

HVecOutput hvec(const LVec& a, const LVec& b, HVecStats* stats, std::size_t base_bits) {
    if (is_reduced(a, b)) return {a, b, Unimodular::identity()};
    const std::size_t n = max_bit_size(a, b);
    const std::size_t s = n / 2 + 1;
    if (min_bit_size(a, b) <= s || min_bit_size(a + b, a - b) <= s)
        throw precondition_error("hvec requires min #(a,b) and min #(a+b,a-b) above floor(n/2)+1");
    HVecContext ctx{stats, base_bits, {}, {}, {}};
    return hvec_rec(a, b, 0, ctx);
}

ReductionResult hvec_sbp(const Basis& B, NormKind norm, HVecStats* stats, std::size_t base_bits) {
    detail::require_nonsingular(B);
    HVecStats local;
    HVecStats* st = stats ? stats : &local;
    HVecContext ctx{st, base_bits, {}, {}, {}};
    LVec a = B.a, b = B.b;
    std::uint64_t steps = 0;
    while (!is_reduced(a, b)) {
        if (cmp_linf(a, b) < 0) std::swap(a, b);
        const std::size_t n = bit_size(a);
        const std::size_t s = n / 2 + 1;
        if (bit_size(b) <= s || sum_or_difference_small(a, b, s, ctx.scratch)) {
            single_step(a, b, ctx);
            ++steps;
            continue;
        }
        const std::uint64_t before = st->steps;
        HVecOutput r = hvec_rec(std::move(a), std::move(b), 0, ctx);
        steps += st->steps - before;
        a = std::move(r.c);
        b = std::move(r.d);
        LVec t = a + b;
        if (bit_size(t) <= s) {
            a = std::move(b);
            b = std::move(t);
            ++steps;
        } else {
            t = a - b;
            if (bit_size(t) <= s) {
                a = std::move(b);
                b = std::move(t);
                ++steps;
            }
        }
    }
    return norm == NormKind::linf ? detail::finish_linf(std::move(a), std::move(b), steps)
                                  : detail::finish_l2(std::move(a), std::move(b), steps);
}

namespace {

// (A, B)^T = M (a, b)^T with M nonnegative of determinant 1. Steps subtract the smaller entry
// from the larger while keeping both above s bits; stops once |a - b| has at most s bits.
struct HgcdContext {
    std::size_t base_bits;
    BigInt q;
    BigInt r;
};

bool hgcd_done(const BigInt& a, const BigInt& b, std::size_t s, BigInt& t) {
    mpz_sub(t.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
    return bit_size(t) <= s;
}

void hgcd_step(BigInt& a, BigInt& b, std::size_t s, Unimodular& M, HgcdContext& ctx) {
    const bool a_larger = a > b;
    BigInt& big = a_larger ? a : b;
    const BigInt& small = a_larger ? b : a;
    mpz_tdiv_qr(ctx.q.get_mpz_t(), ctx.r.get_mpz_t(), big.get_mpz_t(), small.get_mpz_t());
    if (bit_size(ctx.r) <= s) {
        ctx.q -= 1;
        ctx.r += small;
    }
    mpz_swap(big.get_mpz_t(), ctx.r.get_mpz_t());
    if (a_larger) {
        mpz_addmul(M.m12.get_mpz_t(), ctx.q.get_mpz_t(), M.m11.get_mpz_t());
        mpz_addmul(M.m22.get_mpz_t(), ctx.q.get_mpz_t(), M.m21.get_mpz_t());
    } else {
        mpz_addmul(M.m11.get_mpz_t(), ctx.q.get_mpz_t(), M.m12.get_mpz_t());
        mpz_addmul(M.m21.get_mpz_t(), ctx.q.get_mpz_t(), M.m22.get_mpz_t());
    }
}

Unimodular hgcd_core(BigInt& a, BigInt& b, HgcdContext& ctx);

// Reduces the top bits of (a, b) above bit k and carries the transform over to the full pair,
// keeping it only if both results stay above s bits.
void hgcd_split(BigInt& a, BigInt& b, std::size_t k, std::size_t s, Unimodular& M, HgcdContext& ctx) {
    BigInt ah, bh;
    mpz_fdiv_q_2exp(ah.get_mpz_t(), a.get_mpz_t(), k);
    mpz_fdiv_q_2exp(bh.get_mpz_t(), b.get_mpz_t(), k);
    Unimodular M1 = hgcd_core(ah, bh, ctx);
    if (is_identity(M1)) return;
    BigInt na = M1.m22 * a - M1.m12 * b;
    BigInt nb = M1.m11 * b - M1.m21 * a;
    if (sgn(na) <= 0 || sgn(nb) <= 0 || bit_size(na) <= s || bit_size(nb) <= s) return;
    a = std::move(na);
    b = std::move(nb);
    M = is_identity(M) ? std::move(M1) : compose(M, M1);
}

Unimodular hgcd_core(BigInt& a, BigInt& b, HgcdContext& ctx) {
    Unimodular M;
    const std::size_t n = std::max(bit_size(a), bit_size(b));
    const std::size_t s = n / 2 + 1;
    if (std::min(bit_size(a), bit_size(b)) <= s) return M;
    BigInt t;
    if (hgcd_done(a, b, s, t)) return M;
    if (n > ctx.base_bits) {
        hgcd_split(a, b, n / 2, s, M, ctx);
        while (std::max(bit_size(a), bit_size(b)) > 3 * n / 4 + 1 && !hgcd_done(a, b, s, t))
            hgcd_step(a, b, s, M, ctx);
        const std::size_t n2 = std::max(bit_size(a), bit_size(b));
        if (std::min(bit_size(a), bit_size(b)) > s + 2 && 2 * s + 1 > n2 && !hgcd_done(a, b, s, t))
            hgcd_split(a, b, 2 * s + 1 - n2, s, M, ctx);
    }
    while (!hgcd_done(a, b, s, t)) hgcd_step(a, b, s, M, ctx);
    return M;
}

}  // namespace

HgcdOutput int_hgcd(const BigInt& a, const BigInt& b, std::size_t base_bits) {
    if (!(sgn(b) > 0 && a > b)) throw precondition_error("int_hgcd requires a > b > 0");
    HgcdContext ctx{base_bits, {}, {}};
    HgcdOutput out{a, b, {}};
    out.M = hgcd_core(out.a, out.b, ctx);
    const std::size_t s = bit_size(a) / 2 + 1;
    if (out.a < out.b) {
        std::swap(out.a, out.b);
        std::swap(out.M.m11, out.M.m12);
        std::swap(out.M.m21, out.M.m22);
    }
    if (bit_size(out.b) > s) {
        // One plain division brings the smaller entry under the threshold.
        BigInt q, r;
        mpz_tdiv_qr(q.get_mpz_t(), r.get_mpz_t(), out.a.get_mpz_t(), out.b.get_mpz_t());
        out.a.swap(out.b);
        out.b.swap(r);
        // M := M * (q 1; 1 0)
        BigInt c1 = q * out.M.m11 + out.M.m12;
        BigInt c2 = q * out.M.m21 + out.M.m22;
        out.M.m12 = std::move(out.M.m11);
        out.M.m22 = std::move(out.M.m21);
        out.M.m11 = std::move(c1);
        out.M.m21 = std::move(c2);
    }
    return out;
}

namespace {

// T := T * (q 1; 1 0)
void right_quotient(Unimodular& T, const BigInt& q) {
    mpz_addmul(T.m12.get_mpz_t(), q.get_mpz_t(), T.m11.get_mpz_t());
    mpz_addmul(T.m22.get_mpz_t(), q.get_mpz_t(), T.m21.get_mpz_t());
    mpz_swap(T.m11.get_mpz_t(), T.m12.get_mpz_t());
    mpz_swap(T.m21.get_mpz_t(), T.m22.get_mpz_t());
}

XgcdResult bezout_from(const BigInt& a, const BigInt& b, const BigInt& g, const Unimodular& T) {
    // (|a|, |b|)^T = T (g, 0)^T, so the first row of T^{-1} holds the coefficients.
    XgcdResult r;
    r.g = g;
    if (det(T) == 1) {
        r.x = T.m22;
        r.y = -T.m12;
    } else {
        r.x = -T.m22;
        r.y = T.m12;
    }
    if (sgn(a) < 0) r.x = -r.x;
    if (sgn(b) < 0) r.y = -r.y;
    normalize_bezout(a, b, r);
    return r;
}

}  // namespace

XgcdResult xgcd_classical(const BigInt& a, const BigInt& b) {
    BigInt r0 = abs(a), r1 = abs(b);
    BigInt s0 = 1, s1 = 0, q, t;
    while (sgn(r1) != 0) {
        mpz_fdiv_qr(q.get_mpz_t(), t.get_mpz_t(), r0.get_mpz_t(), r1.get_mpz_t());
        r0.swap(r1);
        r1.swap(t);
        mpz_submul(s0.get_mpz_t(), q.get_mpz_t(), s1.get_mpz_t());
        s0.swap(s1);
    }
    XgcdResult r;
    r.g = r0;
    r.x = sgn(a) < 0 ? BigInt(-s0) : s0;
    if (sgn(b) == 0) {
        r.y = 0;
    } else {
        BigInt num = r.g - r.x * a;
        r.y = num / b;
    }
    normalize_bezout(a, b, r);
    return r;
}

XgcdResult xgcd_hgcd(const BigInt& a, const BigInt& b) {
    BigInt x = abs(a), y = abs(b), q, r;
    Unimodular T;
    if (x < y) {
        x.swap(y);
        std::swap(T.m11, T.m12);
        std::swap(T.m21, T.m22);
    }
    while (sgn(y) != 0) {
        const std::size_t n = bit_size(x);
        if (n > kHgcdBaseBits && x > y && bit_size(y) > n / 2 + 1) {
            HgcdOutput h = int_hgcd(x, y);
            if (!is_identity(h.M)) {
                T = compose(T, h.M);
                x = std::move(h.a);
                y = std::move(h.b);
                if (sgn(y) == 0) break;
            }
        }
        mpz_fdiv_qr(q.get_mpz_t(), r.get_mpz_t(), x.get_mpz_t(), y.get_mpz_t());
        right_quotient(T, q);
        x.swap(y);
        y.swap(r);
    }
    return bezout_from(a, b, x, T);
}

void normalize_bezout(const BigInt& a, const BigInt& b, XgcdResult& r) {
    if (sgn(r.g) == 0) {
        r.x = 0;
        r.y = 0;
        return;
    }
    if (sgn(b) == 0) {
        r.x = sgn(a) < 0 ? -1 : 1;
        r.y = 0;
        return;
    }
    BigInt m = abs(b) / r.g;
    mpz_fdiv_r(r.x.get_mpz_t(), r.x.get_mpz_t(), m.get_mpz_t());
    BigInt num = r.g - r.x * a;
    mpz_divexact(r.y.get_mpz_t(), num.get_mpz_t(), b.get_mpz_t());
}

}  // namespace lat2red
