#include "lat2red/reduce.hpp"

namespace lat2red {

const char* to_string(NormKind k) { return k == NormKind::linf ? "linf" : "l2"; }

int sign_product(const LVec& a, const LVec& b) {
    return sgn(a.v1) * sgn(a.v2) * sgn(b.v1) * sgn(b.v2);
}

int gap_product(const LVec& a, const LVec& b) {
    int ga = mpz_cmpabs(a.v1.get_mpz_t(), a.v2.get_mpz_t());
    int gb = mpz_cmpabs(b.v1.get_mpz_t(), b.v2.get_mpz_t());
    return ((ga > 0) - (ga < 0)) * ((gb > 0) - (gb < 0));
}

bool is_reduced(const LVec& a, const LVec& b) { return sign_product(a, b) <= 0 && gap_product(a, b) <= 0; }

bool is_reduced(const Basis& B) { return is_reduced(B.a, B.b); }

namespace detail {

void euclid_step(LVec& a, LVec& b, const BigInt& q) {
    mpz_submul(a.v1.get_mpz_t(), q.get_mpz_t(), b.v1.get_mpz_t());
    mpz_submul(a.v2.get_mpz_t(), q.get_mpz_t(), b.v2.get_mpz_t());
    std::swap(a, b);
}

void umtrans1_inplace(LVec& a, LVec& b, BigInt& q, BigInt& tmp) {
    const bool first = mpz_cmpabs(a.v1.get_mpz_t(), a.v2.get_mpz_t()) >= 0;
    const BigInt& num = first ? a.v1 : a.v2;
    const BigInt& den = first ? b.v1 : b.v2;
    const BigInt& other_num = first ? a.v2 : a.v1;
    const BigInt& other_den = first ? b.v2 : b.v1;
    mpz_tdiv_q(q.get_mpz_t(), num.get_mpz_t(), den.get_mpz_t());
    tmp = other_num;
    mpz_submul(tmp.get_mpz_t(), q.get_mpz_t(), other_den.get_mpz_t());
    bool adjust = mpz_cmpabs(tmp.get_mpz_t(), other_den.get_mpz_t()) >= 0 && sgn_pm(other_num) == sgn_pm(tmp);
    // The adjustment moves q one further from zero, in the direction of the quotient num/den.
    const int away = sgn(num) * sgn(den);
#ifdef LAT2RED_MUTATE_UMTRANS1
    if (adjust) {
        // Off-by-one: the dominant coordinate keeps the unadjusted quotient.
        BigInt& dominant = first ? a.v1 : a.v2;
        BigInt& trailing = first ? a.v2 : a.v1;
        mpz_submul(dominant.get_mpz_t(), q.get_mpz_t(), den.get_mpz_t());
        q += away;
        mpz_submul(trailing.get_mpz_t(), q.get_mpz_t(), other_den.get_mpz_t());
        std::swap(a, b);
        return;
    }
#endif
    if (adjust) q += away;
    euclid_step(a, b, q);
}

void umtrans2_inplace(LVec& a, LVec& b, BigInt& q) {
    if (mpz_cmpabs(a.v1.get_mpz_t(), a.v2.get_mpz_t()) > 0)
        mpz_tdiv_q(q.get_mpz_t(), a.v1.get_mpz_t(), b.v1.get_mpz_t());
    else
        mpz_tdiv_q(q.get_mpz_t(), a.v2.get_mpz_t(), b.v2.get_mpz_t());
    euclid_step(a, b, q);
}

std::uint64_t reduce_loops(LVec& a, LVec& b) {
    std::uint64_t steps = 0;
    BigInt q, tmp;
    while (sign_product(a, b) > 0) {
        umtrans1_inplace(a, b, q, tmp);
        ++steps;
    }
    while (gap_product(a, b) > 0) {
        umtrans2_inplace(a, b, q);
        ++steps;
    }
    return steps;
}

void require_nonsingular(const Basis& B) {
    if (sgn(det(B)) == 0) throw precondition_error("zero determinant");
}

namespace {

void sign_fix(LVec& a, LVec& b) {
    bool a1b1_zero = sgn(a.v1) == 0 || sgn(b.v1) == 0;
    bool a2b2_zero = sgn(a.v2) == 0 || sgn(b.v2) == 0;
    if ((a1b1_zero && sgn_pm(a.v2) != sgn_pm(b.v2)) || (a2b2_zero && sgn_pm(a.v1) != sgn_pm(b.v1))) b.negate();
}

// Candidate b - z a for z in {floor, ceil} of num / (|a1| + |a2|); the floor candidate wins ties.
LVec best_shift(const LVec& a, const LVec& b, const BigInt& num) {
    BigInt den = abs(a.v1) + abs(a.v2);
    BigInt zf = floor_div(num, den);
    LVec cf = b - zf * a;
    LVec cc = cf - a;
    if (mpz_divisible_p(num.get_mpz_t(), den.get_mpz_t())) return cf;
    return cmp_linf(cc, cf) < 0 ? cc : cf;
}

LVec extract_second_unchecked(const LVec& a, const LVec& b) {
    const int s11 = sgn(a.v1) * sgn(b.v1);
    const int s22 = sgn(a.v2) * sgn(b.v2);
    // a1*b1 = 0 with a2*b2 > 0 is handled by the second case; negating a instead gives the same candidates.
    const bool case1 = s11 >= 0 && s22 <= 0;
    BigInt ab1 = abs(b.v1), ab2 = abs(b.v2);
    LVec c = case1 ? best_shift(a, b, ab1 - ab2) : best_shift(a, b, ab2 - ab1);
    // b is independent of a, so it is an equally good answer whenever it is no longer than c.
    return cmp_linf(b, c) <= 0 ? b : c;
}

}  // namespace

ReductionResult finish_linf(LVec a, LVec b, std::uint64_t steps) {
    sign_fix(a, b);
    if (cmp_linf(a, b) > 0) std::swap(a, b);
    ReductionResult r;
    r.steps = steps;
    r.norm_kind = NormKind::linf;
    r.reduced = Basis{a, b};
    if (!a.is_zero()) b = extract_second_unchecked(a, b);
    r.lambda1 = linf(a);
    r.lambda2 = linf(b);
    r.basis = {std::move(a), std::move(b)};
    return r;
}

ReductionResult finish_l2(LVec a, LVec b, std::uint64_t steps) {
    sign_fix(a, b);
    if (cmp_linf(a, b) > 0) std::swap(a, b);
    auto [u, v] = extract_l2_shortest(Basis{a, b});
    ReductionResult r;
    r.reduced = Basis{std::move(a), std::move(b)};
    r.steps = steps;
    r.norm_kind = NormKind::l2;
    r.lambda1 = l2sq(u);
    r.lambda2 = l2sq(v);
    r.basis = {std::move(u), std::move(v)};
    return r;
}

}  // namespace detail

StepResult umtrans1(const LVec& a, const LVec& b) {
    if (sign_product(a, b) <= 0) throw precondition_error("umtrans1 requires a1*a2*b1*b2 > 0");
    LVec x = a, y = b;
    BigInt q, tmp;
    detail::umtrans1_inplace(x, y, q, tmp);
    return {{std::move(x), std::move(y)}, std::move(q)};
}

StepResult umtrans2(const LVec& a, const LVec& b) {
    if (sign_product(a, b) > 0 || gap_product(a, b) <= 0)
        throw precondition_error("umtrans2 requires a1*a2*b1*b2 <= 0 and a positive gap product");
    LVec x = a, y = b;
    BigInt q;
    detail::umtrans2_inplace(x, y, q);
    return {{std::move(x), std::move(y)}, std::move(q)};
}

ReductionResult cross_euc(const Basis& B) {
    detail::require_nonsingular(B);
    LVec a = B.a, b = B.b;
    std::uint64_t steps = detail::reduce_loops(a, b);
    return detail::finish_linf(std::move(a), std::move(b), steps);
}

ReductionResult cross_euc_l2(const Basis& B) {
    detail::require_nonsingular(B);
    LVec a = B.a, b = B.b;
    std::uint64_t steps = detail::reduce_loops(a, b);
    return detail::finish_l2(std::move(a), std::move(b), steps);
}

LVec extract_second_linf(const Basis& B) {
    if (!is_reduced(B)) throw precondition_error("basis is not reduced");
    if (sgn(det(B)) == 0) throw precondition_error("zero determinant");
    if (cmp_linf(B.a, B.b) > 0) throw precondition_error("requires ||a|| <= ||b||");
    return detail::extract_second_unchecked(B.a, B.b);
}

std::pair<LVec, LVec> extract_l2_shortest(const Basis& B) {
    if (!is_reduced(B)) throw precondition_error("basis is not reduced");
    if (sgn(det(B)) == 0) throw precondition_error("zero determinant");
    const LVec& a = B.a;
    const LVec& b = B.b;
    LVec cand[4] = {a, b, a + b, a - b};
    BigInt norms[4];
    int best = 0;
    for (int i = 0; i < 4; ++i) {
        norms[i] = l2sq(cand[i]);
        if (norms[i] < norms[best]) best = i;
    }
    const LVec& u = cand[best];
    const LVec* x;
    if (best == 0)
        x = &b;
    else if (best == 1)
        x = &a;
    else
        x = norms[1] < norms[0] ? &b : &a;
    BigInt q = round_nearest_div(inner(*x, u), norms[best]);
    LVec v = *x - q * u;
    return {u, std::move(v)};
}

}  // namespace lat2red
