#include "lat2red/core.hpp"

#include <algorithm>

namespace lat2red {

namespace {

void require_nonzero(const BigInt& b) {
    if (sgn(b) == 0) throw std::domain_error("division by zero");
}

}  // namespace

std::size_t bit_size(const BigInt& x) {
    if (sgn(x) == 0) return 0;
    return mpz_sizeinbase(x.get_mpz_t(), 2);
}

std::size_t bit_size(const LVec& v) { return std::max(bit_size(v.v1), bit_size(v.v2)); }

std::size_t min_bit_size(const LVec& x, const LVec& y) { return std::min(bit_size(x), bit_size(y)); }

std::size_t max_bit_size(const LVec& x, const LVec& y) { return std::max(bit_size(x), bit_size(y)); }

BigInt trunc_div(const BigInt& a, const BigInt& b) {
    require_nonzero(b);
    BigInt q;
    mpz_tdiv_q(q.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
    return q;
}

BigInt floor_div(const BigInt& a, const BigInt& b) {
    require_nonzero(b);
    BigInt q;
    mpz_fdiv_q(q.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
    return q;
}

BigInt ceil_div(const BigInt& a, const BigInt& b) {
    require_nonzero(b);
    BigInt q;
    mpz_cdiv_q(q.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
    return q;
}

BigInt round_nearest_div(const BigInt& a, const BigInt& b) {
    require_nonzero(b);
    // floor((2a + b) / 2b) once the divisor is made positive.
    BigInt num = a, den = b;
    if (sgn(den) < 0) {
        num = -num;
        den = -den;
    }
    num <<= 1;
    num += den;
    den <<= 1;
    BigInt q;
    mpz_fdiv_q(q.get_mpz_t(), num.get_mpz_t(), den.get_mpz_t());
    return q;
}

int sgn_pm(const BigInt& x) { return sgn(x) < 0 ? -1 : 1; }

BigInt linf(const LVec& v) {
    return mpz_cmpabs(v.v1.get_mpz_t(), v.v2.get_mpz_t()) >= 0 ? BigInt(abs(v.v1)) : BigInt(abs(v.v2));
}

BigInt l2sq(const LVec& v) { return v.v1 * v.v1 + v.v2 * v.v2; }

BigInt inner(const LVec& u, const LVec& v) { return u.v1 * v.v1 + u.v2 * v.v2; }

BigInt det(const Basis& B) { return B.a.v1 * B.b.v2 - B.a.v2 * B.b.v1; }

BigInt det(const Unimodular& M) { return M.m11 * M.m22 - M.m12 * M.m21; }

bool is_unimodular(const Unimodular& M) {
    BigInt d = det(M);
    return d == 1 || d == -1;
}

Unimodular unimodular_inverse(const Unimodular& M) {
    BigInt d = det(M);
    if (d == 1) return {M.m22, -M.m12, -M.m21, M.m11};
    if (d == -1) return {-M.m22, M.m12, M.m21, -M.m11};
    throw precondition_error("matrix is not unimodular");
}

Basis apply(const Basis& B, const Unimodular& M) {
    return {{M.m11 * B.a.v1 + M.m21 * B.b.v1, M.m11 * B.a.v2 + M.m21 * B.b.v2},
            {M.m12 * B.a.v1 + M.m22 * B.b.v1, M.m12 * B.a.v2 + M.m22 * B.b.v2}};
}

Unimodular compose(const Unimodular& A, const Unimodular& B) {
    return {A.m11 * B.m11 + A.m12 * B.m21, A.m11 * B.m12 + A.m12 * B.m22,
            A.m21 * B.m11 + A.m22 * B.m21, A.m21 * B.m12 + A.m22 * B.m22};
}

void push_quotient_left(Unimodular& M, const BigInt& q) {
    // (q 1; 1 0) * M: the new first row is q*row1 + row2, the new second row is the old first row.
    mpz_addmul(M.m21.get_mpz_t(), q.get_mpz_t(), M.m11.get_mpz_t());
    mpz_addmul(M.m22.get_mpz_t(), q.get_mpz_t(), M.m12.get_mpz_t());
    mpz_swap(M.m11.get_mpz_t(), M.m21.get_mpz_t());
    mpz_swap(M.m12.get_mpz_t(), M.m22.get_mpz_t());
}

bool lattice_coordinates(const Basis& B, const LVec& v, BigInt& z1, BigInt& z2) {
    BigInt d = det(B);
    if (sgn(d) == 0) throw precondition_error("zero determinant");
    BigInt n1 = v.v1 * B.b.v2 - v.v2 * B.b.v1;
    BigInt n2 = B.a.v1 * v.v2 - B.a.v2 * v.v1;
    if (!mpz_divisible_p(n1.get_mpz_t(), d.get_mpz_t())) return false;
    if (!mpz_divisible_p(n2.get_mpz_t(), d.get_mpz_t())) return false;
    mpz_divexact(z1.get_mpz_t(), n1.get_mpz_t(), d.get_mpz_t());
    mpz_divexact(z2.get_mpz_t(), n2.get_mpz_t(), d.get_mpz_t());
    return true;
}

int cmp_linf(const LVec& x, const LVec& y) {
    mpz_srcptr xm = mpz_cmpabs(x.v1.get_mpz_t(), x.v2.get_mpz_t()) >= 0 ? x.v1.get_mpz_t() : x.v2.get_mpz_t();
    mpz_srcptr ym = mpz_cmpabs(y.v1.get_mpz_t(), y.v2.get_mpz_t()) >= 0 ? y.v1.get_mpz_t() : y.v2.get_mpz_t();
    int c = mpz_cmpabs(xm, ym);
    return (c > 0) - (c < 0);
}

std::string to_string(const LVec& v) { return "(" + v.v1.get_str() + ", " + v.v2.get_str() + ")"; }

std::string to_string(const Basis& B) { return "[" + to_string(B.a) + " " + to_string(B.b) + "]"; }

}  // namespace lat2red
