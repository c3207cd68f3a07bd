#pragma once

#include <gmpxx.h>

#include <cstddef>
#include <stdexcept>
#include <string>

namespace lat2red {

using BigInt = mpz_class;

/// Raised when an operation is called outside its documented domain.
class precondition_error : public std::invalid_argument {
public:
    using std::invalid_argument::invalid_argument;
};

struct LVec {
    BigInt v1;
    BigInt v2;

    LVec() = default;
    LVec(BigInt x, BigInt y) : v1(std::move(x)), v2(std::move(y)) {}
    LVec(long x, long y) : v1(x), v2(y) {}

    bool is_zero() const { return sgn(v1) == 0 && sgn(v2) == 0; }

    LVec& operator+=(const LVec& o) { v1 += o.v1; v2 += o.v2; return *this; }
    LVec& operator-=(const LVec& o) { v1 -= o.v1; v2 -= o.v2; return *this; }
    void negate() { mpz_neg(v1.get_mpz_t(), v1.get_mpz_t()); mpz_neg(v2.get_mpz_t(), v2.get_mpz_t()); }

    friend bool operator==(const LVec& x, const LVec& y) { return x.v1 == y.v1 && x.v2 == y.v2; }
    friend LVec operator+(const LVec& x, const LVec& y) { return {x.v1 + y.v1, x.v2 + y.v2}; }
    friend LVec operator-(const LVec& x, const LVec& y) { return {x.v1 - y.v1, x.v2 - y.v2}; }
    friend LVec operator-(const LVec& x) { return {-x.v1, -x.v2}; }
    friend LVec operator*(const BigInt& k, const LVec& x) { return {k * x.v1, k * x.v2}; }
};

/// Columns a and b of a 2x2 lattice basis.
struct Basis {
    LVec a;
    LVec b;

    friend bool operator==(const Basis& x, const Basis& y) { return x.a == y.a && x.b == y.b; }
};

/// 2x2 integer matrix (m11 m12; m21 m22) with determinant +1 or -1.
struct Unimodular {
    BigInt m11{1}, m12{0}, m21{0}, m22{1};

    static Unimodular identity() { return {}; }
    /// The matrix (q 1; 1 0) that undoes one quotient step.
    static Unimodular quotient(const BigInt& q) { return {q, 1, 1, 0}; }

    friend bool operator==(const Unimodular& x, const Unimodular& y) {
        return x.m11 == y.m11 && x.m12 == y.m12 && x.m21 == y.m21 && x.m22 == y.m22;
    }
};

std::size_t bit_size(const BigInt& x);
std::size_t bit_size(const LVec& v);
/// min(#x, #y), the underlined bit size of a vector pair.
std::size_t min_bit_size(const LVec& x, const LVec& y);
/// max(#x, #y).
std::size_t max_bit_size(const LVec& x, const LVec& y);

BigInt trunc_div(const BigInt& a, const BigInt& b);
BigInt floor_div(const BigInt& a, const BigInt& b);
BigInt ceil_div(const BigInt& a, const BigInt& b);
/// Nearest integer to a/b, ties toward +infinity.
BigInt round_nearest_div(const BigInt& a, const BigInt& b);

/// +1 for x >= 0, -1 otherwise.
int sgn_pm(const BigInt& x);

BigInt linf(const LVec& v);
BigInt l2sq(const LVec& v);
BigInt inner(const LVec& u, const LVec& v);
BigInt det(const Basis& B);

BigInt det(const Unimodular& M);
bool is_unimodular(const Unimodular& M);
Unimodular unimodular_inverse(const Unimodular& M);
/// [a b] * M.
Basis apply(const Basis& B, const Unimodular& M);
/// Matrix product M1 * M2.
Unimodular compose(const Unimodular& M1, const Unimodular& M2);

/// M := (q 1; 1 0) * M, in place.
void push_quotient_left(Unimodular& M, const BigInt& q);

/// Solves B * (z1, z2)^T = v exactly; returns false when v is not in the lattice.
bool lattice_coordinates(const Basis& B, const LVec& v, BigInt& z1, BigInt& z2);

/// Compares ||x||_inf with ||y||_inf without materializing either norm.
int cmp_linf(const LVec& x, const LVec& y);

std::string to_string(const LVec& v);
std::string to_string(const Basis& B);

}  // namespace lat2red
