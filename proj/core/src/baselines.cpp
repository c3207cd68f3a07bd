#include "lat2red/baselines.hpp"

#include <algorithm>
#include <cctype>
#include <string>

#include "lat2red/halfgcd.hpp"

namespace lat2red {

namespace {

// Generous cap on the main loops of the quadratic baselines; hitting it means a bug, not a hard input.
constexpr std::uint64_t kIterationCap = 1ULL << 40;

void check_cap(std::uint64_t steps, const char* who) {
    if (steps > kIterationCap) throw std::logic_error(std::string(who) + ": iteration cap exceeded");
}

ReductionResult l2_result(LVec a, LVec b, std::uint64_t steps) {
    ReductionResult r;
    r.norm_kind = NormKind::l2;
    r.steps = steps;
    BigInt na = l2sq(a), nb = l2sq(b);
    if (nb < na) {
        std::swap(a, b);
        std::swap(na, nb);
    }
    r.lambda1 = std::move(na);
    r.lambda2 = std::move(nb);
    r.basis = {std::move(a), std::move(b)};
    return r;
}

ReductionResult linf_result(LVec a, LVec b, std::uint64_t steps) {
    ReductionResult r;
    r.norm_kind = NormKind::linf;
    r.steps = steps;
    if (cmp_linf(b, a) < 0) std::swap(a, b);
    r.lambda1 = linf(a);
    r.lambda2 = linf(b);
    r.basis = {std::move(a), std::move(b)};
    return r;
}

// Shared preamble of the Lagrange-style algorithms under a norm given by `norm`.
// Returns true when the basis is already final.
template <class Norm>
bool lagrange_preamble(LVec& a, LVec& b, const Norm& norm) {
    if (norm(a) > norm(b)) std::swap(a, b);
    if (norm(a - b) > norm(a + b)) b.negate();
    const BigInt n_amb = norm(a - b);
    if (norm(b) <= n_amb) return true;
    if (norm(a) <= n_amb) return false;
    if (norm(a) == norm(b)) {
        b = a - b;
        return true;
    }
    LVec na = b - a;
    b = std::move(a);
    a = std::move(na);
    return false;
}

template <class Norm>
bool lagrange_reduced(const LVec& a, const LVec& b, const Norm& norm) {
    const BigInt hi = std::max(norm(a), norm(b));
    return hi <= norm(a + b) && hi <= norm(a - b);
}

}  // namespace

ReductionResult lag_red(const Basis& B) {
    detail::require_nonsingular(B);
    LVec a = B.a, b = B.b;
    std::uint64_t steps = 0;
    if (!lagrange_preamble(a, b, l2sq)) {
        for (;;) {
            BigInt mu = round_nearest_div(inner(a, b), l2sq(a));
            b -= mu * a;
            if (l2sq(a - b) > l2sq(a + b)) b.negate();
            std::swap(a, b);
            check_cap(++steps, "lag_red");
            if (lagrange_reduced(a, b, l2sq)) break;
        }
    }
    return l2_result(std::move(a), std::move(b), steps);
}

ReductionResult gol_euc(const Basis& B) {
    detail::require_nonsingular(B);
    LVec a = B.a, b = B.b;
    std::uint64_t steps = 0;
    if (!lagrange_preamble(a, b, linf)) {
        for (;;) {
            const bool same_sign = sgn(a.v1) != 0 && sgn(a.v2) != 0 && sgn(b.v1) != 0 && sgn(b.v2) != 0 &&
                                   sgn(a.v1) * sgn(b.v1) == sgn(a.v2) * sgn(b.v2);
            BigInt den = abs(a.v1) + abs(a.v2);
            BigInt num = same_sign ? BigInt(abs(b.v1) + abs(b.v2)) : BigInt(abs(BigInt(abs(b.v2) - abs(b.v1))));
            BigInt lo = floor_div(num, den);
            // The magnitude comes from the ratio; the sign of the multiplier is tried both ways since the
            // ratio itself may be negative.
            BigInt cands[4] = {lo + 1, lo, -(lo + 1), -lo};
            if (mpz_divisible_p(num.get_mpz_t(), den.get_mpz_t())) cands[0] = lo, cands[2] = -lo;
            LVec best = b - cands[0] * a;
            for (int i = 1; i < 4; ++i) {
                LVec cand = b - cands[i] * a;
                if (cmp_linf(cand, best) < 0) best = std::move(cand);
            }
            b = std::move(best);
            if (linf(a - b) > linf(a + b)) b.negate();
            std::swap(a, b);
            check_cap(++steps, "gol_euc");
            if (lagrange_reduced(a, b, linf)) break;
        }
    }
    return linf_result(std::move(a), std::move(b), steps);
}

namespace {

void make_admissible(LVec& a, LVec& b) {
    if (l2sq(a) < l2sq(b)) std::swap(a, b);
    if (sgn(inner(a, b)) < 0) b.negate();
}

// Final two steps shared by CRS and its half-Gaussian driver.
ReductionResult crs_finish(LVec a, LVec b, std::uint64_t steps) {
    if (l2sq(a - b) < l2sq(b)) {
        LVec c = a - b;
        a = std::move(b);
        b = std::move(c);
        ++steps;
    }
    BigInt mu = round_nearest_div(inner(a, b), l2sq(b));
    LVec c = a - mu * b;
    return l2_result(std::move(b), std::move(c), steps + 1);
}

// One step of the coherent remainder sequence; returns false at a fixpoint.
bool crs_step(LVec& a, LVec& b) {
    BigInt mu = floor_div(inner(a, b), l2sq(b));
    if (sgn(mu) == 0) return false;
    LVec c = a - mu * b;
    if (l2sq(c) == l2sq(a)) return false;
    a = std::move(b);
    b = std::move(c);
    return true;
}

}  // namespace

ReductionResult crs(const Basis& B) {
    detail::require_nonsingular(B);
    LVec a = B.a, b = B.b;
    make_admissible(a, b);
    std::uint64_t steps = 0;
    if (sgn(inner(a, b)) != 0) {
        while (crs_step(a, b)) check_cap(++steps, "crs");
    }
    return crs_finish(std::move(a), std::move(b), steps);
}

namespace {

std::size_t dlog(const LVec& v) { return bit_size(l2sq(v)); }

// The pair (x, y) together with (a, b) = (x, y) * M and the quotient list behind M.
struct HgState {
    LVec x;
    LVec y;
    Unimodular M;
    std::vector<BigInt> qs;
};

void hg_push(HgState& s, BigInt q) {
    detail::euclid_step(s.x, s.y, q);
    push_quotient_left(s.M, q);
    s.qs.push_back(std::move(q));
}

// Undoes the newest quotient step.
void hg_pop(HgState& s) {
    BigInt q = std::move(s.qs.back());
    s.qs.pop_back();
    mpz_addmul(s.y.v1.get_mpz_t(), q.get_mpz_t(), s.x.v1.get_mpz_t());
    mpz_addmul(s.y.v2.get_mpz_t(), q.get_mpz_t(), s.x.v2.get_mpz_t());
    std::swap(s.x, s.y);
    mpz_submul(s.M.m11.get_mpz_t(), q.get_mpz_t(), s.M.m21.get_mpz_t());
    mpz_submul(s.M.m12.get_mpz_t(), q.get_mpz_t(), s.M.m22.get_mpz_t());
    std::swap(s.M.m11, s.M.m21);
    std::swap(s.M.m12, s.M.m22);
}

// Changes the newest quotient by delta.
void hg_adjust(HgState& s, const BigInt& delta) {
    mpz_submul(s.y.v1.get_mpz_t(), delta.get_mpz_t(), s.x.v1.get_mpz_t());
    mpz_submul(s.y.v2.get_mpz_t(), delta.get_mpz_t(), s.x.v2.get_mpz_t());
    mpz_addmul(s.M.m11.get_mpz_t(), delta.get_mpz_t(), s.M.m21.get_mpz_t());
    mpz_addmul(s.M.m12.get_mpz_t(), delta.get_mpz_t(), s.M.m22.get_mpz_t());
    s.qs.back() += delta;
}

// Repairs the quotients computed on truncated vectors until the newest step is an exact floor step,
// i.e. 0 <= <x, y> < |x|^2, popping steps whose quotient drops to zero.
void hg_validate(HgState& s) {
    while (!s.qs.empty()) {
        BigInt ip = inner(s.x, s.y);
        BigInt xx = l2sq(s.x);
        if (sgn(ip) < 0) {
            BigInt d = ceil_div(-ip, xx);
            if (d >= s.qs.back()) {
                hg_adjust(s, -s.qs.back());
                hg_pop(s);
            } else {
                hg_adjust(s, -d);
            }
            continue;
        }
        if (ip >= xx) {
            hg_adjust(s, floor_div(ip, xx));
            continue;
        }
        break;
    }
}

bool hg_terminal(const HgState& s) {
    // Truncated inputs may be dependent, in which case the sequence ends at a zero vector.
    if (s.y.is_zero()) return true;
    BigInt ip = inner(s.x, s.y);
    return sgn(ip) < 0 || ip < l2sq(s.y);
}

void hg_crs_step(HgState& s) { hg_push(s, floor_div(inner(s.x, s.y), l2sq(s.y))); }

bool hg_admissible(const LVec& a, const LVec& b) {
    return !b.is_zero() && sgn(inner(a, b)) >= 0 && l2sq(a) >= l2sq(b);
}

HgState hg_run(const LVec& a, const LVec& b, int c);

// Runs the recursion on the top bits of (x, y) and carries the result over to the full pair.
void hg_recurse_half(HgState& s, std::size_t shift, int c) {
    LVec x0, y0;
    mpz_cdiv_q_2exp(x0.v1.get_mpz_t(), s.x.v1.get_mpz_t(), shift);
    mpz_cdiv_q_2exp(x0.v2.get_mpz_t(), s.x.v2.get_mpz_t(), shift);
    mpz_fdiv_q_2exp(y0.v1.get_mpz_t(), s.y.v1.get_mpz_t(), shift);
    mpz_fdiv_q_2exp(y0.v2.get_mpz_t(), s.y.v2.get_mpz_t(), shift);
    if (l2sq(x0) == l2sq(y0) || !hg_admissible(x0, y0)) return;
    HgState sub = hg_run(x0, y0, c);
    if (sub.qs.empty()) return;
    Basis full = apply(Basis{s.x, s.y}, unimodular_inverse(sub.M));
    sub.x = std::move(full.a);
    sub.y = std::move(full.b);
    hg_validate(sub);
    if (sub.qs.empty()) return;
    s.x = std::move(sub.x);
    s.y = std::move(sub.y);
    s.M = compose(sub.M, s.M);
    for (auto& q : sub.qs) s.qs.push_back(std::move(q));
}

HgState hg_run(const LVec& a, const LVec& b, int c) {
    HgState s{a, b, Unimodular::identity(), {}};
    // Vectors more than 60 degrees apart are within a step or two of reduced: nothing to halve.
    BigInt ip = inner(a, b);
    if (sgn(ip) <= 0 || 4 * ip * ip <= l2sq(a) * l2sq(b)) return s;

    const std::size_t cc = static_cast<std::size_t>(c);
    const std::size_t da = dlog(a);
    const std::size_t n = (da + 1) / 2;
    const std::size_t m = (n + 1) / 2;
    const std::size_t t = n + 2 * cc;

    if (m > 8 && dlog(b) >= 2 * n - m + 2 * cc) hg_recurse_half(s, m, c);

    auto straddles = [&] { return dlog(s.x) >= t && dlog(s.y) < t; };
    if (!hg_terminal(s) && !straddles()) {
        hg_crs_step(s);
        const std::size_t n2 = (dlog(s.x) + 1) / 2;
        if (n2 > m) {
            const std::size_t m2 = 2 * (n2 - m);
            if (m2 > 8 && n2 > m2 && dlog(s.y) >= 2 * n2 - m2 + 2 * cc) hg_recurse_half(s, n2 - m2, c);
        }
    }

    // Step forward or back up until the pair straddles the threshold or is terminal.
    const bool can_straddle = da >= t;
    for (;;) {
        if (can_straddle && !s.qs.empty() && dlog(s.x) < t) {
            hg_pop(s);
            continue;
        }
        if (hg_terminal(s)) break;
        if (can_straddle && dlog(s.y) < t) break;
        hg_crs_step(s);
    }
    return s;
}

}  // namespace

HalfGaussianOutput half_gaussian_detailed(const LVec& a, const LVec& b, int c_param) {
    if (!hg_admissible(a, b)) throw precondition_error("half_gaussian requires an admissible pair");
    if (c_param < 0) throw precondition_error("half_gaussian requires c >= 0");
    HgState s = hg_run(a, b, c_param);
    return {std::move(s.M), std::move(s.qs)};
}

Unimodular half_gaussian(const LVec& a, const LVec& b, int c_param) {
    return half_gaussian_detailed(a, b, c_param).M;
}

ReductionResult half_gaussian_sbp(const Basis& B, int c_param) {
    detail::require_nonsingular(B);
    LVec a = B.a, b = B.b;
    std::uint64_t steps = 0;
    for (;;) {
        make_admissible(a, b);
        if (sgn(inner(a, b)) == 0) break;
        HgState s = hg_run(a, b, c_param);
        if (!s.qs.empty()) {
            steps += s.qs.size();
            a = std::move(s.x);
            b = std::move(s.y);
            make_admissible(a, b);
        }
        if (!crs_step(a, b)) break;
        check_cap(++steps, "half_gaussian_sbp");
    }
    return crs_finish(std::move(a), std::move(b), steps);
}

namespace {

HnfResult hnf_from_bezout(const Basis& B, const XgcdResult& e) {
    const BigInt& a1 = B.a.v1;
    const BigInt& a2 = B.a.v2;
    const BigInt& b1 = B.b.v1;
    const BigInt& b2 = B.b.v2;
    const BigInt& g = e.g;
    HnfResult r;
    r.U = {b2 / g, e.x, -a2 / g, e.y};
    BigInt num = a1 * b2 - a2 * b1;
    mpz_divexact(r.H.a.get_mpz_t(), num.get_mpz_t(), g.get_mpz_t());
    r.H.b = a1 * e.x + b1 * e.y;
    r.H.c = g;
    if (sgn(r.H.a) < 0) {
        r.H.a = -r.H.a;
        r.U.m11 = -r.U.m11;
        r.U.m21 = -r.U.m21;
    }
    BigInt k = floor_div(r.H.b, r.H.a);
    if (sgn(k) != 0) {
        r.H.b -= k * r.H.a;
        r.U.m12 -= k * r.U.m11;
        r.U.m22 -= k * r.U.m21;
    }
    return r;
}

HnfResult hnf_checked(const Basis& B, XgcdResult (*xgcd)(const BigInt&, const BigInt&)) {
    detail::require_nonsingular(B);
    if (sgn(B.a.v2) == 0 && sgn(B.b.v2) == 0) throw precondition_error("hnf requires a2 or b2 nonzero");
    return hnf_from_bezout(B, xgcd(B.a.v2, B.b.v2));
}

}  // namespace

HnfResult hnf_via_eea(const Basis& B) { return hnf_checked(B, xgcd_classical); }

HnfResult hnf_via_hgcd(const Basis& B) { return hnf_checked(B, xgcd_hgcd); }

const char* to_string(Pipeline p) {
    switch (p) {
        case Pipeline::eea_hnf_pareuc: return "EEA-HNF-ParEuc";
        case Pipeline::hgcd_hnf_pareuc: return "HGCD-HNF-ParEuc";
        case Pipeline::hgcd_hnf_hvecsbp: return "HGCD-HNF-HVecSBP";
        case Pipeline::cross_euc: return "CrossEuc";
        case Pipeline::hvec_sbp: return "HVecSBP";
        case Pipeline::gol_euc: return "GolEuc";
    }
    return "?";
}

Pipeline parse_pipeline(std::string_view name) {
    auto lower = [](std::string_view s) {
        std::string out(s);
        for (char& ch : out) ch = static_cast<char>(std::tolower(static_cast<unsigned char>(ch)));
        return out;
    };
    const std::string key = lower(name);
    for (Pipeline p : kAllPipelines)
        if (lower(to_string(p)) == key) return p;
    throw precondition_error("unknown pipeline: " + std::string(name));
}

namespace {

// Columns (h, 0) and (b, c) with h != 0 are already upper triangular; skip the conversion stage.
Basis hnf_stage(const Basis& B, bool use_hgcd) {
    if (sgn(B.a.v2) == 0) return B;
    return (use_hgcd ? hnf_via_hgcd(B) : hnf_via_eea(B)).H.to_basis();
}

}  // namespace

ReductionResult pipeline(Pipeline p, const Basis& B) {
    detail::require_nonsingular(B);
    switch (p) {
        case Pipeline::eea_hnf_pareuc: return cross_euc(hnf_stage(B, false));
        case Pipeline::hgcd_hnf_pareuc: return cross_euc(hnf_stage(B, true));
        case Pipeline::hgcd_hnf_hvecsbp: return hvec_sbp(hnf_stage(B, true));
        case Pipeline::cross_euc: return cross_euc(B);
        case Pipeline::hvec_sbp: return hvec_sbp(B);
        case Pipeline::gol_euc: return gol_euc(B);
    }
    throw precondition_error("unknown pipeline");
}

ReductionResult pipeline(std::string_view name, const Basis& B) { return pipeline(parse_pipeline(name), B); }

}  // namespace lat2red
