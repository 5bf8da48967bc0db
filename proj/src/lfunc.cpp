#include "zf/lfunc.hpp"

#include <algorithm>
#include <cmath>

namespace zf {

namespace {

// guard digits for a straight accumulation of up to ~(3D + 200) rounded terms
int work_digits(int digits) {
    int g = 14;
    long terms = 3L * digits + 200;
    while (terms > 1) {
        terms >>= 1;
        ++g;
    }
    return digits + g;
}

// Euler-Maclaurin for zeta(sigma, a), all operands at `W` decimal digits.
//   sum_{m<M} (m+a)^-s + (M+a)^(1-s)/(s-1) + (M+a)^-s/2
//     + sum_j B_{2j}/(2j)! (s)_{2j-1} (M+a)^(-s-2j+1)
// For real s > 1 the remainder is bounded by the first omitted correction
// term, so the loop stops once that drops below the relative target; if the
// asymptotic terms bottom out first, M is doubled and the sum restarted.
PrecReal em_hurwitz(const PrecReal& sigma_in, const BigRational& a, int W, EmInfo* info) {
    PrecReal sigma = sigma_in.round_to(W);
    PrecReal neg_sigma = -sigma;
    double sd = std::min(sigma.to_double(), 1e9);
    long M = std::max<long>(20, static_cast<long>(std::ceil(W * 2.302585 / sd)) + 10);
    int restarts = 0;
    while (true) {
        PrecReal direct(W);
        for (long m = M - 1; m >= 0; --m) {
            PrecReal base = PrecReal::of(BigRational(m) + a, W);
            direct = direct + rpowr(base, neg_sigma);
        }
        PrecReal base_m = PrecReal::of(BigRational(M) + a, W);
        PrecReal pow_m = rpowr(base_m, neg_sigma);  // (M+a)^-s
        PrecReal total = direct + base_m * pow_m / (sigma - 1L) + pow_m.mul_pow2(-1);
        PrecReal eps = total.abs() * pow10(-W, W);

        PrecReal inv_sq = 1L / (base_m * base_m);
        PrecReal poch = sigma;               // s(s+1)...(s+2j-2), starting at j=1
        PrecReal pow_q = pow_m / base_m;     // (M+a)^(-s-2j+1), starting at j=1
        PrecReal prev(W);
        bool have_prev = false;
        bool converged = false;
        long used_j = 0;
        for (long j = 1;; ++j) {
            PrecReal term = bernoulli_over_factorial(static_cast<int>(2 * j), W) * poch * pow_q;
            PrecReal ta = term.abs();
            if (ta <= eps) {
                converged = true;  // remainder is bounded by this, the first omitted term
                used_j = j - 1;
                break;
            }
            if (have_prev && ta >= prev) break;  // asymptotic floor reached short of target
            total = total + term;
            prev = ta;
            have_prev = true;
            poch = poch * (sigma + (2 * j - 1)) * (sigma + 2 * j);
            pow_q = pow_q * inv_sq;
        }
        if (converged) {
            if (info) {
                info->cutoff = M;
                info->correction_order = used_j;
                info->restarts = restarts;
            }
            return total;
        }
        M *= 2;
        ++restarts;
        if (restarts > 40) throw InternalError("em_hurwitz: no convergence; this should be unreachable");
    }
}

void check_sigma_gt1(const PrecReal& sigma, const char* who) {
    if (mpfr_cmp_d(sigma.raw(), 1.000001) <= 0)
        throw DomainError(std::string(who) + ": sigma must exceed 1 (by more than 1e-6)");
}

} // namespace

PrecReal zeta_real(const PrecReal& sigma, int digits, EmInfo* info) {
    check_sigma_gt1(sigma, "zeta_real");
    int W = work_digits(digits);
    // beyond this point 2^-sigma is under the target: three terms suffice,
    // with a geometric bound sum_{n>=4} n^-s < 2 * 4^-s on the omitted tail
    if (mpfr_cmp_d(sigma.raw(), digits * 3.321929) > 0) {
        PrecReal s = sigma.round_to(W);
        PrecReal v = PrecReal::of(1L, W) + rpow(2, -s) + rpow(3, -s);
        if (info) *info = EmInfo{};
        return v.round_to(digits);
    }
    return em_hurwitz(sigma, BigRational(1), W, info).round_to(digits);
}

PrecReal hurwitz_zeta(const PrecReal& sigma, const BigRational& a, int digits, EmInfo* info) {
    check_sigma_gt1(sigma, "hurwitz_zeta");
    if (a.sign() <= 0 || a > BigRational(1))
        throw DomainError("hurwitz_zeta: a must lie in (0, 1]");
    return em_hurwitz(sigma, a, work_digits(digits), info).round_to(digits);
}

PrecReal dirichlet_l(const QuadraticCharacter& c, const PrecReal& sigma, int digits) {
    check_sigma_gt1(sigma, "dirichlet_l");
    const long d = static_cast<long>(c.disc().modulus);
    int W = work_digits(digits) + 2 * static_cast<int>(std::log10(static_cast<double>(d)) + 1);
    PrecReal sum(W);
    for (long a = 1; a <= d; ++a) {
        int ch = c.chi(a);
        if (ch == 0) continue;
        PrecReal h = em_hurwitz(sigma, BigRational(a, d), W, nullptr);
        sum = (ch > 0) ? sum + h : sum - h;
    }
    PrecReal scale = rpow(static_cast<unsigned long>(d), -sigma.round_to(W));
    return (scale * sum).round_to(digits);
}

PrecReal ExactSpecialValue::render(int digits) const {
    int W = digits + 10;
    PrecReal v = PrecReal::of(coeff, W);
    if (pi_power > 0) v = v * rpowr(pi(W), PrecReal::of(static_cast<long>(pi_power), W));
    if (sqrt_disc) {
        if (!disc) throw InternalError("ExactSpecialValue: sqrt factor without a discriminant");
        v = v * rsqrt(PrecReal::of(static_cast<long>(disc->modulus), W));
    }
    return v.round_to(digits);
}

std::string ExactSpecialValue::str() const {
    std::string s = coeff.is_integer() ? coeff.str() : "(" + coeff.str() + ")";
    if (pi_power == 1) s += " * pi";
    else if (pi_power > 1) s += " * pi^" + std::to_string(pi_power);
    if (sqrt_disc && disc) s += " * sqrt(" + std::to_string(disc->modulus) + ")";
    return s;
}

ExactSpecialValue zeta_even_exact(int n) {
    if (n < 2 || n % 2 != 0) throw DomainError("zeta_even_exact: n must be even and >= 2");
    BigRational c = BigRational(2).pow(n) * bernoulli_number(n) /
                    (BigRational(2) * BigRational(factorial(static_cast<unsigned long>(n))));
    if ((n / 2) % 2 == 0) c = -c;  // (-1)^(1+n/2)
    if (c.sign() <= 0) throw InternalError("zeta_even_exact: coefficient must be positive");
    ExactSpecialValue v;
    v.coeff = c;
    v.pi_power = static_cast<unsigned>(n);
    v.sqrt_disc = 0;
    return v;
}

ExactSpecialValue l_even_exact(const QuadraticCharacter& c, int n) {
    if (c.disc().delta < 0)
        throw ParityError("l_even_exact: closed form needs an even character (Delta > 0)");
    if (n < 2 || n % 2 != 0)
        throw ParityError("l_even_exact: closed form needs even n >= 2");
    BigRational b = gen_bernoulli(c, n).B(static_cast<size_t>(n));
    BigRational coeff = BigRational(2).pow(n - 1) * b /
                        (BigRational(static_cast<long>(c.disc().modulus)).pow(n) *
                         BigRational(factorial(static_cast<unsigned long>(n))));
    if ((n / 2) % 2 == 0) coeff = -coeff;  // (-1)^(1+n/2)
    if (coeff.sign() <= 0) throw InternalError("l_even_exact: coefficient must be positive");
    ExactSpecialValue v;
    v.coeff = coeff;
    v.pi_power = static_cast<unsigned>(n);
    v.sqrt_disc = 1;
    v.disc = c.disc();
    return v;
}

std::pair<PrecReal, PrecReal> zeta_dyadic_bounds(const PrecReal& sigma) {
    if (mpfr_cmp_si(sigma.raw(), 1) <= 0) throw DomainError("zeta_dyadic_bounds: sigma must exceed 1");
    int W = sigma.digits() + 10;
    PrecReal t = rpow(2, sigma.round_to(W));
    PrecReal lower = (t - 1L) / (t - 2L);
    PrecReal upper = t / (t - 2L);
    return {lower.round_to(sigma.digits()), upper.round_to(sigma.digits())};
}

} // namespace zf
