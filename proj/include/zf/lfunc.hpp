#ifndef ZF_LFUNC_HPP
#define ZF_LFUNC_HPP

// Numeric zeta(sigma) and L(sigma, chi) on the real axis sigma > 1 via
// Euler-Maclaurin summation, the exact closed forms at even integers, and the
// dyadic bracketing bounds (2^s-1)/(2^s-2) < zeta(s) < 2^s/(2^s-2).

#include <optional>
#include <string>
#include <utility>

#include "zf/bernoulli.hpp"
#include "zf/numkernel.hpp"
#include "zf/quadchar.hpp"

namespace zf {

// Euler-Maclaurin parameters actually used, recorded for debugging.
struct EmInfo {
    long cutoff = 0;            // M
    long correction_order = 0;  // number of B_{2j} correction terms
    int restarts = 0;           // times M was doubled to reach the target
};

// zeta(sigma) with relative error <= 10^(1-digits).  DomainError for
// sigma <= 1 + 1e-6.  For sigma beyond digits*ln10/ln2 the Dirichlet series
// is truncated after three terms (the geometric tail is below the target).
PrecReal zeta_real(const PrecReal& sigma, int digits, EmInfo* info = nullptr);

// Hurwitz zeta(sigma, a) = sum_{m>=0} (m+a)^(-sigma) for rational a in (0,1].
PrecReal hurwitz_zeta(const PrecReal& sigma, const BigRational& a, int digits, EmInfo* info = nullptr);

// L(sigma, chi) = d^(-sigma) sum_{a=1}^{d} chi(a) zeta(sigma, a/d).
PrecReal dirichlet_l(const QuadraticCharacter& c, const PrecReal& sigma, int digits);

// Exactly c * pi^k * (sqrt d)^eps with rational c.
struct ExactSpecialValue {
    BigRational coeff;
    unsigned pi_power = 0;
    int sqrt_disc = 0;  // 0 or 1; disc must be set when 1
    std::optional<Discriminant> disc;

    PrecReal render(int digits) const;
    std::string str() const;
};

// zeta(n) = (-1)^(1+n/2) (2 pi)^n B_n / (2 n!) for even n >= 2.
ExactSpecialValue zeta_even_exact(int n);

// L(n, chi) = (-1)^(1+n/2) (sqrt d / 2)(2 pi / d)^n B_{n,chi} / n! for even
// characters (Delta > 0) and even n >= 2; ParityError otherwise.
ExactSpecialValue l_even_exact(const QuadraticCharacter& c, int n);

// The bracketing pair ((2^s-1)/(2^s-2), 2^s/(2^s-2)); DomainError for sigma <= 1.
std::pair<PrecReal, PrecReal> zeta_dyadic_bounds(const PrecReal& sigma);

} // namespace zf

#endif
