#ifndef ZF_DYADIC_HPP
#define ZF_DYADIC_HPP

// The dyadic functional-equation machinery:
//
//   q_1(s) = zeta(2s)/(zeta(s) L(s,chi)) prod_{p|d}(1+p^-s)   (split primes)
//   q_2(s) = L(s,chi)/zeta(s) prod_{p|d}(1-p^-s)^-1           (inert primes)
//   p_i(s) = exp(-sum_{n>=0} 2^(-n-1) log q_i(2^n s))
//
// with q_i available through three independent routes (analytic, exact even
// closed form, prime sum), a rigorously bounded truncation of the series, the
// functional-equation and factorization residual checks, and the convergence
// table.  On the real axis sigma > 1 both q_i lie in (0,1), so every log here
// is a real log of a positive number.

#include <string>
#include <utility>
#include <vector>

#include "zf/euler.hpp"
#include "zf/lfunc.hpp"
#include "zf/numkernel.hpp"
#include "zf/quadchar.hpp"

namespace zf {

enum class QKind { Q1, Q2 };

struct QRepresentation {
    QKind which;
    QuadraticCharacter character;
};

inline QRepresentation q1_of(const QuadraticCharacter& c) { return {QKind::Q1, c}; }
inline QRepresentation q2_of(const QuadraticCharacter& c) { return {QKind::Q2, c}; }

// q_i(sigma) by the analytic route (Euler-Maclaurin zeta and L).  The result
// is certified inside (0,1) by checking log q < 0; InternalError when the
// requested precision cannot separate it from 1.
PrecReal q_analytic(const QRepresentation& rep, const PrecReal& sigma, int digits);

// Exact closed form at even n >= 2 for Delta > 0 (ParityError otherwise):
//   q_1(n) = (-1)^(1+n) * 2 d^n / (C(2n,n) sqrt d) * B_{2n}/(B_{n,chi} B_n) * prod_{p|d}(1+p^-n)
//   q_2(n) = (sqrt d / d^n) * B_{n,chi}/B_n * prod_{p|d}(1-p^-n)^-1
// The (-1)^(1+n) factor on q_1 corrects the sign of the printed formula so the
// value is positive; pass apply_sign_fix = false to get the raw formula.
ExactSpecialValue q_exact_even(const QRepresentation& rep, int n, bool apply_sign_fix = true);

// log q_i(sigma) as the prime sum over the matching class,
// sum_{p <= P} log((1-p^-sigma)/(1+p^-sigma)), plus the integral tail bound
// 4 P^(1-sigma)/(sigma-1).  Requires sigma >= 2.
std::pair<PrecReal, PrecReal> log_q_prime_sum(const QRepresentation& rep, const PrecReal& sigma,
                                              int digits, unsigned long long prime_limit);

// The lemma bound 16/(2^sigma - 2) on |log q_i(sigma)|, sigma >= 2.
PrecReal log_q_bound(const PrecReal& sigma);

enum class TermPath { Analytic, PrimeSum };

struct SeriesTerm {
    int index = 0;          // n in 2^(-n-1) log q(2^n sigma)
    PrecReal argument;      // 2^n sigma
    TermPath path = TermPath::Analytic;
    PrecReal value;         // x_n = 2^(-n-1) log q(2^n sigma)
    unsigned long long prime_limit = 0;  // when path = PrimeSum
};

// Truncated dyadic series for p_i.  tail_bound bounds
// |log(true p_i) + sum of partial_terms| via the lemma majorant
// sum_{k>=N} 2^(-k-1) 16/(2^(2^k sigma)-2) plus the per-term evaluation slack.
struct TruncationResult {
    PrecReal value;
    int terms = 0;
    std::vector<SeriesTerm> partial_terms;
    PrecReal tail_bound;
};

// p_i(sigma) from N series terms; evaluator per term: analytic below the
// precision-dependent argument threshold, prime sum beyond it (P picked as the
// smallest limit putting the tail under the working target).
TruncationResult p_series(const QRepresentation& rep, const PrecReal& sigma, int terms, int digits);

// |p_i(2 sigma)/p_i(sigma)^2 - q_i(sigma)|, both sides from independent paths.
PrecReal fe_residual(const QRepresentation& rep, const PrecReal& sigma, int terms, int digits);

// Residuals of zeta(s) = prod_{p|d}(1-p^-s)^-1 p_1 p_2 and
// L(s,chi) = p_1(s) p_2(2s)/p_2(s), series values vs the lfunc path.
struct FactorizationResiduals {
    PrecReal r_zeta;
    PrecReal r_l;
};
FactorizationResiduals factorization_residuals(const QuadraticCharacter& c, const PrecReal& sigma,
                                               int terms, int digits);

struct ErrorTableRow {
    int terms = 0;            // N
    PrecReal error;           // |p_ref - partial_N|
    long error_exponent = 0;  // floor(log10 |error|)
    long tail_exponent = 0;   // floor(log10) of the lemma majorant at N
};

struct ErrorTable {
    std::vector<ErrorTableRow> rows;
    PrecReal reference;  // the (N_max + 3)-term value the rows are measured against
};

// Convergence table: one row per N in 1..n_max.  PrecisionInsufficient when
// the requested digits cannot place the reference below the smallest error.
ErrorTable error_table(const QRepresentation& rep, const PrecReal& sigma, int n_max, int digits);

// prime factors of d (for the ramified product)
std::vector<unsigned long long> ramified_primes(const Discriminant& disc);

} // namespace zf

#endif
