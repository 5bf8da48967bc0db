#ifndef ZF_BERNOULLI_HPP
#define ZF_BERNOULLI_HPP

// Exact rational Bernoulli numbers, classical and generalized, plus the
// L-function values at nonpositive integers they encode.
//
// Classical B_k come from the integer tangent-number triangle (exact, stable).
// Generalized B_{k,chi} are computed by two independent algorithms -- formal
// power-series division of the defining generating function, and the conductor
// formula d^(k-1) sum_a chi(a) B_k(a/d) -- which must agree exactly.

#include <vector>

#include "zf/numkernel.hpp"
#include "zf/quadchar.hpp"

namespace zf {

constexpr int kBernoulliCap = 10000;

struct BernoulliTable {
    std::vector<BigRational> values;  // B_0 .. B_n_max
    const BigRational& B(size_t k) const { return values.at(k); }
    size_t n_max() const { return values.size() - 1; }
};

struct GenBernoulliTable {
    Discriminant disc;
    std::vector<BigRational> values;  // B_{0,chi} .. B_{n_max,chi}
    const BigRational& B(size_t k) const { return values.at(k); }
    size_t n_max() const { return values.size() - 1; }
};

// Exact B_k for k <= n_max; ResourceLimit beyond the cap.
BernoulliTable bernoulli_numbers(int n_max, int cap = kBernoulliCap);

// Single cached value (process-wide cache, thread safe).
BigRational bernoulli_number(int k, int cap = kBernoulliCap);

// B_k / k! rendered at the given precision; cached per precision for the
// Euler-Maclaurin correction loops.  k must be even.
PrecReal bernoulli_over_factorial(int k, int digits, int cap = kBernoulliCap);

// B_n(x) = sum_k C(n,k) B_k x^(n-k), exact.
BigRational bernoulli_poly(int n, const BigRational& x);

// Exact B_{k,chi} for k <= n_max, dual-algorithm checked; results cached per
// character.  Throws InternalInconsistency if the two algorithms disagree.
GenBernoulliTable gen_bernoulli(const QuadraticCharacter& c, int n_max, int cap = kBernoulliCap);

// L(1-n, chi) = -B_{n,chi}/n, exact, n >= 1.
BigRational l_nonpositive(const QuadraticCharacter& c, int n);

} // namespace zf

#endif
