#ifndef ZF_QUADCHAR_HPP
#define ZF_QUADCHAR_HPP

// Fundamental discriminants and the real primitive Dirichlet character
// chi = (Delta/.) attached to the quadratic field of discriminant Delta,
// together with its parity and Gauss sum.

#include <cstdint>
#include <memory>
#include <utility>
#include <vector>

#include "zf/numkernel.hpp"

namespace zf {

// Signed fundamental discriminant Delta != 0,1 with
// Delta = 1 (mod 4) squarefree, or Delta = 4m, m = 2,3 (mod 4) squarefree.
struct Discriminant {
    long long delta = 0;
    unsigned long long modulus = 0;  // d = |delta|, the conductor of chi
};

// Validates and constructs; throws NotFundamental otherwise.
// |delta| is capped at 9e12 so the squarefree check stays a cheap trial division.
Discriminant make_discriminant(long long delta);

// chi(n) = Kronecker symbol (Delta/n): completely multiplicative, period d,
// zero exactly on gcd(n, d) > 1, chi(-1) = sign(Delta).
// Immutable and safe for concurrent use; a d-entry value table is built
// lazily (one-time init) for d <= 10^6 to make sieve-driven loops table-fast.
class QuadraticCharacter {
  public:
    explicit QuadraticCharacter(Discriminant disc);

    const Discriminant& disc() const { return disc_; }
    int parity() const { return parity_; }  // 0 even (Delta > 0), 1 odd (Delta < 0)
    int operator()(long long n) const { return chi(n); }
    int chi(long long n) const;

  private:
    struct Table;
    Discriminant disc_;
    int parity_;
    std::shared_ptr<Table> table_;
};

int parity(const QuadraticCharacter& c);

// g(chi) = sum_{a=1}^{d} chi(a) e^(2 pi i a / d) as (real, imaginary) parts.
// Equals (sqrt d, 0) for Delta > 0 and (0, sqrt d) for Delta < 0.
std::pair<PrecReal, PrecReal> gauss_sum(const QuadraticCharacter& c, int digits);

// Kronecker symbol (a/n) for word-sized inputs.
int kronecker(long long a, long long n);

} // namespace zf

#endif
