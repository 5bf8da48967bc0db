#ifndef ZF_EULER_HPP
#define ZF_EULER_HPP

// Prime sieve, prime classification by chi, and truncated Euler products for
// p_1 (split primes) and p_2 (inert primes) with rigorous tail bounds -- the
// slow, independent ground truth the dyadic series is checked against.

#include <functional>
#include <vector>

#include "zf/lfunc.hpp"
#include "zf/numkernel.hpp"
#include "zf/quadchar.hpp"

namespace zf {

constexpr unsigned long long kSieveCap = 100'000'000ULL;

enum class PrimeSplit { Split, Inert, Ramified };

struct PrimeClass {
    unsigned long long prime;
    PrimeSplit cls;
};

// All primes <= limit, ascending.  ResourceLimit above the cap.
std::vector<unsigned long long> sieve(unsigned long long limit, unsigned long long cap = kSieveCap);

// Segment-driven enumeration (2^20-entry segments) without materializing
// the full prime list.
void for_each_prime(unsigned long long limit, const std::function<void(unsigned long long)>& fn,
                    unsigned long long cap = kSieveCap);

// Split / Inert / Ramified by chi(p) = +1 / -1 / 0.
PrimeClass classify(const QuadraticCharacter& c, unsigned long long p);

// A truncated infinite product together with a bound on |log(true/truncated)|.
struct ProductTruncation {
    PrecReal value;
    unsigned long long prime_limit;
    PrecReal tail_bound;
};

// prod over matching primes p <= prime_limit of (1 - p^-sigma)^-1, with the
// integral tail bound 2 P^(1-sigma)/(sigma-1) over all omitted integers.
// which = 1 takes split primes, which = 2 inert primes.
ProductTruncation p_product(const QuadraticCharacter& c, int which, const PrecReal& sigma,
                            unsigned long long prime_limit, int digits);

// zeta_K(sigma) = zeta(sigma) L(sigma, chi).
PrecReal dedekind_zeta(const QuadraticCharacter& c, const PrecReal& sigma, int digits);

} // namespace zf

#endif
