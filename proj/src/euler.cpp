#include "zf/euler.hpp"

#include <cmath>

namespace zf {

namespace {

constexpr unsigned long long kSegmentSize = 1ULL << 20;

std::vector<unsigned long long> small_sieve(unsigned long long limit) {
    std::vector<char> composite(limit + 1, 0);
    std::vector<unsigned long long> primes;
    for (unsigned long long i = 2; i <= limit; ++i) {
        if (composite[i]) continue;
        primes.push_back(i);
        for (unsigned long long j = i * i; j <= limit; j += i) composite[j] = 1;
    }
    return primes;
}

} // namespace

void for_each_prime(unsigned long long limit, const std::function<void(unsigned long long)>& fn,
                    unsigned long long cap) {
    if (limit < 2) throw DomainError("for_each_prime: limit must be >= 2");
    if (limit > cap)
        throw ResourceLimit("prime limit " + std::to_string(limit) + " exceeds the cap " + std::to_string(cap));
    auto base = small_sieve(static_cast<unsigned long long>(std::sqrt(static_cast<double>(limit))) + 1);
    std::vector<char> seg;
    for (unsigned long long low = 2; low <= limit; low += kSegmentSize) {
        unsigned long long high = std::min(limit, low + kSegmentSize - 1);
        seg.assign(high - low + 1, 0);
        for (unsigned long long p : base) {
            if (p * p > high) break;
            unsigned long long start = std::max(p * p, ((low + p - 1) / p) * p);
            for (unsigned long long j = start; j <= high; j += p) seg[j - low] = 1;
        }
        for (unsigned long long i = low; i <= high; ++i)
            if (!seg[i - low]) fn(i);
    }
}

std::vector<unsigned long long> sieve(unsigned long long limit, unsigned long long cap) {
    std::vector<unsigned long long> primes;
    if (limit >= 2) primes.reserve(static_cast<size_t>(1.2 * limit / std::max(1.0, std::log(static_cast<double>(limit)))) + 16);
    for_each_prime(limit, [&](unsigned long long p) { primes.push_back(p); }, cap);
    return primes;
}

PrimeClass classify(const QuadraticCharacter& c, unsigned long long p) {
    int ch = c.chi(static_cast<long long>(p));
    PrimeSplit cls = ch > 0 ? PrimeSplit::Split : (ch < 0 ? PrimeSplit::Inert : PrimeSplit::Ramified);
    return {p, cls};
}

ProductTruncation p_product(const QuadraticCharacter& c, int which, const PrecReal& sigma,
                            unsigned long long prime_limit, int digits) {
    if (which != 1 && which != 2) throw DomainError("p_product: which must be 1 or 2");
    if (mpfr_cmp_si(sigma.raw(), 1) <= 0) throw DomainError("p_product: sigma must exceed 1");
    const int W = digits + 14 + static_cast<int>(std::log2(static_cast<double>(prime_limit) + 2));
    const int want = which == 1 ? 1 : -1;
    PrecReal neg_sigma = -sigma.round_to(W);
    PrecReal denom = PrecReal::of(1L, W);  // prod (1 - p^-sigma)
    for_each_prime(prime_limit, [&](unsigned long long p) {
        if (c.chi(static_cast<long long>(p)) != want) return;
        denom = denom * (1L - rpow(static_cast<unsigned long>(p), neg_sigma));
    });
    PrecReal sig_w = sigma.round_to(W);
    PrecReal tail = rpowr(PrecReal::of(static_cast<unsigned long>(prime_limit), W), 1L - sig_w).mul_pow2(1) / (sig_w - 1L);
    return {(1L / denom).round_to(digits), prime_limit, tail.round_to(digits)};
}

PrecReal dedekind_zeta(const QuadraticCharacter& c, const PrecReal& sigma, int digits) {
    int W = digits + 10;
    return (zeta_real(sigma, W) * dirichlet_l(c, sigma, W)).round_to(digits);
}

} // namespace zf
