#include <doctest.h>
#include <zf/euler.hpp>

#include "oracles.hpp"

using zf::BigRational;
using zf::make_discriminant;
using zf::PrecReal;
using zf::PrimeSplit;
using zf::QuadraticCharacter;

namespace {

PrecReal sig(const char* s, int digits = 40) { return PrecReal::from_string(s, digits); }

bool is_prime_trial(unsigned long long n) {
    if (n < 2) return false;
    for (unsigned long long d = 2; d * d <= n; ++d)
        if (n % d == 0) return false;
    return true;
}

} // namespace

TEST_SUITE("euler") {

TEST_CASE("sieve basics") {
    CHECK(zf::sieve(10) == std::vector<unsigned long long>{2, 3, 5, 7});
    CHECK(zf::sieve(2) == std::vector<unsigned long long>{2});
    CHECK_THROWS_AS((void)zf::sieve(1), zf::DomainError);
    CHECK_THROWS_AS((void)zf::sieve(200, 100), zf::ResourceLimit);
}

TEST_CASE("sieve against trial division") {
    auto primes = zf::sieve(3000);
    std::vector<unsigned long long> expect;
    for (unsigned long long n = 2; n <= 3000; ++n)
        if (is_prime_trial(n)) expect.push_back(n);
    CHECK(primes == expect);
}

TEST_CASE("pi(10^6) = 78498") {
    CHECK(zf::sieve(1000000).size() == 78498);
}

TEST_CASE("segmented enumeration crosses segment boundaries correctly") {
    // a window spanning the first segment boundary
    unsigned long long count = 0, direct = 0;
    zf::for_each_prime((1ULL << 20) + 5000, [&](unsigned long long) { ++count; });
    for (auto p : zf::sieve((1ULL << 20) + 5000)) (void)p, ++direct;
    CHECK(count == direct);
}

TEST_CASE("classify") {
    QuadraticCharacter c5(make_discriminant(5));
    CHECK(zf::classify(c5, 5).cls == PrimeSplit::Ramified);
    CHECK(zf::classify(c5, 11).cls == PrimeSplit::Split);
    CHECK(zf::classify(c5, 2).cls == PrimeSplit::Inert);
}

TEST_CASE("property: classification partitions the primes") {
    for (long delta : {5L, 8L, 12L, 13L, -4L, -8L}) {
        QuadraticCharacter c(make_discriminant(delta));
        for (auto p : zf::sieve(10000)) {
            auto pc = zf::classify(c, p);
            bool divides = c.disc().modulus % p == 0;
            CHECK((pc.cls == PrimeSplit::Ramified) == divides);
        }
    }
}

TEST_CASE("p_product spot values") {
    QuadraticCharacter c5(make_discriminant(5));
    // no split prime <= 10 for delta 5: empty product, tail 2 * 10^-1 / 1
    auto empty = zf::p_product(c5, 1, sig("2"), 10, 30);
    CHECK(empty.value.equals(1));
    CHECK(oracle::within(empty.tail_bound, PrecReal::from_string("0.2", 30), -25));

    // chi(2) = chi(3) = -1: (1-1/4)^-1 (1-1/9)^-1 = 3/2
    auto inert = zf::p_product(c5, 2, sig("2"), 3, 30);
    CHECK(oracle::within(inert.value, PrecReal::of(3L, 30) / 2L, -27));
}

TEST_CASE("property: monotone tail bound") {
    QuadraticCharacter c5(make_discriminant(5));
    auto a = zf::p_product(c5, 1, sig("2"), 100000, 20);
    auto b = zf::p_product(c5, 1, sig("2"), 1000000, 20);
    CHECK(b.tail_bound < a.tail_bound);
}

TEST_CASE("dedekind zeta closed form at sigma 2, delta 5") {
    QuadraticCharacter c5(make_discriminant(5));
    PrecReal p = zf::pi(50);
    PrecReal expect = (p * p / 6L) * (p * p * zf::rsqrt(PrecReal::of(5L, 50)) * 4L / 125L);
    CHECK(oracle::within(zf::dedekind_zeta(c5, sig("2"), 30), expect, -28));
    // far right everything is 1 + O(2^-sigma)
    CHECK((zf::dedekind_zeta(c5, sig("64"), 30) - 1L).abs() < oracle::pow10(-18, 30));
}

TEST_CASE("property: the factorization identity holds at truncation level") {
    // |log zeta - log(prod_{p|d}(1-p^-s)^-1 p1 p2)| <= tail1 + tail2
    for (long delta : {5L, 12L}) {
        QuadraticCharacter c(make_discriminant(delta));
        for (const char* s : {"2", "3"}) {
            const unsigned long long P = 100000;
            auto p1 = zf::p_product(c, 1, sig(s), P, 40);
            auto p2 = zf::p_product(c, 2, sig(s), P, 40);
            PrecReal ram = PrecReal::of(1L, 40);
            for (auto p : zf::sieve(static_cast<unsigned long long>(c.disc().modulus)))
                if (c.disc().modulus % p == 0)
                    ram = ram / (1L - zf::rpow(static_cast<unsigned long>(p), -sig(s, 40)));
            PrecReal lhs = zf::rlog(zf::zeta_real(sig(s), 40));
            PrecReal rhs = zf::rlog(ram * p1.value * p2.value);
            CHECK((lhs - rhs).abs() <= (p1.tail_bound + p2.tail_bound).round_to(40));
        }
    }
}

TEST_CASE("property: L1 = p1^2 and L2(s) = p2(2s) at the same prime cutoff") {
    QuadraticCharacter c8(make_discriminant(8));
    const unsigned long long P = 2000;
    auto p1 = zf::p_product(c8, 1, sig("2"), P, 35);
    auto p2_2s = zf::p_product(c8, 2, sig("4"), P, 35);
    // direct L1, L2 truncations over the same primes
    PrecReal l1 = PrecReal::of(1L, 45), l2 = PrecReal::of(1L, 45);
    for (auto p : zf::sieve(P)) {
        int ch = c8.chi(static_cast<long long>(p));
        if (ch == 1) {
            PrecReal f = 1L - zf::rpow(static_cast<unsigned long>(p), sig("-2", 45));
            l1 = l1 / (f * f);
        } else if (ch == -1) {
            l2 = l2 / (1L - zf::rpow(static_cast<unsigned long>(p), sig("-4", 45)));
        }
    }
    CHECK(oracle::within(p1.value * p1.value, l1, -30));
    CHECK(oracle::within(p2_2s.value, l2, -30));
}

} // TEST_SUITE
