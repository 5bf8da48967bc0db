#include <doctest.h>
#include <zf/lfunc.hpp>

#include "oracles.hpp"

using zf::BigRational;
using zf::make_discriminant;
using zf::PrecReal;
using zf::QuadraticCharacter;

namespace {

PrecReal sig(const char* s, int digits = 40) { return PrecReal::from_string(s, digits); }

// plain truncated sum with a two-term integral correction; error O(M^-4)
PrecReal zeta3_sum_oracle() {
    const int W = 40;
    const long M = 4000;
    PrecReal s(W);
    for (long m = M; m >= 1; --m) s = s + 1L / (PrecReal::of(m, W) * m * m);
    s = s + 1L / (PrecReal::of(M, W) * M * 2L);
    s = s - 1L / (PrecReal::of(M, W) * M * M * 2L);
    return s;
}

} // namespace

TEST_SUITE("lfunc") {

TEST_CASE("zeta at even integers matches pi closed forms") {
    PrecReal p = zf::pi(30);
    CHECK(oracle::within(zf::zeta_real(sig("2"), 12), p * p / 6L, -11));
    CHECK(zf::zeta_real(sig("2"), 12).str() == "1.64493406685");
    CHECK(oracle::within(zf::zeta_real(sig("4"), 12), p * p * p * p / 90L, -11));
    CHECK(zf::zeta_real(sig("4"), 12).str() == "1.08232323371");
}

TEST_CASE("zeta(3) against the summation oracle") {
    CHECK(oracle::within(zf::zeta_real(sig("3"), 12), zeta3_sum_oracle(), -11));
    CHECK(zf::zeta_real(sig("3"), 12).str() == "1.20205690316");
}

TEST_CASE("zeta against mpfr's independent implementation") {
    for (const char* s : {"1.5", "2.25", "3", "7.125", "19", "33.5", "64"}) {
        PrecReal sigma = sig(s, 60);
        PrecReal mine = zf::zeta_real(sigma, 50);
        PrecReal theirs(55);
        mpfr_zeta(const_cast<mpfr_ptr>(theirs.raw()), sigma.raw(), MPFR_RNDN);
        CHECK(oracle::within(mine, theirs, -48));
    }
}

TEST_CASE("zeta domain and large-sigma truncation") {
    CHECK_THROWS_AS((void)zf::zeta_real(sig("1"), 10), zf::DomainError);
    CHECK_THROWS_AS((void)zf::zeta_real(sig("0.5"), 10), zf::DomainError);
    // sigma far past the precision target: 1 + 2^-s + 3^-s path
    PrecReal v = zf::zeta_real(sig("200"), 20);
    PrecReal expect = PrecReal::of(1L, 40) + zf::rpow(2, sig("-200", 40)) + zf::rpow(3, sig("-200", 40));
    CHECK(oracle::within(v, expect, -19));
}

TEST_CASE("euler-maclaurin provenance is recorded") {
    zf::EmInfo info;
    (void)zf::zeta_real(sig("2"), 30, &info);
    CHECK(info.cutoff >= 20);
    CHECK(info.correction_order > 0);
}

TEST_CASE("hurwitz special cases") {
    CHECK(oracle::within(zf::hurwitz_zeta(sig("2"), BigRational(1), 30), zf::zeta_real(sig("2"), 30), -28));
    // zeta(s, 1/2) = (2^s - 1) zeta(s)
    CHECK(oracle::within(zf::hurwitz_zeta(sig("2"), BigRational(1, 2), 30),
                         zf::zeta_real(sig("2"), 35) * 3L, -28));
    CHECK_THROWS_AS((void)zf::hurwitz_zeta(sig("2"), BigRational(5, 4), 10), zf::DomainError);
    CHECK_THROWS_AS((void)zf::hurwitz_zeta(sig("2"), BigRational(0), 10), zf::DomainError);
}

TEST_CASE("hurwitz zeta(3, 1/4) against direct summation") {
    const int W = 40;
    const long M = 3000;
    PrecReal s(W);
    for (long m = M; m >= 0; --m) {
        PrecReal base = PrecReal::of(4L * m + 1, W) / 4L;
        s = s + 1L / (base * base * base);
    }
    // integral tail bound: remainder in (0, (M+1/4)^-2 / 2); take midpoint, check coarsely
    PrecReal mid = PrecReal::of(M, W);
    s = s + 1L / (mid * mid * 2L);
    CHECK(oracle::within(zf::hurwitz_zeta(sig("3"), BigRational(1, 4), 20), s, -6));
    CHECK(zf::hurwitz_zeta(sig("3"), BigRational(1, 4), 20) > PrecReal::of(64L, 20));
}

TEST_CASE("dirichlet L spot values") {
    QuadraticCharacter c5(make_discriminant(5));
    // exact closed form L(2, chi_5) = 4 sqrt(5) pi^2 / 125, derived from B_{2,chi} = 4/5
    PrecReal p = zf::pi(40);
    PrecReal expect = p * p * zf::rsqrt(PrecReal::of(5L, 40)) * 4L / 125L;
    CHECK(oracle::within(zf::dirichlet_l(c5, sig("2"), 12), expect, -11));

    // Catalan's constant by the alternating series, error below the next term
    QuadraticCharacter cm4(make_discriminant(-4));
    PrecReal beta2(40);
    for (long k = 400000; k >= 0; --k) {
        PrecReal t = 1L / (PrecReal::of(2 * k + 1, 40) * (2 * k + 1));
        beta2 = (k % 2 == 0) ? beta2 + t : beta2 - t;
    }
    CHECK(oracle::within(zf::dirichlet_l(cm4, sig("2"), 12), beta2, -10));
    CHECK(zf::dirichlet_l(cm4, sig("2"), 12).str() == "0.915965594177");

    // far right of the strip: L = 1 + chi(2) 2^-s + ...
    PrecReal far = zf::dirichlet_l(c5, sig("64"), 30);
    CHECK((far - 1L).abs() < oracle::pow10(-19, 30));
    CHECK(far < PrecReal::of(1L, 30));  // chi_5(2) = -1 makes the deviation negative
}

TEST_CASE("zeta_even_exact") {
    auto z2 = zf::zeta_even_exact(2);
    CHECK(z2.coeff == BigRational(1, 6));
    CHECK(z2.pi_power == 2);
    CHECK(z2.sqrt_disc == 0);
    CHECK(zf::zeta_even_exact(4).coeff == BigRational(1, 90));
    CHECK(zf::zeta_even_exact(12).coeff == BigRational(691, 638512875));
    CHECK_THROWS_AS(zf::zeta_even_exact(3), zf::DomainError);
    CHECK_THROWS_AS(zf::zeta_even_exact(0), zf::DomainError);
}

TEST_CASE("l_even_exact") {
    QuadraticCharacter c5(make_discriminant(5));
    auto l2 = zf::l_even_exact(c5, 2);
    CHECK(l2.coeff == BigRational(4, 125));
    CHECK(l2.pi_power == 2);
    CHECK(l2.sqrt_disc == 1);
    // cross-path agreement with the analytic evaluator
    CHECK(oracle::within(l2.render(30), zf::dirichlet_l(c5, sig("2"), 30), -28));
    QuadraticCharacter cm4(make_discriminant(-4));
    CHECK_THROWS_AS(zf::l_even_exact(cm4, 2), zf::ParityError);
    CHECK_THROWS_AS(zf::l_even_exact(c5, 3), zf::ParityError);
}

TEST_CASE("property: positivity of exact coefficients") {
    for (int n = 2; n <= 30; n += 2) CHECK(zf::zeta_even_exact(n).coeff.sign() > 0);
    for (long delta : {5L, 8L, 12L, 13L}) {
        QuadraticCharacter c(make_discriminant(delta));
        for (int n = 2; n <= 16; n += 2) CHECK(zf::l_even_exact(c, n).coeff.sign() > 0);
    }
}

TEST_CASE("property: exact and numeric paths agree") {
    const int D = 40;
    for (int n : {2, 4, 6, 8, 10, 12}) {
        PrecReal s = PrecReal::of(static_cast<long>(n), D + 5);
        CHECK(oracle::within(zf::zeta_even_exact(n).render(D), zf::zeta_real(s, D), -(D - 3)));
    }
    for (long delta : {5L, 8L, 12L, 13L}) {
        QuadraticCharacter c(make_discriminant(delta));
        for (int n : {2, 4, 6, 8}) {
            PrecReal s = PrecReal::of(static_cast<long>(n), D + 5);
            CHECK(oracle::within(zf::l_even_exact(c, n).render(D), zf::dirichlet_l(c, s, D), -(D - 3)));
        }
    }
}

TEST_CASE("zeta_dyadic_bounds endpoints and bracketing") {
    auto [l2, u2] = zf::zeta_dyadic_bounds(sig("2", 30));
    CHECK(oracle::within(l2, PrecReal::of(3L, 30) / 2L, -28));
    CHECK(oracle::within(u2, PrecReal::of(2L, 30), -28));
    auto [l3, u3] = zf::zeta_dyadic_bounds(sig("3", 30));
    CHECK(oracle::within(l3, PrecReal::of(7L, 30) / 6L, -28));
    CHECK(oracle::within(u3, PrecReal::of(4L, 30) / 3L, -28));
    auto [l10, u10] = zf::zeta_dyadic_bounds(sig("10", 30));
    CHECK(oracle::within(l10, PrecReal::of(1023L, 30) / 1022L, -28));
    CHECK(oracle::within(u10, PrecReal::of(1024L, 30) / 1022L, -28));
    CHECK_THROWS_AS(zf::zeta_dyadic_bounds(sig("1")), zf::DomainError);

    // strict bracketing on a grid over (1.01, 64]
    for (int i = 1; i <= 40; ++i) {
        PrecReal sigma = (PrecReal::of(101L, 40) + PrecReal::of(static_cast<long>(i), 40) * 157L) / 100L;
        PrecReal z = zf::zeta_real(sigma, 30);
        auto [lo, hi] = zf::zeta_dyadic_bounds(sigma.round_to(30));
        CHECK(lo < z);
        CHECK(z < hi);
    }
}

TEST_CASE("property: hurwitz consistency with zeta") {
    for (long d : {3L, 5L}) {
        for (const char* s : {"2", "3"}) {
            PrecReal sum(45);
            for (long a = 1; a <= d; ++a)
                sum = sum + zf::hurwitz_zeta(sig(s, 45), BigRational(a, d), 40);
            PrecReal scaled = zf::rpow(static_cast<unsigned long>(d), -sig(s, 45)) * sum;
            CHECK(oracle::within(scaled, zf::zeta_real(sig(s, 45), 40), -37));
        }
    }
}

} // TEST_SUITE
