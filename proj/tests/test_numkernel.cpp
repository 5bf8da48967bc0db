#include <doctest.h>
#include <zf/numkernel.hpp>

#include <random>

#include "oracles.hpp"

using zf::BigRational;
using zf::PrecReal;

TEST_SUITE("numkernel") {

TEST_CASE("pi against Machin oracle") {
    CHECK(oracle::within(zf::pi(1), PrecReal::of(3L, 10), 0));
    CHECK(oracle::within(zf::pi(12), oracle::machin_pi(20), -11));
    CHECK(zf::pi(12).str() == "3.14159265359");
    CHECK(oracle::within(zf::pi(50), oracle::machin_pi(60), -49));
}

TEST_CASE("pi squared over six equals basel sum") {
    // independent summation oracle: sum_{m<=M} m^-2 + 1/M - 1/(2M^2) + 1/(6M^3),
    // remainder below M^-5
    const int digits = 50;
    const long M = 20000;
    PrecReal s(digits + 10);
    for (long m = M; m >= 1; --m) s = s + 1L / (PrecReal::of(m, digits + 10) * m);
    s = s + PrecReal::of(1L, digits + 10) / M;
    s = s - 1L / (PrecReal::of(M, digits + 10) * M * 2L);
    s = s + 1L / (PrecReal::of(M, digits + 10) * M * M * 6L);
    PrecReal p = zf::pi(digits);
    CHECK(oracle::within(p * p / 6L, s, -20));
}

TEST_CASE("rexp oracle values") {
    PrecReal zero(12);
    CHECK(zf::rexp(zero).equals(1));
    CHECK(oracle::within(zf::rexp(PrecReal::of(1L, 12)), oracle::taylor_e(20), -11));
    // x = ln 2 -> 2 to D-2 digits
    PrecReal ln2 = zf::rlog(PrecReal::of(2L, 30));
    CHECK(oracle::within(zf::rexp(ln2), PrecReal::of(2L, 30), -28));
}

TEST_CASE("rexp overflow") {
    CHECK_THROWS_AS((void)zf::rexp(PrecReal::from_string("1e40", 20)), zf::OverflowError);
}

TEST_CASE("rlog oracle values and domain") {
    CHECK(zf::rlog(PrecReal::of(1L, 15)).is_zero());
    CHECK(oracle::within(zf::rlog(zf::euler_e(40)), PrecReal::of(1L, 40), -38));
    PrecReal four = PrecReal::of(4L, 25);
    PrecReal two = PrecReal::of(2L, 25);
    CHECK(oracle::within(zf::rlog(four), zf::rlog(two) * 2L, -23));
    CHECK_THROWS_AS((void)zf::rlog(PrecReal(10)), zf::DomainError);
    CHECK_THROWS_AS((void)zf::rlog(PrecReal::of(-3L, 10)), zf::DomainError);
}

TEST_CASE("rsqrt oracle values and domain") {
    CHECK(zf::rsqrt(PrecReal(12)).is_zero());
    CHECK(zf::rsqrt(PrecReal::of(25L, 12)).equals(5));
    BigRational root5 = oracle::newton_sqrt(BigRational(5), BigRational(9, 4), 9);
    CHECK(oracle::within(zf::rsqrt(PrecReal::of(5L, 12)), PrecReal::of(root5, 40), -11));
    CHECK(zf::rsqrt(PrecReal::of(5L, 12)).str() == "2.2360679775");
    CHECK_THROWS_AS((void)zf::rsqrt(PrecReal::of(-1L, 10)), zf::DomainError);
}

TEST_CASE("rpow oracle values") {
    CHECK(zf::rpow(7, PrecReal(12)).equals(1));
    CHECK(zf::rpow(2, PrecReal::of(10L, 12)).equals(1024));
    // 2^(-5/2) = 1/(4 sqrt 2)
    BigRational root2 = oracle::newton_sqrt(BigRational(2), BigRational(3, 2), 9);
    PrecReal expect = 1L / (PrecReal::of(root2, 40) * 4L);
    CHECK(oracle::within(zf::rpow(2, PrecReal::from_string("-2.5", 12)), expect, -12));
    CHECK(zf::rpow(2, PrecReal::from_string("-2.5", 12)).str() == "0.176776695297");
}

TEST_CASE("property: exp/log round trip on a grid") {
    const int D = 30;
    PrecReal tol = oracle::pow10(1 - D, D) * 4L;
    for (long i = 1; i <= 40; ++i) {
        PrecReal x = PrecReal::of(i * 7 + 3, D) / 11L;
        PrecReal back = zf::rexp(zf::rlog(x));
        CHECK((back - x).abs() <= x * tol);
    }
}

TEST_CASE("property: rpow at integer exponents is the exact power") {
    const int D = 35;
    for (long m = -6; m <= 6; ++m) {
        for (unsigned long b : {2ul, 3ul, 10ul}) {
            PrecReal got = zf::rpow(b, PrecReal::of(m, D));
            BigRational exact = BigRational(static_cast<long>(b)).pow(m);
            CHECK(oracle::within(got, PrecReal::of(exact, D + 5), -(D - 2)));
        }
    }
}

TEST_CASE("property: monotonicity of rexp and rlog") {
    const int D = 20;
    PrecReal prev_exp = zf::rexp(PrecReal::from_string("0.05", D));
    PrecReal prev_log = zf::rlog(PrecReal::from_string("0.05", D));
    for (int i = 1; i <= 60; ++i) {
        PrecReal x = PrecReal::of(5L + 7L * i, D) / 100L;
        PrecReal e = zf::rexp(x);
        PrecReal l = zf::rlog(x);
        CHECK(e > prev_exp);
        CHECK(l > prev_log);
        prev_exp = e;
        prev_log = l;
    }
}

TEST_CASE("property: BigRational arithmetic is exact") {
    std::mt19937_64 rng(20240811);
    std::uniform_int_distribution<long> num(-1000000, 1000000);
    std::uniform_int_distribution<long> den(1, 1000000);
    for (int i = 0; i < 300; ++i) {
        long a = num(rng), b = den(rng), c = num(rng), d = den(rng);
        BigRational lhs = (BigRational(a, b) + BigRational(c, d)) * BigRational(b * 1L) * BigRational(d * 1L);
        BigRational rhs = BigRational(a) * BigRational(d) + BigRational(c) * BigRational(b);
        CHECK(lhs == rhs);
    }
}

TEST_CASE("BigRational canonical form") {
    BigRational q(6, -4);
    CHECK(q.num() == -3);
    CHECK(q.den() == 2);
    CHECK(BigRational(0, 7).str() == "0");
    CHECK(BigRational(22, 11).str() == "2");
    CHECK(BigRational::from_string("-10/15").str() == "-2/3");
    CHECK_THROWS_AS(BigRational(1, 0), zf::DomainError);
}

TEST_CASE("precision propagates as the minimum") {
    PrecReal a = PrecReal::of(1L, 40);
    PrecReal b = PrecReal::of(3L, 12);
    CHECK((a / b).digits() == 12);
    CHECK((a + b).digits() == 12);
    CHECK(zf::rexp(a).digits() == 40);
}

TEST_CASE("string formatting") {
    CHECK(PrecReal::of(1024L, 10).str() == "1024");
    CHECK(PrecReal::from_string("0.25", 10).str(3) == "0.25");
    CHECK(PrecReal::from_string("1e-30", 10).str(3) == "1e-30");
    CHECK(PrecReal(10).str() == "0");
    CHECK(PrecReal::from_string("-1.5", 10).str(2) == "-1.5");
    CHECK(PrecReal::from_string("1e-30", 20).exponent10_floor() == -30);
    CHECK(PrecReal::of(999L, 20).exponent10_floor() == 2);
}

} // TEST_SUITE
