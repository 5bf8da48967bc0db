#ifndef ZF_NUMKERNEL_HPP
#define ZF_NUMKERNEL_HPP

// Precision-policy kernel: exact rationals (GMP) and fixed-decimal-precision
// reals (MPFR) with the elementary functions the rest of the library consumes.
//
// Contract: an operation producing a PrecReal at D decimal digits has relative
// error <= 10^(1-D).  Values carry 10 guard digits internally; algorithms that
// accumulate many terms request their own working precision on top and round
// down at the end.  Decimal digits (not bits) are the user-facing unit.

#include <gmpxx.h>
#include <mpfr.h>

#include <string>

#include "zf/errors.hpp"

namespace zf {

// Exact arbitrary-size rational, always canonical:
// gcd(|num|, den) = 1, den >= 1, zero is 0/1.
class BigRational {
  public:
    BigRational() : v_(0) {}
    BigRational(long n) : v_(static_cast<signed long>(n)) {}
    BigRational(long num, long den);
    explicit BigRational(const mpz_class& n) : v_(n) {}
    BigRational(const mpz_class& num, const mpz_class& den);
    static BigRational from_string(const std::string& s);  // "p/q" or "p"

    mpz_class num() const { return v_.get_num(); }
    mpz_class den() const { return v_.get_den(); }
    int sign() const { return sgn(v_); }
    bool is_zero() const { return sgn(v_) == 0; }
    bool is_integer() const { return v_.get_den() == 1; }
    BigRational abs() const;
    BigRational inv() const;
    BigRational pow(long e) const;  // negative e inverts; 0^negative -> DomainError

    std::string str() const;  // "p/q", or "p" when den == 1

    friend BigRational operator+(const BigRational& a, const BigRational& b) { return BigRational(a.v_ + b.v_); }
    friend BigRational operator-(const BigRational& a, const BigRational& b) { return BigRational(a.v_ - b.v_); }
    friend BigRational operator*(const BigRational& a, const BigRational& b) { return BigRational(a.v_ * b.v_); }
    friend BigRational operator/(const BigRational& a, const BigRational& b);
    BigRational operator-() const { return BigRational(mpq_class(-v_)); }
    BigRational& operator+=(const BigRational& b) { v_ += b.v_; return *this; }
    BigRational& operator-=(const BigRational& b) { v_ -= b.v_; return *this; }
    BigRational& operator*=(const BigRational& b) { v_ *= b.v_; return *this; }
    BigRational& operator/=(const BigRational& b);

    friend bool operator==(const BigRational& a, const BigRational& b) { return a.v_ == b.v_; }
    friend bool operator!=(const BigRational& a, const BigRational& b) { return a.v_ != b.v_; }
    friend bool operator<(const BigRational& a, const BigRational& b) { return a.v_ < b.v_; }
    friend bool operator<=(const BigRational& a, const BigRational& b) { return a.v_ <= b.v_; }
    friend bool operator>(const BigRational& a, const BigRational& b) { return a.v_ > b.v_; }
    friend bool operator>=(const BigRational& a, const BigRational& b) { return a.v_ >= b.v_; }

    const mpq_class& mpq() const { return v_; }

  private:
    explicit BigRational(mpq_class q) : v_(std::move(q)) { v_.canonicalize(); }
    mpq_class v_;
};

mpz_class binomial(unsigned long n, unsigned long k);
mpz_class factorial(unsigned long n);

// Arbitrary-precision real with a declared decimal precision D.
// Immutable after construction; operations are pure; the precision of a
// binary operation's result is the minimum of the operand precisions.
class PrecReal {
  public:
    explicit PrecReal(int digits);  // zero at the given precision
    PrecReal() : PrecReal(1) {}     // zero at 1 digit; real uses pass a precision
    PrecReal(const PrecReal& o);
    PrecReal(PrecReal&& o) noexcept;
    PrecReal& operator=(const PrecReal& o);
    PrecReal& operator=(PrecReal&& o) noexcept;
    ~PrecReal();

    static PrecReal of(long v, int digits);
    static PrecReal of(unsigned long v, int digits);
    static PrecReal of(const mpz_class& v, int digits);
    static PrecReal of(const BigRational& q, int digits);
    static PrecReal from_string(const std::string& decimal, int digits);

    int digits() const { return digits_; }
    PrecReal round_to(int digits) const;

    bool is_zero() const { return mpfr_zero_p(v_) != 0; }
    int sign() const { return mpfr_sgn(v_); }
    PrecReal abs() const;
    PrecReal operator-() const;

    // Exact scaling by 2^k (no rounding).
    PrecReal mul_pow2(long k) const;

    double to_double() const { return mpfr_get_d(v_, MPFR_RNDN); }
    long exponent10_floor() const;  // floor(log10|x|); DomainError on zero
    std::string str() const { return str(digits_); }
    std::string str(int sig_digits) const;

    friend PrecReal operator+(const PrecReal& a, const PrecReal& b);
    friend PrecReal operator-(const PrecReal& a, const PrecReal& b);
    friend PrecReal operator*(const PrecReal& a, const PrecReal& b);
    friend PrecReal operator/(const PrecReal& a, const PrecReal& b);
    friend PrecReal operator+(const PrecReal& a, long b);
    friend PrecReal operator-(const PrecReal& a, long b);
    friend PrecReal operator*(const PrecReal& a, long b);
    friend PrecReal operator/(const PrecReal& a, long b);
    friend PrecReal operator-(long a, const PrecReal& b);
    friend PrecReal operator/(long a, const PrecReal& b);

    friend bool operator==(const PrecReal& a, const PrecReal& b) { return mpfr_cmp(a.v_, b.v_) == 0; }
    friend bool operator<(const PrecReal& a, const PrecReal& b) { return mpfr_cmp(a.v_, b.v_) < 0; }
    friend bool operator<=(const PrecReal& a, const PrecReal& b) { return mpfr_cmp(a.v_, b.v_) <= 0; }
    friend bool operator>(const PrecReal& a, const PrecReal& b) { return mpfr_cmp(a.v_, b.v_) > 0; }
    friend bool operator>=(const PrecReal& a, const PrecReal& b) { return mpfr_cmp(a.v_, b.v_) >= 0; }
    bool less_than(long v) const { return mpfr_cmp_si(v_, v) < 0; }
    bool greater_than(long v) const { return mpfr_cmp_si(v_, v) > 0; }
    bool equals(long v) const { return mpfr_cmp_si(v_, v) == 0; }
    bool is_integer() const { return mpfr_integer_p(v_) != 0; }

    mpfr_srcptr raw() const { return v_; }
    static mpfr_prec_t bits_for(int digits);

    friend PrecReal pow10(long e, int digits);
    friend PrecReal rexp(const PrecReal& x);
    friend PrecReal rlog(const PrecReal& x);
    friend PrecReal rsqrt(const PrecReal& x);
    friend PrecReal rpow(unsigned long base, const PrecReal& x);
    friend PrecReal rpowr(const PrecReal& base, const PrecReal& x);
    friend PrecReal rcos(const PrecReal& x);
    friend PrecReal rsin(const PrecReal& x);
    friend PrecReal ratanh(const PrecReal& x);

  private:
    mpfr_t v_;
    int digits_;
};

// pi and e are memoized per precision (first writer wins, thread safe).
PrecReal pi(int digits);
PrecReal euler_e(int digits);

// 10^e, exact in binary up to rounding at the stated precision.
PrecReal pow10(long e, int digits);

PrecReal rexp(const PrecReal& x);                         // e^x; OverflowError if not representable
PrecReal rlog(const PrecReal& x);                         // DomainError for x <= 0
PrecReal rsqrt(const PrecReal& x);                        // DomainError for x < 0
PrecReal rpow(unsigned long base, const PrecReal& x);     // base >= 1; exact power for integer x
PrecReal rpowr(const PrecReal& base, const PrecReal& x);  // base > 0
PrecReal rcos(const PrecReal& x);
PrecReal rsin(const PrecReal& x);
PrecReal ratanh(const PrecReal& x);  // |x| < 1; keeps relative accuracy for tiny x

} // namespace zf

#endif
