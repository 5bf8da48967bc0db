#include "zf/numkernel.hpp"

#include <cmath>
#include <map>
#include <mutex>
#include <utility>

namespace zf {

namespace {

constexpr int kGuardDigits = 10;

void check_finite(mpfr_srcptr v, const char* what) {
    if (mpfr_inf_p(v))
        throw OverflowError(std::string(what) + ": result overflows the precision policy's range");
    if (mpfr_nan_p(v))
        throw InternalError(std::string(what) + ": result is NaN");
}

} // namespace

// ---------------------------------------------------------------------------
// BigRational
// ---------------------------------------------------------------------------

BigRational::BigRational(long num, long den) : v_(num, den) {
    if (den == 0) throw DomainError("BigRational: zero denominator");
    v_.canonicalize();
}

BigRational::BigRational(const mpz_class& num, const mpz_class& den) : v_(num, den) {
    if (den == 0) throw DomainError("BigRational: zero denominator");
    v_.canonicalize();
}

BigRational BigRational::from_string(const std::string& s) {
    mpq_class q;
    if (q.set_str(s, 10) != 0) throw DomainError("BigRational: cannot parse '" + s + "'");
    if (q.get_den() == 0) throw DomainError("BigRational: zero denominator in '" + s + "'");
    q.canonicalize();
    return BigRational(std::move(q));
}

BigRational BigRational::abs() const { return BigRational(mpq_class(::abs(v_))); }

BigRational BigRational::inv() const {
    if (is_zero()) throw DomainError("BigRational: inverse of zero");
    return BigRational(mpq_class(1) / v_);
}

BigRational BigRational::pow(long e) const {
    if (e < 0) return inv().pow(-e);
    mpz_class n, d;
    mpz_pow_ui(n.get_mpz_t(), v_.get_num().get_mpz_t(), static_cast<unsigned long>(e));
    mpz_pow_ui(d.get_mpz_t(), v_.get_den().get_mpz_t(), static_cast<unsigned long>(e));
    return BigRational(n, d);
}

BigRational operator/(const BigRational& a, const BigRational& b) {
    if (b.is_zero()) throw DomainError("BigRational: division by zero");
    return BigRational(mpq_class(a.v_ / b.v_));
}

BigRational& BigRational::operator/=(const BigRational& b) {
    if (b.is_zero()) throw DomainError("BigRational: division by zero");
    v_ /= b.v_;
    return *this;
}

std::string BigRational::str() const {
    if (is_integer()) return v_.get_num().get_str();
    return v_.get_num().get_str() + "/" + v_.get_den().get_str();
}

mpz_class binomial(unsigned long n, unsigned long k) {
    mpz_class r;
    mpz_bin_uiui(r.get_mpz_t(), n, k);
    return r;
}

mpz_class factorial(unsigned long n) {
    mpz_class r;
    mpz_fac_ui(r.get_mpz_t(), n);
    return r;
}

// ---------------------------------------------------------------------------
// PrecReal
// ---------------------------------------------------------------------------

mpfr_prec_t PrecReal::bits_for(int digits) {
    if (digits < 1) throw DomainError("PrecReal: precision must be >= 1 digit");
    // (D + guard) * log2(10), rounded up, plus a couple of spare bits.
    return static_cast<mpfr_prec_t>(std::ceil((digits + kGuardDigits) * 3.3219280948873626)) + 2;
}

PrecReal::PrecReal(int digits) : digits_(digits) {
    mpfr_init2(v_, bits_for(digits));
    mpfr_set_zero(v_, 1);
}

PrecReal::PrecReal(const PrecReal& o) : digits_(o.digits_) {
    mpfr_init2(v_, mpfr_get_prec(o.v_));
    mpfr_set(v_, o.v_, MPFR_RNDN);
}

PrecReal::PrecReal(PrecReal&& o) noexcept : digits_(o.digits_) {
    mpfr_init2(v_, mpfr_get_prec(o.v_));
    mpfr_swap(v_, o.v_);
}

PrecReal& PrecReal::operator=(const PrecReal& o) {
    if (this != &o) {
        mpfr_set_prec(v_, mpfr_get_prec(o.v_));
        mpfr_set(v_, o.v_, MPFR_RNDN);
        digits_ = o.digits_;
    }
    return *this;
}

PrecReal& PrecReal::operator=(PrecReal&& o) noexcept {
    if (this != &o) {
        mpfr_swap(v_, o.v_);
        digits_ = o.digits_;
    }
    return *this;
}

PrecReal::~PrecReal() { mpfr_clear(v_); }

PrecReal PrecReal::of(long v, int digits) {
    PrecReal r(digits);
    mpfr_set_si(r.v_, v, MPFR_RNDN);
    return r;
}

PrecReal PrecReal::of(unsigned long v, int digits) {
    PrecReal r(digits);
    mpfr_set_ui(r.v_, v, MPFR_RNDN);
    return r;
}

PrecReal PrecReal::of(const mpz_class& v, int digits) {
    PrecReal r(digits);
    mpfr_set_z(r.v_, v.get_mpz_t(), MPFR_RNDN);
    return r;
}

PrecReal PrecReal::of(const BigRational& q, int digits) {
    PrecReal r(digits);
    mpfr_set_q(r.v_, q.mpq().get_mpq_t(), MPFR_RNDN);
    return r;
}

PrecReal PrecReal::from_string(const std::string& decimal, int digits) {
    PrecReal r(digits);
    if (mpfr_set_str(r.v_, decimal.c_str(), 10, MPFR_RNDN) != 0)
        throw DomainError("PrecReal: cannot parse '" + decimal + "'");
    return r;
}

PrecReal PrecReal::round_to(int digits) const {
    PrecReal r(digits);
    mpfr_set(r.v_, v_, MPFR_RNDN);
    return r;
}

PrecReal PrecReal::abs() const {
    PrecReal r(digits_);
    mpfr_abs(r.v_, v_, MPFR_RNDN);
    return r;
}

PrecReal PrecReal::operator-() const {
    PrecReal r(digits_);
    mpfr_neg(r.v_, v_, MPFR_RNDN);
    return r;
}

PrecReal PrecReal::mul_pow2(long k) const {
    PrecReal r(digits_);
    mpfr_mul_2si(r.v_, v_, k, MPFR_RNDN);
    check_finite(r.v_, "mul_pow2");
    return r;
}

long PrecReal::exponent10_floor() const {
    if (is_zero()) throw DomainError("exponent10_floor: zero has no decimal exponent");
    mpfr_t t, r;
    mpfr_init2(t, 128);
    mpfr_init2(r, 128);
    mpfr_abs(t, v_, MPFR_RNDN);
    mpfr_log10(t, t, MPFR_RNDN);
    // snap to the nearest integer when within parse/rounding noise of it
    mpfr_round(r, t);
    mpfr_sub(r, t, r, MPFR_RNDN);
    mpfr_abs(r, r, MPFR_RNDN);
    long e;
    if (mpfr_cmp_d(r, 1e-25) < 0) {
        mpfr_round(t, t);
        e = mpfr_get_si(t, MPFR_RNDN);
    } else {
        mpfr_floor(t, t);
        e = mpfr_get_si(t, MPFR_RNDN);
    }
    mpfr_clear(t);
    mpfr_clear(r);
    return e;
}

std::string PrecReal::str(int sig_digits) const {
    if (sig_digits < 1) sig_digits = 1;
    if (is_zero()) return "0";
    mpfr_exp_t e;
    char* s = mpfr_get_str(nullptr, &e, 10, static_cast<size_t>(sig_digits), v_, MPFR_RNDN);
    std::string m(s);
    mpfr_free_str(s);
    std::string sign;
    if (!m.empty() && m[0] == '-') {
        sign = "-";
        m.erase(0, 1);
    }
    // m is the mantissa "d1d2..." of value 0.d1d2... * 10^e.
    long pe = static_cast<long>(e);
    std::string out;
    auto trim_fraction = [](std::string s) {
        if (s.find('.') == std::string::npos) return s;
        while (!s.empty() && s.back() == '0') s.pop_back();
        if (!s.empty() && s.back() == '.') s.pop_back();
        return s;
    };
    if (pe > 0 && pe <= sig_digits + 6) {
        // positional: digits before the point, zero-padded if needed
        if (static_cast<size_t>(pe) >= m.size())
            out = m + std::string(static_cast<size_t>(pe) - m.size(), '0');
        else
            out = trim_fraction(m.substr(0, static_cast<size_t>(pe)) + "." + m.substr(static_cast<size_t>(pe)));
    } else if (pe <= 0 && pe > -6) {
        out = trim_fraction("0." + std::string(static_cast<size_t>(-pe), '0') + m);
    } else {
        out = m.substr(0, 1);
        if (m.size() > 1) out += "." + m.substr(1);
        out = trim_fraction(out) + "e" + std::to_string(pe - 1);
    }
    return sign + out;
}

namespace {

int min_digits(const PrecReal& a, const PrecReal& b) { return std::min(a.digits(), b.digits()); }

} // namespace

#define ZF_BINOP(op, fn)                                         \
    PrecReal operator op(const PrecReal& a, const PrecReal& b) { \
        PrecReal r(min_digits(a, b));                            \
        fn(r.v_, a.v_, b.v_, MPFR_RNDN);                         \
        check_finite(r.v_, #fn);                                 \
        return r;                                                \
    }

ZF_BINOP(+, mpfr_add)
ZF_BINOP(-, mpfr_sub)
ZF_BINOP(*, mpfr_mul)
#undef ZF_BINOP

PrecReal operator/(const PrecReal& a, const PrecReal& b) {
    if (b.is_zero()) throw DomainError("PrecReal: division by zero");
    PrecReal r(min_digits(a, b));
    mpfr_div(r.v_, a.v_, b.v_, MPFR_RNDN);
    check_finite(r.v_, "mpfr_div");
    return r;
}

PrecReal operator+(const PrecReal& a, long b) {
    PrecReal r(a.digits_);
    mpfr_add_si(r.v_, a.v_, b, MPFR_RNDN);
    return r;
}
PrecReal operator-(const PrecReal& a, long b) {
    PrecReal r(a.digits_);
    mpfr_sub_si(r.v_, a.v_, b, MPFR_RNDN);
    return r;
}
PrecReal operator*(const PrecReal& a, long b) {
    PrecReal r(a.digits_);
    mpfr_mul_si(r.v_, a.v_, b, MPFR_RNDN);
    check_finite(r.v_, "mpfr_mul_si");
    return r;
}
PrecReal operator/(const PrecReal& a, long b) {
    if (b == 0) throw DomainError("PrecReal: division by zero");
    PrecReal r(a.digits_);
    mpfr_div_si(r.v_, a.v_, b, MPFR_RNDN);
    return r;
}
PrecReal operator-(long a, const PrecReal& b) {
    PrecReal r(b.digits_);
    mpfr_si_sub(r.v_, a, b.v_, MPFR_RNDN);
    return r;
}
PrecReal operator/(long a, const PrecReal& b) {
    if (b.is_zero()) throw DomainError("PrecReal: division by zero");
    PrecReal r(b.digits_);
    mpfr_si_div(r.v_, a, b.v_, MPFR_RNDN);
    check_finite(r.v_, "mpfr_si_div");
    return r;
}

// ---------------------------------------------------------------------------
// Constants and elementary functions
// ---------------------------------------------------------------------------

PrecReal pi(int digits) {
    static std::mutex mu;
    static std::map<int, PrecReal> memo;
    std::lock_guard<std::mutex> lock(mu);
    auto it = memo.find(digits);
    if (it != memo.end()) return it->second;
    PrecReal r(digits);
    mpfr_const_pi(const_cast<mpfr_ptr>(r.raw()), MPFR_RNDN);
    memo.emplace(digits, r);
    return r;
}

PrecReal euler_e(int digits) {
    static std::mutex mu;
    static std::map<int, PrecReal> memo;
    std::lock_guard<std::mutex> lock(mu);
    auto it = memo.find(digits);
    if (it != memo.end()) return it->second;
    PrecReal r(digits);
    mpfr_t one;
    mpfr_init2(one, 32);
    mpfr_set_ui(one, 1, MPFR_RNDN);
    mpfr_exp(const_cast<mpfr_ptr>(r.raw()), one, MPFR_RNDN);
    mpfr_clear(one);
    memo.emplace(digits, r);
    return r;
}

PrecReal pow10(long e, int digits) {
    PrecReal r(digits);
    mpfr_ui_pow_ui(r.v_, 10, static_cast<unsigned long>(e < 0 ? -e : e), MPFR_RNDN);
    if (e < 0) mpfr_si_div(r.v_, 1, r.v_, MPFR_RNDN);
    check_finite(r.v_, "pow10");
    return r;
}

PrecReal rexp(const PrecReal& x) {
    PrecReal r(x.digits_);
    mpfr_exp(r.v_, x.v_, MPFR_RNDN);
    check_finite(r.v_, "rexp");
    return r;
}

PrecReal rlog(const PrecReal& x) {
    if (mpfr_sgn(x.v_) <= 0) throw DomainError("rlog: argument must be positive");
    PrecReal r(x.digits_);
    mpfr_log(r.v_, x.v_, MPFR_RNDN);
    return r;
}

PrecReal rsqrt(const PrecReal& x) {
    if (mpfr_sgn(x.v_) < 0) throw DomainError("rsqrt: argument must be nonnegative");
    PrecReal r(x.digits_);
    mpfr_sqrt(r.v_, x.v_, MPFR_RNDN);
    return r;
}

PrecReal rpow(unsigned long base, const PrecReal& x) {
    if (base < 1) throw DomainError("rpow: base must be >= 1");
    PrecReal r(x.digits_);
    long e = 0;
    if (x.is_integer() && mpfr_fits_slong_p(x.v_, MPFR_RNDN)) e = mpfr_get_si(x.v_, MPFR_RNDN);
    if (e != 0 && e > -1000000 && e < 1000000) {
        // exact integer power, rounded once
        mpz_class p;
        mpz_ui_pow_ui(p.get_mpz_t(), base, static_cast<unsigned long>(e < 0 ? -e : e));
        mpfr_set_z(r.v_, p.get_mpz_t(), MPFR_RNDN);
        if (e < 0) mpfr_si_div(r.v_, 1, r.v_, MPFR_RNDN);
    } else {
        mpfr_ui_pow(r.v_, base, x.v_, MPFR_RNDN);
    }
    check_finite(r.v_, "rpow");
    return r;
}

PrecReal rpowr(const PrecReal& base, const PrecReal& x) {
    if (mpfr_sgn(base.v_) <= 0) throw DomainError("rpowr: base must be positive");
    PrecReal r(std::min(base.digits_, x.digits_));
    mpfr_pow(r.v_, base.v_, x.v_, MPFR_RNDN);
    check_finite(r.v_, "rpowr");
    return r;
}

PrecReal rcos(const PrecReal& x) {
    PrecReal r(x.digits_);
    mpfr_cos(r.v_, x.v_, MPFR_RNDN);
    return r;
}

PrecReal rsin(const PrecReal& x) {
    PrecReal r(x.digits_);
    mpfr_sin(r.v_, x.v_, MPFR_RNDN);
    return r;
}

PrecReal ratanh(const PrecReal& x) {
    if (mpfr_cmpabs_ui(x.v_, 1) >= 0) throw DomainError("ratanh: |x| must be < 1");
    PrecReal r(x.digits_);
    mpfr_atanh(r.v_, x.v_, MPFR_RNDN);
    return r;
}

} // namespace zf
