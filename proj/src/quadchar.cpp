#include "zf/quadchar.hpp"

#include <mutex>

namespace zf {

namespace {

constexpr long long kDiscCap = 9'000'000'000'000LL;   // squarefree check via trial division
constexpr unsigned long long kTableCap = 1'000'000ULL;

bool squarefree(long long m) {
    if (m < 0) m = -m;
    if (m == 0) return false;
    for (long long p = 2; p * p <= m; ++p) {
        if (m % p == 0) {
            m /= p;
            if (m % p == 0) return false;
        }
    }
    return true;
}

long long mod_positive(long long n, long long d) {
    long long r = n % d;
    return r < 0 ? r + d : r;
}

} // namespace

Discriminant make_discriminant(long long delta) {
    if (delta == 0 || delta == 1)
        throw NotFundamental("discriminant must be a nonzero integer != 1");
    if (delta > kDiscCap || delta < -kDiscCap)
        throw ResourceLimit("|discriminant| exceeds the supported cap of 9e12");
    long long mod4 = mod_positive(delta, 4);
    bool ok = false;
    if (mod4 == 1) {
        ok = squarefree(delta);
    } else if (mod4 == 0) {
        long long m = delta / 4;
        long long m4 = mod_positive(m, 4);
        ok = (m4 == 2 || m4 == 3) && squarefree(m);
    }
    if (!ok)
        throw NotFundamental(std::to_string(delta) + " is not a fundamental discriminant");
    Discriminant d;
    d.delta = delta;
    d.modulus = static_cast<unsigned long long>(delta < 0 ? -delta : delta);
    return d;
}

// Kronecker symbol by the standard reduction; delegated to GMP's
// battle-tested implementation.
int kronecker(long long a, long long n) {
    mpz_class za(static_cast<long>(a));
    return mpz_kronecker_si(za.get_mpz_t(), static_cast<long>(n));
}

struct QuadraticCharacter::Table {
    std::once_flag built;
    std::vector<int8_t> values;  // values[r] = chi(r), r in [0, d)
};

QuadraticCharacter::QuadraticCharacter(Discriminant disc)
    : disc_(disc), parity_(disc.delta > 0 ? 0 : 1), table_(std::make_shared<Table>()) {}

int QuadraticCharacter::chi(long long n) const {
    const long long d = static_cast<long long>(disc_.modulus);
    if (disc_.modulus <= kTableCap) {
        std::call_once(table_->built, [&] {
            table_->values.resize(disc_.modulus);
            for (unsigned long long r = 0; r < disc_.modulus; ++r)
                table_->values[r] = static_cast<int8_t>(kronecker(disc_.delta, static_cast<long long>(r)));
        });
        return table_->values[static_cast<size_t>(mod_positive(n, d))];
    }
    // chi is periodic mod d, so reduce first; kronecker handles n = 0 and n < 0
    return kronecker(disc_.delta, mod_positive(n, d));
}

int parity(const QuadraticCharacter& c) { return c.parity(); }

std::pair<PrecReal, PrecReal> gauss_sum(const QuadraticCharacter& c, int digits) {
    const unsigned long long d = c.disc().modulus;
    // absolute errors of the d summands stay below the result scale sqrt(d)
    int work = digits + 10 + static_cast<int>(mpz_sizeinbase(mpz_class(static_cast<unsigned long>(d)).get_mpz_t(), 10));
    PrecReal two_pi_over_d = pi(work).mul_pow2(1) / static_cast<long>(d);
    PrecReal re(work), im(work);
    for (unsigned long long a = 1; a <= d; ++a) {
        int ch = c.chi(static_cast<long long>(a));
        if (ch == 0) continue;
        PrecReal angle = two_pi_over_d * static_cast<long>(a);
        PrecReal cr = rcos(angle);
        PrecReal ci = rsin(angle);
        re = (ch > 0) ? re + cr : re - cr;
        im = (ch > 0) ? im + ci : im - ci;
    }
    return {re.round_to(digits), im.round_to(digits)};
}

} // namespace zf
