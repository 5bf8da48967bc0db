#include "zf/dyadic.hpp"

#include <algorithm>
#include <cmath>

namespace zf {

namespace {

// Smallest prime cutoff whose tail bound 4 P^(1-s)/(s-1) is below 10^-(W+2),
// clamped to the sieve budget the threshold function guarantees is enough.
unsigned long long choose_prime_limit(double arg, int W) {
    if (arg > 1e9) return 3;
    double log10p = (std::log10(4.0) + (W + 2) - std::log10(arg - 1)) / (arg - 1);
    if (log10p < 0.5) return 3;
    return static_cast<unsigned long long>(std::pow(10.0, std::min(log10p, 6.51))) + 3;
}

// Arguments below this go through the analytic evaluator; above it the prime
// sum reaches the working target with the budget above.  The floor of 16
// keeps small arguments (where exact Bernoulli data is cheap) analytic.
double analytic_threshold(int W) { return std::max(16.0, 1.0 + (W + 4) / 6.0); }

int series_work_digits(int digits, int terms) {
    int g = 16;
    int t = terms + 4;
    while (t > 1) {
        t >>= 1;
        ++g;
    }
    return digits + g;
}

PrecReal log_q_analytic(const QRepresentation& rep, const PrecReal& sigma, int W) {
    const QuadraticCharacter& c = rep.character;
    PrecReal s = sigma.round_to(W);
    PrecReal log_z = rlog(zeta_real(s, W));
    PrecReal log_l = rlog(dirichlet_l(c, s, W));
    PrecReal acc(W);
    if (rep.which == QKind::Q1) {
        acc = rlog(zeta_real(s.mul_pow2(1), W)) - log_z - log_l;
        for (auto p : ramified_primes(c.disc()))
            acc = acc + rlog(PrecReal::of(1L, W) + rpow(static_cast<unsigned long>(p), -s));
    } else {
        acc = log_l - log_z;
        for (auto p : ramified_primes(c.disc()))
            acc = acc - rlog(PrecReal::of(1L, W) - rpow(static_cast<unsigned long>(p), -s));
    }
    return acc;
}

// log q as the prime sum, all at W digits.  log((1-x)/(1+x)) = -2 atanh(x)
// keeps full relative accuracy when p^-sigma is far below 1.
std::pair<PrecReal, PrecReal> log_q_prime_sum_w(const QRepresentation& rep, const PrecReal& sigma,
                                                int W, unsigned long long prime_limit) {
    const int want = rep.which == QKind::Q1 ? 1 : -1;
    PrecReal s = sigma.round_to(W);
    PrecReal neg_s = -s;
    PrecReal sum(W);
    for_each_prime(prime_limit, [&](unsigned long long p) {
        if (rep.character.chi(static_cast<long long>(p)) != want) return;
        sum = sum - ratanh(rpow(static_cast<unsigned long>(p), neg_s)).mul_pow2(1);
    });
    PrecReal tail = rpowr(PrecReal::of(static_cast<unsigned long>(prime_limit), W), 1L - s).mul_pow2(2) / (s - 1L);
    tail = tail * 1001L / 1000L;  // upward slack over the rounding of the bound itself
    return {sum, tail};
}

// sum_{k >= from} 2^(-k-1) 16/(2^(2^k s)-2); successive terms at least halve,
// so the loop closes with twice its last computed term.
PrecReal lemma_majorant_tail(const PrecReal& sigma_w, int from, int W) {
    PrecReal total(W);
    PrecReal floor_eps = pow10(-(W + 25), W);
    for (int k = from; k < from + 300; ++k) {
        PrecReal arg = sigma_w.mul_pow2(k);
        if (mpfr_cmp_d(arg.raw(), 1e15) > 0) break;  // far past underflow of the term
        PrecReal m = (PrecReal::of(16L, W) / (rpowr(PrecReal::of(2L, W), arg) - 2L)).mul_pow2(-k - 1);
        if (m <= floor_eps) {
            total = total + m.mul_pow2(1);  // closes the remaining geometric tail
            return total;
        }
        total = total + m;
    }
    return total;
}

void require_sigma_above_1(const PrecReal& sigma, const char* who) {
    if (mpfr_cmp_si(sigma.raw(), 1) <= 0)
        throw DomainError(std::string(who) + ": sigma must exceed 1");
}

} // namespace

std::vector<unsigned long long> ramified_primes(const Discriminant& disc) {
    std::vector<unsigned long long> out;
    unsigned long long m = disc.modulus;
    for (unsigned long long p = 2; p * p <= m; ++p) {
        if (m % p == 0) {
            out.push_back(p);
            while (m % p == 0) m /= p;
        }
    }
    if (m > 1) out.push_back(m);
    return out;
}

PrecReal q_analytic(const QRepresentation& rep, const PrecReal& sigma, int digits) {
    require_sigma_above_1(sigma, "q_analytic");
    int W = digits + 8;
    PrecReal logq = log_q_analytic(rep, sigma, W);
    if (logq.sign() >= 0)
        throw InternalError("q_analytic: computed q_i outside (0,1); raise the precision "
                            "(log q = " + logq.str(8) + " at sigma = " + sigma.str(8) + ")");
    return rexp(logq).round_to(digits);
}

ExactSpecialValue q_exact_even(const QRepresentation& rep, int n, bool apply_sign_fix) {
    const QuadraticCharacter& c = rep.character;
    if (c.disc().delta < 0)
        throw ParityError("q_exact_even: closed form needs an even character (Delta > 0)");
    if (n < 2 || n % 2 != 0)
        throw ParityError("q_exact_even: closed form needs even n >= 2");
    const long d = static_cast<long>(c.disc().modulus);
    BigRational bn = bernoulli_number(n);
    BigRational bnchi = gen_bernoulli(c, n).B(static_cast<size_t>(n));
    ExactSpecialValue v;
    v.sqrt_disc = 1;
    v.pi_power = 0;
    v.disc = c.disc();
    if (rep.which == QKind::Q2) {
        BigRational ram(1);
        for (auto p : ramified_primes(c.disc()))
            ram = ram / (BigRational(1) - BigRational(static_cast<long>(p)).pow(-n));
        v.coeff = bnchi / (bn * BigRational(d).pow(n)) * ram;
    } else {
        BigRational ram(1);
        for (auto p : ramified_primes(c.disc()))
            ram = ram * (BigRational(1) + BigRational(static_cast<long>(p)).pow(-n));
        BigRational central(binomial(static_cast<unsigned long>(2 * n), static_cast<unsigned long>(n)));
        v.coeff = BigRational(2) * BigRational(d).pow(n - 1) * bernoulli_number(2 * n) /
                  (central * bnchi * bn) * ram;
        if (apply_sign_fix && n % 2 == 0) v.coeff = -v.coeff;  // the (-1)^(1+n) correction
        if (apply_sign_fix && v.coeff.sign() <= 0)
            throw InternalError("q_exact_even: corrected q_1 coefficient must be positive");
    }
    return v;
}

std::pair<PrecReal, PrecReal> log_q_prime_sum(const QRepresentation& rep, const PrecReal& sigma,
                                              int digits, unsigned long long prime_limit) {
    if (mpfr_cmp_si(sigma.raw(), 2) < 0)
        throw DomainError("log_q_prime_sum: sigma must be >= 2");
    auto [value, tail] = log_q_prime_sum_w(rep, sigma, digits + 10, prime_limit);
    return {value.round_to(digits), tail.round_to(digits)};
}

PrecReal log_q_bound(const PrecReal& sigma) {
    if (mpfr_cmp_si(sigma.raw(), 2) < 0)
        throw DomainError("log_q_bound: sigma must be >= 2");
    int W = sigma.digits() + 10;
    return (PrecReal::of(16L, W) / (rpowr(PrecReal::of(2L, W), sigma.round_to(W)) - 2L))
        .round_to(sigma.digits());
}

TruncationResult p_series(const QRepresentation& rep, const PrecReal& sigma, int terms, int digits) {
    require_sigma_above_1(sigma, "p_series");
    if (terms < 1) throw DomainError("p_series: at least one term is required");
    const int W = series_work_digits(digits, terms);
    const double threshold = analytic_threshold(W);
    PrecReal s_w = sigma.round_to(W);
    TruncationResult out;
    out.terms = terms;
    PrecReal sum(W);
    for (int k = 0; k < terms; ++k) {
        PrecReal arg = s_w.mul_pow2(k);
        double arg_d = arg.to_double();
        SeriesTerm term;
        term.index = k;
        term.argument = arg.round_to(digits);
        PrecReal logq(W);
        if (arg_d < threshold) {
            term.path = TermPath::Analytic;
            logq = log_q_analytic(rep, arg, W);
        } else {
            term.path = TermPath::PrimeSum;
            term.prime_limit = choose_prime_limit(arg_d, W);
            logq = log_q_prime_sum_w(rep, arg, W, term.prime_limit).first;
        }
        PrecReal x = logq.mul_pow2(-(k + 1));
        sum = sum + x;
        term.value = x.round_to(digits);
        out.partial_terms.push_back(std::move(term));
    }
    out.value = rexp(-sum).round_to(digits);
    out.tail_bound = (lemma_majorant_tail(s_w, terms, W) + pow10(2 - W, W)).round_to(digits);
    return out;
}

PrecReal fe_residual(const QRepresentation& rep, const PrecReal& sigma, int terms, int digits) {
    require_sigma_above_1(sigma, "fe_residual");
    const int W = digits + 8;
    TruncationResult doubled = p_series(rep, sigma.mul_pow2(1), terms, W);
    TruncationResult straight = p_series(rep, sigma, terms, W);
    PrecReal q = q_analytic(rep, sigma, W);
    return (doubled.value / (straight.value * straight.value) - q).abs().round_to(digits);
}

FactorizationResiduals factorization_residuals(const QuadraticCharacter& c, const PrecReal& sigma,
                                               int terms, int digits) {
    require_sigma_above_1(sigma, "factorization_residuals");
    const int W = digits + 8;
    PrecReal s = sigma.round_to(W);
    TruncationResult p1 = p_series(q1_of(c), s, terms, W);
    TruncationResult p2 = p_series(q2_of(c), s, terms, W);
    TruncationResult p2d = p_series(q2_of(c), s.mul_pow2(1), terms, W);
    PrecReal ram = PrecReal::of(1L, W);
    for (auto p : ramified_primes(c.disc()))
        ram = ram / (PrecReal::of(1L, W) - rpow(static_cast<unsigned long>(p), -s));
    FactorizationResiduals r{PrecReal(digits), PrecReal(digits)};
    r.r_zeta = (zeta_real(s, W) - ram * p1.value * p2.value).abs().round_to(digits);
    r.r_l = (dirichlet_l(c, s, W) - p1.value * p2d.value / p2.value).abs().round_to(digits);
    return r;
}

ErrorTable error_table(const QRepresentation& rep, const PrecReal& sigma, int n_max, int digits) {
    require_sigma_above_1(sigma, "error_table");
    if (n_max < 1) throw DomainError("error_table: n_max must be >= 1");
    const int ref_terms = n_max + 3;
    const int W = series_work_digits(digits, ref_terms);
    const double threshold = analytic_threshold(W);
    PrecReal s_w = sigma.round_to(W);

    // shared term values x_k, k = 0 .. ref_terms-1
    std::vector<PrecReal> xs;
    xs.reserve(ref_terms);
    for (int k = 0; k < ref_terms; ++k) {
        PrecReal arg = s_w.mul_pow2(k);
        double arg_d = arg.to_double();
        PrecReal logq(W);
        if (arg_d < threshold) {
            logq = log_q_analytic(rep, arg, W);
        } else {
            logq = log_q_prime_sum_w(rep, arg, W, choose_prime_limit(arg_d, W)).first;
        }
        xs.push_back(logq.mul_pow2(-(k + 1)));
    }

    PrecReal partial(W);
    std::vector<PrecReal> values;  // exp(-S_N) for N = 1..ref_terms
    values.reserve(ref_terms);
    for (int k = 0; k < ref_terms; ++k) {
        partial = partial + xs[static_cast<size_t>(k)];
        values.push_back(rexp(-partial));
    }
    const PrecReal& ref = values.back();

    ErrorTable table;
    table.reference = ref.round_to(digits);
    for (int n = 1; n <= n_max; ++n) {
        ErrorTableRow row;
        row.terms = n;
        PrecReal err = (ref - values[static_cast<size_t>(n - 1)]).abs();
        row.error = err.round_to(digits);
        row.error_exponent = err.is_zero() ? 0 : err.exponent10_floor();
        row.tail_exponent = lemma_majorant_tail(s_w, n, W).exponent10_floor();
        if (err.is_zero() || err <= ref * pow10(-(W - 8), W))
            throw PrecisionInsufficient(
                "error_table: row N=" + std::to_string(n) + " is below the working precision; "
                "raise digits (currently " + std::to_string(digits) + ")");
        table.rows.push_back(std::move(row));
    }

    // the reference itself must sit below the smallest tabulated error
    PrecReal ref_uncertainty = ref * (lemma_majorant_tail(s_w, ref_terms, W) + pow10(2 - W, W));
    if (!(ref_uncertainty.mul_pow2(2) < table.rows.back().error))
        throw PrecisionInsufficient(
            "error_table: the reference partial sum cannot resolve the last row; "
            "raise digits (currently " + std::to_string(digits) + ")");
    return table;
}

} // namespace zf
