#include "zf/bernoulli.hpp"

#include <map>
#include <memory>
#include <mutex>

namespace zf {

namespace {

// Tangent numbers T_1, T_2, ... by the Knuth-Buckholtz triangle; all-integer,
// no cancellation.  B_{2n} = (-1)^(n-1) * 2n * T_n / (4^n (4^n - 1)).
class TangentCache {
  public:
    // returns a snapshot holding at least n entries (T_1..T_n at indices 1..n)
    std::shared_ptr<const std::vector<mpz_class>> at_least(size_t n) {
        std::lock_guard<std::mutex> lock(mu_);
        if (!data_ || data_->size() <= n) rebuild(std::max(n + 1, data_ ? data_->size() * 2 : size_t{64}));
        return data_;
    }

  private:
    void rebuild(size_t count) {
        auto t = std::make_shared<std::vector<mpz_class>>(count);
        std::vector<mpz_class>& T = *t;
        if (count < 2) count = 2;
        T[1] = 1;
        for (size_t k = 2; k < count; ++k) T[k] = (k - 1) * T[k - 1];
        for (size_t k = 2; k < count; ++k)
            for (size_t j = k; j < count; ++j)
                T[j] = (j - k) * T[j - 1] + (j - k + 2) * T[j];
        data_ = std::move(t);
    }

    std::mutex mu_;
    std::shared_ptr<const std::vector<mpz_class>> data_;
};

TangentCache& tangent_cache() {
    static TangentCache c;
    return c;
}

BigRational bernoulli_even_from_tangent(const std::vector<mpz_class>& T, size_t n_half) {
    // B_{2n} for n = n_half >= 1
    mpz_class p4;
    mpz_ui_pow_ui(p4.get_mpz_t(), 4, static_cast<unsigned long>(n_half));
    mpz_class den = p4 * (p4 - 1);
    mpz_class num = mpz_class(2 * n_half) * T[n_half];
    if (n_half % 2 == 0) num = -num;
    return BigRational(num, den);
}

void check_cap(int k, int cap, const char* what) {
    if (k > cap)
        throw ResourceLimit(std::string(what) + ": index " + std::to_string(k) +
                            " exceeds the configured cap " + std::to_string(cap));
}

} // namespace

BernoulliTable bernoulli_numbers(int n_max, int cap) {
    if (n_max < 0) throw DomainError("bernoulli_numbers: n_max must be >= 0");
    check_cap(n_max, cap, "bernoulli_numbers");
    auto T = tangent_cache().at_least(static_cast<size_t>(n_max) / 2);
    BernoulliTable table;
    table.values.reserve(n_max + 1);
    for (int k = 0; k <= n_max; ++k) {
        if (k == 0) table.values.emplace_back(1);
        else if (k == 1) table.values.emplace_back(-1, 2);
        else if (k % 2 == 1) table.values.emplace_back(0);
        else table.values.push_back(bernoulli_even_from_tangent(*T, static_cast<size_t>(k) / 2));
    }
    return table;
}

BigRational bernoulli_number(int k, int cap) {
    if (k < 0) throw DomainError("bernoulli_number: index must be >= 0");
    check_cap(k, cap, "bernoulli_number");
    if (k == 0) return BigRational(1);
    if (k == 1) return BigRational(-1, 2);
    if (k % 2 == 1) return BigRational(0);
    auto T = tangent_cache().at_least(static_cast<size_t>(k) / 2);
    return bernoulli_even_from_tangent(*T, static_cast<size_t>(k) / 2);
}

PrecReal bernoulli_over_factorial(int k, int digits, int cap) {
    if (k < 2 || k % 2 != 0) throw DomainError("bernoulli_over_factorial: k must be even and >= 2");
    check_cap(k, cap, "bernoulli_over_factorial");
    struct PerPrec {
        std::vector<PrecReal> values;  // index j holds B_{2j}/(2j)!
        mpz_class fact = 1;            // (2j)! for j = values.size()-1
    };
    static std::mutex mu;
    static std::map<int, PerPrec> memo;
    std::lock_guard<std::mutex> lock(mu);
    PerPrec& slot = memo[digits];
    size_t j = static_cast<size_t>(k) / 2;
    if (slot.values.empty()) {
        slot.values.emplace_back(PrecReal::of(1L, digits));  // unused j=0 placeholder
        slot.fact = 1;
    }
    if (j >= slot.values.size()) {
        auto T = tangent_cache().at_least(j);
        for (size_t i = slot.values.size(); i <= j; ++i) {
            slot.fact *= mpz_class(2 * i - 1) * mpz_class(2 * i);
            mpz_class p4;
            mpz_ui_pow_ui(p4.get_mpz_t(), 4, static_cast<unsigned long>(i));
            PrecReal num = PrecReal::of(mpz_class(2 * i) * (*T)[i], digits);
            PrecReal den = PrecReal::of(p4 * (p4 - 1) * slot.fact, digits);
            PrecReal v = num / den;
            slot.values.push_back(i % 2 == 0 ? -v : v);
        }
    }
    return slot.values[j];
}

BigRational bernoulli_poly(int n, const BigRational& x) {
    if (n < 0) throw DomainError("bernoulli_poly: degree must be >= 0");
    auto table = bernoulli_numbers(n);
    // Horner over sum_k C(n,k) B_k x^(n-k)
    BigRational acc(0);
    for (int k = 0; k <= n; ++k) {
        acc *= x;
        acc += BigRational(binomial(static_cast<unsigned long>(n), static_cast<unsigned long>(k))) * table.B(k);
    }
    return acc;
}

namespace {

// Formal power-series division of sum_a chi(a) t e^{at} / (e^{dt} - 1).
// With a_m = S_m/m! (S_m = sum chi(a) a^m) and c_m = d^(m+1)/(m+1)!, the
// ordinary coefficients g_n = B_{n,chi}/n! satisfy
//   g_n = (a_n - sum_{j<n} g_j c_{n-j}) / c_0.
std::vector<BigRational> gen_bernoulli_series(const QuadraticCharacter& c, int n_max) {
    const long d = static_cast<long>(c.disc().modulus);
    std::vector<BigRational> a(n_max + 1), cc(n_max + 1), g(n_max + 1);
    std::vector<mpz_class> apow(static_cast<size_t>(d) + 1, 1);
    mpz_class fact = 1;
    mpz_class dpow = d;
    for (int m = 0; m <= n_max; ++m) {
        if (m > 0) {
            fact *= m;
            dpow *= d;
            for (long u = 1; u <= d; ++u) apow[static_cast<size_t>(u)] *= u;
        }
        mpz_class s = 0;
        for (long u = 1; u <= d; ++u) {
            int ch = c.chi(u);
            if (ch > 0) s += apow[static_cast<size_t>(u)];
            else if (ch < 0) s -= apow[static_cast<size_t>(u)];
        }
        a[m] = BigRational(s, fact);
        cc[m] = BigRational(dpow, fact * (m + 1));
    }
    for (int n = 0; n <= n_max; ++n) {
        BigRational acc = a[n];
        for (int j = 0; j < n; ++j) acc -= g[j] * cc[n - j];
        g[n] = acc / BigRational(d);
    }
    std::vector<BigRational> out(n_max + 1);
    mpz_class nf = 1;
    for (int n = 0; n <= n_max; ++n) {
        if (n > 0) nf *= n;
        out[n] = g[n] * BigRational(nf);
    }
    return out;
}

// Conductor formula B_{k,chi} = d^(k-1) sum_{a=1}^{d} chi(a) B_k(a/d).
std::vector<BigRational> gen_bernoulli_conductor(const QuadraticCharacter& c, int n_max) {
    const long d = static_cast<long>(c.disc().modulus);
    std::vector<BigRational> out(n_max + 1);
    for (int k = 0; k <= n_max; ++k) {
        BigRational sum(0);
        for (long u = 1; u <= d; ++u) {
            int ch = c.chi(u);
            if (ch == 0) continue;
            BigRational b = bernoulli_poly(k, BigRational(u, d));
            sum += (ch > 0) ? b : -b;
        }
        out[k] = BigRational(d).pow(k - 1) * sum;
    }
    return out;
}

struct GenCacheEntry {
    std::mutex mu;
    std::vector<BigRational> values;
};

GenCacheEntry& gen_cache_entry(long long delta) {
    static std::mutex mu;
    static std::map<long long, std::unique_ptr<GenCacheEntry>> cache;
    std::lock_guard<std::mutex> lock(mu);
    auto& slot = cache[delta];
    if (!slot) slot = std::make_unique<GenCacheEntry>();
    return *slot;
}

} // namespace

GenBernoulliTable gen_bernoulli(const QuadraticCharacter& c, int n_max, int cap) {
    if (n_max < 0) throw DomainError("gen_bernoulli: n_max must be >= 0");
    check_cap(n_max, cap, "gen_bernoulli");
    GenCacheEntry& entry = gen_cache_entry(c.disc().delta);
    std::lock_guard<std::mutex> lock(entry.mu);
    if (entry.values.size() <= static_cast<size_t>(n_max)) {
        std::vector<BigRational> s = gen_bernoulli_series(c, n_max);
        std::vector<BigRational> f = gen_bernoulli_conductor(c, n_max);
        for (int k = 0; k <= n_max; ++k)
            if (s[k] != f[k])
                throw InternalInconsistency(
                    "gen_bernoulli: power-series and conductor-formula values differ at k=" +
                    std::to_string(k) + " for delta=" + std::to_string(c.disc().delta));
        entry.values = std::move(s);
    }
    GenBernoulliTable table;
    table.disc = c.disc();
    table.values.assign(entry.values.begin(), entry.values.begin() + n_max + 1);
    return table;
}

BigRational l_nonpositive(const QuadraticCharacter& c, int n) {
    if (n < 1) throw DomainError("l_nonpositive: n must be >= 1");
    return -gen_bernoulli(c, n).B(static_cast<size_t>(n)) / BigRational(n);
}

} // namespace zf
