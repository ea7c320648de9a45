#include "x4q4/arith.hpp"

#include <algorithm>
#include <map>
#include <vector>

namespace x4q4::arith {

namespace {

uint64_t mulmod_u64(uint64_t a, uint64_t b, uint64_t m) {
    return static_cast<uint64_t>((static_cast<unsigned __int128>(a) * b) % m);
}

uint64_t powmod_u64(uint64_t base, uint64_t exp, uint64_t m) {
    uint64_t r = 1 % m;
    base %= m;
    while (exp) {
        if (exp & 1) r = mulmod_u64(r, base, m);
        base = mulmod_u64(base, base, m);
        exp >>= 1;
    }
    return r;
}

// Deterministic for every n < 2^64 with this witness set.
constexpr uint64_t kWitnesses[] = {2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37};

bool is_prime_u64(uint64_t n) {
    if (n < 2) return false;
    for (uint64_t p : kWitnesses) {
        if (n == p) return true;
        if (n % p == 0) return false;
    }
    uint64_t d = n - 1;
    unsigned s = 0;
    while ((d & 1) == 0) {
        d >>= 1;
        ++s;
    }
    for (uint64_t a : kWitnesses) {
        uint64_t x = powmod_u64(a, d, n);
        if (x == 1 || x == n - 1) continue;
        bool composite = true;
        for (unsigned i = 1; i < s; ++i) {
            x = mulmod_u64(x, x, n);
            if (x == n - 1) {
                composite = false;
                break;
            }
        }
        if (composite) return false;
    }
    return true;
}

// One Miller-Rabin round; n odd >= 3, n - 1 = d * 2^s. True means composite.
bool mr_composite(const Int& n, const Int& base, const Int& d, unsigned long s) {
    Int a = base % n;
    if (a <= 1 || a == n - 1) return false;
    Int x = 0;
    mpz_powm(x.get_mpz_t(), a.get_mpz_t(), d.get_mpz_t(), n.get_mpz_t());
    if (x == 1 || x == n - 1) return false;
    for (unsigned long i = 1; i < s; ++i) {
        x = (x * x) % n;
        if (x == n - 1) return false;
    }
    return true;
}

const std::vector<uint32_t>& sieve_primes() {
    static const std::vector<uint32_t> primes = [] {
        const uint32_t limit = 1'000'000;
        std::vector<bool> composite(limit + 1, false);
        std::vector<uint32_t> out;
        for (uint32_t i = 2; i <= limit; ++i) {
            if (composite[i]) continue;
            out.push_back(i);
            for (uint64_t j = static_cast<uint64_t>(i) * i; j <= limit; j += i)
                composite[j] = true;
        }
        return out;
    }();
    return primes;
}

struct RhoBudget {
    uint64_t left;
    void spend(uint64_t cost) {
        if (cost > left) raise("FactorizationExceededBudget", "factorization work budget exhausted");
        left -= cost;
    }
};

// Brent's cycle-finding variant of the rho method; returns a nontrivial
// factor of composite odd n, or 0 if this parameterization failed.
uint64_t rho_u64(uint64_t n, uint64_t c, RhoBudget& budget) {
    uint64_t x = 2, y = 2, d = 1, saved = 2;
    uint64_t power = 1, lam = 1;
    auto f = [&](uint64_t v) { return (mulmod_u64(v, v, n) + c) % n; };
    while (d == 1) {
        if (power == lam) {
            x = y;
            power <<= 1;
            lam = 0;
        }
        budget.spend(1);
        y = f(y);
        ++lam;
        uint64_t diff = x > y ? x - y : y - x;
        if (diff == 0) return 0;
        // batch gcds: accumulate the product of differences
        saved = mulmod_u64(saved, diff, n);
        if ((lam & 127) == 0) {
            d = std::gcd(saved, n);
            saved = 1;
        }
    }
    if (d == n) return 0;
    return d;
}

void factor_u64(uint64_t n, std::map<Int, unsigned long>& out, const FactorizeOptions& opts,
                RhoBudget& budget) {
    for (uint32_t p : sieve_primes()) {
        if (p > opts.trial_bound) break;
        if (static_cast<uint64_t>(p) * p > n) break;
        while (n % p == 0) {
            n /= p;
            ++out[Int(static_cast<unsigned long>(p))];
        }
    }
    if (n == 1) return;
    std::vector<uint64_t> stack{n};
    while (!stack.empty()) {
        uint64_t m = stack.back();
        stack.pop_back();
        if (m == 1) continue;
        if (is_prime_u64(m)) {
            ++out[Int(static_cast<unsigned long>(m))];
            continue;
        }
        uint64_t f = 0;
        for (uint64_t c = 1; f == 0; ++c) f = rho_u64(m, c, budget);
        stack.push_back(f);
        stack.push_back(m / f);
    }
}

Int rho_mpz(const Int& n, unsigned long c, RhoBudget& budget) {
    Int x = 2, y = 2, saved = 1, d = 1;
    uint64_t power = 1, lam = 1;
    auto f = [&](const Int& v) { return (v * v + c) % n; };
    x = f(x);
    y = f(f(y));
    while (true) {
        budget.spend(1);
        Int diff = x > y ? x - y : y - x;
        if (diff == 0) return 0;
        saved = (saved * diff) % n;
        if ((lam & 63) == 0) {
            d = gcd(saved, n);
            if (d != 1) break;
            saved = 1;
        }
        x = f(x);
        y = f(f(y));
        ++lam;
    }
    if (d == n || d == 1) return 0;
    return d;
}

void factor_mpz(Int n, std::map<Int, unsigned long>& out, const FactorizeOptions& opts,
                RhoBudget& budget) {
    for (uint32_t p : sieve_primes()) {
        if (p > opts.trial_bound) break;
        if (!mpz_divisible_ui_p(n.get_mpz_t(), p)) continue;
        do {
            mpz_divexact_ui(n.get_mpz_t(), n.get_mpz_t(), p);
            ++out[Int(static_cast<unsigned long>(p))];
        } while (mpz_divisible_ui_p(n.get_mpz_t(), p));
        if (n == 1) return;
    }
    std::vector<Int> stack{n};
    while (!stack.empty()) {
        Int m = stack.back();
        stack.pop_back();
        if (m == 1) continue;
        if (m.fits_ulong_p()) {
            factor_u64(m.get_ui(), out, opts, budget);
            continue;
        }
        if (is_prime(m)) {
            ++out[m];
            continue;
        }
        Int f = 0;
        for (unsigned long c = 1; f == 0; ++c) f = rho_mpz(m, c, budget);
        stack.push_back(f);
        stack.push_back(m / f);
    }
}

} // namespace

Int gcd(const Int& a, const Int& b) {
    Int g;
    mpz_gcd(g.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
    return g;
}

Int mod_nonneg(const Int& a, const Int& m) {
    if (m < 1) raise("DomainError", "modulus must be >= 1");
    Int r;
    mpz_mod(r.get_mpz_t(), a.get_mpz_t(), m.get_mpz_t());
    return r;
}

Int pow_mod(const Int& base, const Int& exp, const Int& modulus) {
    if (exp < 0) raise("DomainError", "exponent must be non-negative");
    if (modulus < 1) raise("DomainError", "modulus must be >= 1");
    Int r;
    mpz_powm(r.get_mpz_t(), base.get_mpz_t(), exp.get_mpz_t(), modulus.get_mpz_t());
    return r;
}

bool is_prime(const Int& n, int rounds) {
    if (n < 2) return false;
    if (mpz_fits_ulong_p(n.get_mpz_t())) return is_prime_u64(n.get_ui());

    for (uint64_t p : kWitnesses)
        if (mpz_divisible_ui_p(n.get_mpz_t(), static_cast<unsigned long>(p))) return false;

    Int d = n - 1;
    unsigned long s = mpz_scan1(d.get_mpz_t(), 0);
    mpz_tdiv_q_2exp(d.get_mpz_t(), d.get_mpz_t(), s);

    for (uint64_t a : kWitnesses)
        if (mr_composite(n, Int(static_cast<unsigned long>(a)), d, s)) return false;

    // beyond 2^64 the fixed set is only a filter; add seeded random bases
    gmp_randclass rng(gmp_randinit_mt);
    rng.seed(n);
    for (int i = 0; i < rounds; ++i) {
        Int a = rng.get_z_range(n - 3) + 2;
        if (mr_composite(n, a, d, s)) return false;
    }
    return true;
}

Factorization factorize(const Int& n, const FactorizeOptions& opts) {
    if (n < 1) raise("DomainError", "factorize requires n >= 1");
    Factorization out;
    out.value = n;
    if (n == 1) return out;

    std::map<Int, unsigned long> fac;
    RhoBudget budget{opts.rho_budget};
    if (mpz_fits_ulong_p(n.get_mpz_t()))
        factor_u64(n.get_ui(), fac, opts, budget);
    else
        factor_mpz(n, fac, opts, budget);

    for (auto& [p, e] : fac) out.factors.push_back({p, e});
    return out;
}

Int euler_phi(const Factorization& f) {
    Int phi = 1;
    for (const auto& entry : f.factors) {
        Int pk;
        mpz_pow_ui(pk.get_mpz_t(), entry.prime.get_mpz_t(), entry.exponent - 1);
        phi *= pk * (entry.prime - 1);
    }
    return phi;
}

Factorization euler_phi_factored(const Factorization& f, const FactorizeOptions& opts) {
    std::map<Int, unsigned long> fac;
    for (const auto& entry : f.factors) {
        if (entry.exponent > 1) fac[entry.prime] += entry.exponent - 1;
        Factorization fm1 = factorize(entry.prime - 1, opts);
        for (const auto& sub : fm1.factors) fac[sub.prime] += sub.exponent;
    }
    Factorization out;
    out.value = euler_phi(f);
    for (auto& [p, e] : fac) out.factors.push_back({p, e});
    return out;
}

Int multiplicative_order(const Int& a, const Int& n, const FactorizeOptions& opts) {
    if (n < 2) raise("DomainError", "multiplicative_order requires n >= 2");
    if (gcd(a, n) != 1) raise("NotCoprime", "base and modulus are not coprime");

    Factorization phi = euler_phi_factored(factorize(n, opts), opts);
    Int t = phi.value;
    for (const auto& entry : phi.factors) {
        for (unsigned long i = 0; i < entry.exponent; ++i) {
            Int candidate = t / entry.prime;
            if (t % entry.prime == 0 && pow_mod(a, candidate, n) == 1)
                t = candidate;
            else
                break;
        }
    }
    return t;
}

bool is_generator_mod_prime_power(const Int& a, const Int& q, unsigned long k,
                                  const FactorizeOptions& opts) {
    if (k < 1) raise("DomainError", "exponent k must be >= 1");
    if (q < 3 || q % 2 == 0 || !is_prime(q)) raise("DomainError", "q must be an odd prime");
    if (gcd(a, q) != 1) raise("NotCoprime", "base shares a factor with q");

    Int modulus;
    mpz_pow_ui(modulus.get_mpz_t(), q.get_mpz_t(), k);
    Int phi = (modulus / q) * (q - 1);

    std::vector<Int> divisors;
    if (k >= 2) divisors.push_back(q);
    for (const auto& entry : factorize(q - 1, opts).factors) divisors.push_back(entry.prime);

    for (const Int& s : divisors)
        if (pow_mod(a, phi / s, modulus) == 1) return false;
    return true;
}

std::pair<Int, bool> integer_nth_root(unsigned long n, const Int& x) {
    if (n < 1) raise("DomainError", "root degree must be >= 1");
    if (x < 0) raise("DomainError", "integer_nth_root requires x >= 0");
    Int root, rem;
    mpz_rootrem(root.get_mpz_t(), rem.get_mpz_t(), x.get_mpz_t(), n);
    return {root, rem == 0};
}

std::vector<uint64_t> primes_up_to(uint64_t bound) {
    std::vector<uint64_t> out;
    const auto& cached = sieve_primes();
    if (bound <= cached.back()) {
        for (uint32_t p : cached) {
            if (p > bound) break;
            out.push_back(p);
        }
        return out;
    }
    for (uint64_t n = 2; n <= bound; ++n)
        if (is_prime_u64(n)) out.push_back(n);
    return out;
}

} // namespace x4q4::arith
