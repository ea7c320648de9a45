#pragma once

#include <cstdint>
#include <utility>
#include <vector>

#include <gmpxx.h>

#include "x4q4/errors.hpp"

namespace x4q4::arith {

// Exact arbitrary-precision integer. All operations in this library are
// exact; there is no floating point anywhere.
using Int = mpz_class;

// Multiset of (prime, exponent) pairs with primes strictly increasing.
// `value` is the factored integer; the empty list represents 1.
struct Factorization {
    struct Entry {
        Int prime;
        unsigned long exponent = 0;
    };

    Int value = 1;
    std::vector<Entry> factors;
};

struct FactorizeOptions {
    // Trial division limit; a rho cycle finder handles what survives it.
    uint64_t trial_bound = 1'000'000;
    // Total rho iterations across the whole call before giving up with
    // FactorizationExceededBudget.
    uint64_t rho_budget = 100'000'000;
};

// Non-negative gcd; gcd(0, 0) = 0.
Int gcd(const Int& a, const Int& b);

// a mod m reduced into [0, m); requires m >= 1.
Int mod_nonneg(const Int& a, const Int& m);

// base^exp mod modulus, result in [0, modulus). exp >= 0, modulus >= 1.
// pow_mod(b, 0, 1) = 0 since the only residue mod 1 is 0.
Int pow_mod(const Int& base, const Int& exp, const Int& modulus);

// Exact below 2^64 (Miller-Rabin over a fixed deterministic witness set);
// probabilistic above, with `rounds` extra bases derived deterministically
// from n so the function stays pure.
bool is_prime(const Int& n, int rounds = 40);

// Factor n >= 1. Trial division up to opts.trial_bound, then Brent-style
// rho on the remaining cofactors. Throws FactorizationExceededBudget when
// opts.rho_budget runs out.
Factorization factorize(const Int& n, const FactorizeOptions& opts = {});

// Euler totient of the factored value.
Int euler_phi(const Factorization& f);

// Factorization of euler_phi(f), assembled from the factorizations of the
// q - 1 terms so no large phi value ever needs factoring from scratch.
Factorization euler_phi_factored(const Factorization& f, const FactorizeOptions& opts = {});

// Least t >= 1 with a^t = 1 (mod n), n >= 2. Computed by descending through
// the prime divisors of phi(n), never by naive iteration. Throws NotCoprime
// when gcd(a, n) != 1.
Int multiplicative_order(const Int& a, const Int& n, const FactorizeOptions& opts = {});

// True iff a generates the cyclic group U(Z_{q^k}), q an odd prime, k >= 1:
// a^{phi/s} != 1 (mod q^k) for every prime s | phi(q^k). Throws NotCoprime
// when q | a.
bool is_generator_mod_prime_power(const Int& a, const Int& q, unsigned long k,
                                  const FactorizeOptions& opts = {});

// (floor(x^{1/n}), root^n == x) for x >= 0, n >= 1.
std::pair<Int, bool> integer_nth_root(unsigned long n, const Int& x);

// Primes <= bound in increasing order (sieve-backed).
std::vector<uint64_t> primes_up_to(uint64_t bound);

} // namespace x4q4::arith
