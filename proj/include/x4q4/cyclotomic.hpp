#pragma once

#include <string>

#include "x4q4/arith.hpp"

namespace x4q4::cyclotomic {

using arith::Int;

// How a rational prime p decomposes in Z[zeta_l]: p factors into g distinct
// prime ideals, each with ramification index e and residual degree f, and
// e*f*g = phi(l). norm is the residue field size p^f of each prime above p.
struct SplittingReport {
    Int rational_prime;
    Int conductor;
    Int e;
    Int f;
    Int g;
    Int norm;
};

enum class SymbolTag { Zero, One, Nontrivial };

// Value of the rational l-power residue character of a at the prime (q).
// witness is a^E in the prime field (present for One/Nontrivial; 1 iff One).
// residual_degree is ord_r(q), the f with N((q)) = q^f.
struct SymbolValue {
    SymbolTag tag = SymbolTag::Zero;
    Int witness = 0;
    Int residual_degree = 0;
};

// The three splitting types of a prime ideal in the degree-l Kummer step:
// ramified l-th power, l distinct primes, or inert.
enum class KummerSplitting { RamifiedPower, SplitsCompletely, Inert };

// Decomposition of p in Z[zeta_l]. Unramified (p coprime to l): e = 1,
// f = ord_l(p), g = phi(l)/f. Totally ramified (l = p prime): e = p-1,
// f = g = 1. Mixed ramification (p | l, l != p) is rejected with
// UnsupportedConductor.
SplittingReport split_prime_in_cyclotomic(const Int& p, const Int& l);

// Euler criterion: a^{(q-1)/2} = 1 (mod q). Requires gcd(a, q) = 1.
bool is_quadratic_residue(const Int& a, const Int& q);

// Solvability of x^r = a (mod q) in the prime field: a = 0 is always an
// r-th power, otherwise a^{(q-1)/gcd(r, q-1)} must be 1.
bool rth_power_residue_mod_prime(const Int& a, const Int& r, const Int& q);

// The character value {a/(q)} of the rational a at the prime q, computed in
// the prime field: with f = ord_r(q) and N = q^f, the exponent
// E = ((q^f - 1)/r) mod (q - 1) already determines a^{(N-1)/r} mod q for
// rational a. Requires q != r (RamifiedModulus otherwise).
SymbolValue power_residue_symbol_rational(const Int& a, const Int& r, const Int& q);

// Splitting type of (q) in the ring of integers of Q(zeta_r, a^{1/r}):
// Zero -> RamifiedPower, One -> SplitsCompletely, Nontrivial -> Inert.
KummerSplitting classify_kummer_splitting(const Int& a, const Int& r, const Int& q);

KummerSplitting splitting_from_symbol(const SymbolValue& symbol);

std::string to_string(SymbolTag tag);
std::string to_string(KummerSplitting kind);

} // namespace x4q4::cyclotomic
