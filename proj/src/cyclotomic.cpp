#include "x4q4/cyclotomic.hpp"

namespace x4q4::cyclotomic {

using arith::factorize;
using arith::gcd;
using arith::is_prime;
using arith::mod_nonneg;
using arith::multiplicative_order;
using arith::pow_mod;

SplittingReport split_prime_in_cyclotomic(const Int& p, const Int& l) {
    if (!is_prime(p)) raise("DomainError", "p must be prime");
    if (l < 3) raise("DomainError", "conductor must be >= 3");

    SplittingReport rep;
    rep.rational_prime = p;
    rep.conductor = l;

    if (gcd(p, l) != 1) {
        if (l != p) raise("UnsupportedConductor", "p divides the conductor but l != p");
        // totally ramified: (p) = (1 - zeta)^{p-1}
        rep.e = p - 1;
        rep.f = 1;
        rep.g = 1;
        rep.norm = p;
        return rep;
    }

    Int phi = arith::euler_phi(factorize(l));
    rep.e = 1;
    rep.f = multiplicative_order(p, l);
    rep.g = phi / rep.f;
    if (!rep.f.fits_ulong_p() || rep.f > 1'000'000)
        raise("BudgetExceeded", "residual degree too large to expand the norm");
    Int norm;
    mpz_pow_ui(norm.get_mpz_t(), p.get_mpz_t(), rep.f.get_ui());
    rep.norm = norm;
    return rep;
}

bool is_quadratic_residue(const Int& a, const Int& q) {
    if (!is_prime(q) || q < 3) raise("DomainError", "q must be an odd prime");
    if (gcd(a, q) != 1) raise("NotCoprime", "a and q are not coprime");
    return pow_mod(a, (q - 1) / 2, q) == 1;
}

bool rth_power_residue_mod_prime(const Int& a, const Int& r, const Int& q) {
    if (!is_prime(q)) raise("DomainError", "q must be prime");
    if (!is_prime(r)) raise("DomainError", "r must be prime");
    if (mod_nonneg(a, q) == 0) return true;
    Int d = gcd(r, q - 1);
    return pow_mod(a, (q - 1) / d, q) == 1;
}

SymbolValue power_residue_symbol_rational(const Int& a, const Int& r, const Int& q) {
    if (!is_prime(r)) raise("DomainError", "r must be prime");
    if (!is_prime(q)) raise("DomainError", "q must be prime");
    if (q == r) raise("RamifiedModulus", "q = r ramifies in the r-th cyclotomic ring");

    SymbolValue sym;
    sym.residual_degree = multiplicative_order(q, r);

    if (mod_nonneg(a, q) == 0) {
        sym.tag = SymbolTag::Zero;
        return sym;
    }

    // N = q^f; a^{(N-1)/r} mod q only depends on the exponent mod q-1
    if (sym.residual_degree > 1'000'000)
        raise("BudgetExceeded", "residual degree too large to expand q^f");
    Int qf;
    mpz_pow_ui(qf.get_mpz_t(), q.get_mpz_t(), sym.residual_degree.get_ui());
    Int exponent = mod_nonneg((qf - 1) / r, q - 1);
    sym.witness = pow_mod(a, exponent, q);
    sym.tag = sym.witness == 1 ? SymbolTag::One : SymbolTag::Nontrivial;
    return sym;
}

KummerSplitting splitting_from_symbol(const SymbolValue& symbol) {
    switch (symbol.tag) {
        case SymbolTag::Zero: return KummerSplitting::RamifiedPower;
        case SymbolTag::One: return KummerSplitting::SplitsCompletely;
        default: return KummerSplitting::Inert;
    }
}

KummerSplitting classify_kummer_splitting(const Int& a, const Int& r, const Int& q) {
    return splitting_from_symbol(power_residue_symbol_rational(a, r, q));
}

std::string to_string(SymbolTag tag) {
    switch (tag) {
        case SymbolTag::Zero: return "Zero";
        case SymbolTag::One: return "One";
        default: return "Nontrivial";
    }
}

std::string to_string(KummerSplitting kind) {
    switch (kind) {
        case KummerSplitting::RamifiedPower: return "RamifiedPower";
        case KummerSplitting::SplitsCompletely: return "SplitsCompletely";
        default: return "Inert";
    }
}

} // namespace x4q4::cyclotomic
