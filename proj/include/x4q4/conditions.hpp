#pragma once

#include <optional>
#include <vector>

#include "x4q4/arith.hpp"
#include "x4q4/cyclotomic.hpp"

namespace x4q4::conditions {

using arith::Int;

// Candidate (p, q, r): equation coefficient, subtracted fourth power,
// radical exponent. Examples are often quoted in (p, r, q) order elsewhere;
// everything in this library is canonicalized to (p, q, r).
struct PrimeTriple {
    Int p;
    Int q;
    Int r;
};

struct ResidueCheck {
    bool ok = false;
    Int residue = 0;
};

// Outcome of a "base generates the group" hypothesis. `modulus` is the
// modulus the order was actually computed at: the full q^{r-1} in full-order
// mode, q^min(r-1,2) when the primitive-root lifting shortcut stands in for
// it. ok iff order == group_order. Inapplicable checks (q not an odd prime,
// base not coprime, r < 2) report ok = false with zeroed witnesses.
struct GeneratorCheck {
    bool ok = false;
    bool applicable = false;
    bool lifted = false;
    Int modulus = 0;
    Int order = 0;
    Int group_order = 0;
};

// Per-hypothesis verdicts for the eight conditions on (p, q, r).
struct ConditionReport {
    PrimeTriple triple;
    bool distinct = false;     // three distinct primes
    bool q_not_two = false;
    ResidueCheck p_mod4;       // ok iff p = 3 (mod 4)
    ResidueCheck p_mod_r;      // ok iff p = 1 (mod r)
    ResidueCheck r_mod8;       // ok iff r mod 8 in {3, 5}
    GeneratorCheck p_generates; // p generates U(Z_{q^{r-1}})
    GeneratorCheck q_generates; // q generates Z_r^*
    bool two_residue = false;   // 2 is an r-power residue mod q (prime field)
    // Same hypothesis read through the cyclotomic character {2/(q)};
    // informational, present when q, r are distinct primes.
    std::optional<cyclotomic::SymbolValue> two_residue_symbol;
    bool all_satisfied = false;
};

struct CheckOptions {
    bool full_order = false;  // disable the q^2 lifting shortcut
    arith::FactorizeOptions factorize;
};

ConditionReport check_conditions(const Int& p, const Int& q, const Int& r,
                                 const CheckOptions& opts = {});

struct EnumerateOptions {
    CheckOptions check;
    uint64_t candidate_budget = 1'000'000;
};

// All candidate triples within the bounds with every hypothesis satisfied,
// sorted lexicographically by (p, q, r). The parallel kernel and the serial
// reference produce identical lists.
std::vector<ConditionReport> enumerate_triples(const Int& p_max, const Int& q_max,
                                               const Int& r_max,
                                               const EnumerateOptions& opts = {});
std::vector<ConditionReport> enumerate_triples_serial(const Int& p_max, const Int& q_max,
                                                      const Int& r_max,
                                                      const EnumerateOptions& opts = {});

} // namespace x4q4::conditions
