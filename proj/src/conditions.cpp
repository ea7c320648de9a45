#include "x4q4/conditions.hpp"

#include <algorithm>
#include <exception>

#ifdef _OPENMP
#include <omp.h>
#endif

namespace x4q4::conditions {

using arith::gcd;
using arith::is_prime;
using arith::mod_nonneg;
using arith::multiplicative_order;
using arith::pow_mod;

namespace {

// Order-based generator test at modulus q^k; assumes q odd prime,
// gcd(base, q) = 1, k >= 1.
GeneratorCheck generator_at_prime_power(const Int& base, const Int& q, unsigned long k,
                                        const arith::FactorizeOptions& fopts) {
    GeneratorCheck chk;
    chk.applicable = true;
    mpz_pow_ui(chk.modulus.get_mpz_t(), q.get_mpz_t(), k);
    chk.group_order = (chk.modulus / q) * (q - 1);
    chk.order = multiplicative_order(base, chk.modulus, fopts);
    chk.ok = chk.order == chk.group_order;
    return chk;
}

GeneratorCheck check_p_generates(const Int& p, const Int& q, const Int& r,
                                 const CheckOptions& opts) {
    GeneratorCheck chk;
    if (r < 2 || !is_prime(q) || q == 2 || gcd(p, q) != 1) return chk;

    // U(Z_{q^k}) is cyclic for odd prime q; for k >= 2 a class generates
    // q^k iff it generates q^2, so the default mode checks at q^2.
    Int k_full = r - 1;
    if (!k_full.fits_ulong_p() || k_full > 1'000'000)
        raise("BudgetExceeded", "exponent r - 1 too large for the generator check");
    unsigned long k = k_full.get_ui();
    unsigned long k_eval = opts.full_order ? k : std::min<unsigned long>(k, 2);

    chk = generator_at_prime_power(p, q, k_eval, opts.factorize);
    chk.lifted = k_eval != k;
    return chk;
}

GeneratorCheck check_q_generates(const Int& q, const Int& r,
                                 const arith::FactorizeOptions& fopts) {
    GeneratorCheck chk;
    if (r < 2 || gcd(q, r) != 1) return chk;
    chk.applicable = true;
    chk.modulus = r;
    chk.group_order = arith::euler_phi(arith::factorize(r, fopts));
    chk.order = multiplicative_order(q, r, fopts);
    chk.ok = is_prime(r) && chk.order == r - 1;
    return chk;
}

// Solvability of x^r = a (mod q) for prime q and any r >= 1; the group
// U(Z_q) is cyclic of order q - 1.
bool rth_residue_prime_field(const Int& a, const Int& r, const Int& q) {
    if (mod_nonneg(a, q) == 0) return true;
    Int d = gcd(r, q - 1);
    return pow_mod(a, (q - 1) / d, q) == 1;
}

} // namespace

ConditionReport check_conditions(const Int& p, const Int& q, const Int& r,
                                 const CheckOptions& opts) {
    ConditionReport rep;
    rep.triple = {p, q, r};

    bool p_prime = is_prime(p);
    bool q_prime = is_prime(q);
    bool r_prime = is_prime(r);
    rep.distinct = p_prime && q_prime && r_prime && p != q && q != r && p != r;
    rep.q_not_two = q != 2;

    rep.p_mod4.residue = mod_nonneg(p, 4);
    rep.p_mod4.ok = rep.p_mod4.residue == 3;

    if (r >= 1) rep.p_mod_r.residue = mod_nonneg(p, r);
    rep.p_mod_r.ok = r >= 2 && rep.p_mod_r.residue == 1;

    rep.r_mod8.residue = mod_nonneg(r, 8);
    rep.r_mod8.ok = rep.r_mod8.residue == 3 || rep.r_mod8.residue == 5;

    rep.p_generates = check_p_generates(p, q, r, opts);
    rep.q_generates = check_q_generates(q, r, opts.factorize);

    rep.two_residue = q_prime && r >= 1 && rth_residue_prime_field(2, r, q);
    if (q_prime && r_prime && q != r)
        rep.two_residue_symbol = cyclotomic::power_residue_symbol_rational(2, r, q);

    rep.all_satisfied = rep.distinct && rep.q_not_two && rep.p_mod4.ok && rep.p_mod_r.ok &&
                        rep.r_mod8.ok && rep.p_generates.ok && rep.q_generates.ok &&
                        rep.two_residue;
    return rep;
}

namespace {

struct CandidateGrid {
    std::vector<uint64_t> ps, qs, rs;
};

CandidateGrid candidate_grid(const Int& p_max, const Int& q_max, const Int& r_max,
                             uint64_t budget) {
    if (p_max < 2 || q_max < 2 || r_max < 2)
        raise("DomainError", "enumeration bounds must be >= 2");
    const Int cap = 1'000'000;
    if (p_max > cap || q_max > cap || r_max > cap)
        raise("BudgetExceeded", "enumeration bound exceeds the supported range");

    CandidateGrid grid;
    grid.ps = arith::primes_up_to(p_max.get_ui());
    grid.qs = arith::primes_up_to(q_max.get_ui());
    grid.rs = arith::primes_up_to(r_max.get_ui());
    uint64_t count = static_cast<uint64_t>(grid.ps.size()) * grid.qs.size() * grid.rs.size();
    if (count > budget) raise("BudgetExceeded", "candidate triple count exceeds the budget");
    return grid;
}

void sort_reports(std::vector<ConditionReport>& out) {
    std::sort(out.begin(), out.end(), [](const ConditionReport& a, const ConditionReport& b) {
        if (a.triple.p != b.triple.p) return a.triple.p < b.triple.p;
        if (a.triple.q != b.triple.q) return a.triple.q < b.triple.q;
        return a.triple.r < b.triple.r;
    });
}

} // namespace

std::vector<ConditionReport> enumerate_triples_serial(const Int& p_max, const Int& q_max,
                                                      const Int& r_max,
                                                      const EnumerateOptions& opts) {
    CandidateGrid grid = candidate_grid(p_max, q_max, r_max, opts.candidate_budget);
    std::vector<ConditionReport> out;
    for (uint64_t p : grid.ps)
        for (uint64_t q : grid.qs)
            for (uint64_t r : grid.rs) {
                ConditionReport rep = check_conditions(Int(static_cast<unsigned long>(p)),
                                                       Int(static_cast<unsigned long>(q)),
                                                       Int(static_cast<unsigned long>(r)),
                                                       opts.check);
                if (rep.all_satisfied) out.push_back(std::move(rep));
            }
    sort_reports(out);
    return out;
}

std::vector<ConditionReport> enumerate_triples(const Int& p_max, const Int& q_max,
                                               const Int& r_max, const EnumerateOptions& opts) {
    CandidateGrid grid = candidate_grid(p_max, q_max, r_max, opts.candidate_budget);
    const long total = static_cast<long>(grid.ps.size() * grid.qs.size() * grid.rs.size());
    const long nq = static_cast<long>(grid.qs.size());
    const long nr = static_cast<long>(grid.rs.size());

    std::vector<ConditionReport> out;
#ifdef _OPENMP
    std::exception_ptr failure;
#pragma omp parallel
    {
        std::vector<ConditionReport> local;
#pragma omp for schedule(dynamic, 16) nowait
        for (long idx = 0; idx < total; ++idx) {
            try {
                uint64_t p = grid.ps[idx / (nq * nr)];
                uint64_t q = grid.qs[(idx / nr) % nq];
                uint64_t r = grid.rs[idx % nr];
                ConditionReport rep = check_conditions(Int(static_cast<unsigned long>(p)),
                                                       Int(static_cast<unsigned long>(q)),
                                                       Int(static_cast<unsigned long>(r)),
                                                       opts.check);
                if (rep.all_satisfied) local.push_back(std::move(rep));
            } catch (...) {
#pragma omp critical(x4q4_enumerate_fail)
                if (!failure) failure = std::current_exception();
            }
        }
#pragma omp critical(x4q4_enumerate_merge)
        out.insert(out.end(), std::make_move_iterator(local.begin()),
                   std::make_move_iterator(local.end()));
    }
    if (failure) std::rethrow_exception(failure);
    sort_reports(out);
    return out;
#else
    (void)total;
    (void)nq;
    (void)nr;
    return enumerate_triples_serial(p_max, q_max, r_max, opts);
#endif
}

} // namespace x4q4::conditions
