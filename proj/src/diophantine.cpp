#include "x4q4/diophantine.hpp"

#include <algorithm>
#include <cassert>
#include <exception>
#include <sstream>

namespace x4q4::diophantine {

using arith::gcd;
using arith::integer_nth_root;
using arith::is_prime;
using arith::mod_nonneg;

namespace {

Int pow_ui(const Int& base, unsigned long exp) {
    Int out;
    mpz_pow_ui(out.get_mpz_t(), base.get_mpz_t(), exp);
    return out;
}

// Exact r-th root for odd r; negative arguments root to negative values.
std::pair<Int, bool> odd_rth_root(const Int& t, unsigned long r) {
    if (t >= 0) return integer_nth_root(r, t);
    auto [root, exact] = integer_nth_root(r, Int(-t));
    return {Int(-root), exact};
}

bool divides(const Int& d, const Int& n) {
    return mpz_divisible_p(n.get_mpz_t(), d.get_mpz_t()) != 0;
}

} // namespace

EquationInstance EquationInstance::make(const Int& p, const Int& q, const Int& r) {
    if (!is_prime(p)) raise("DomainError", "p must be prime");
    if (!is_prime(q)) raise("DomainError", "q must be prime");
    if (!is_prime(r)) raise("DomainError", "r must be prime");
    if (r == 2) raise("DomainError", "r must be odd (y^r needs a sign for negative y)");
    if (!r.fits_ulong_p()) raise("BudgetExceeded", "exponent r too large");
    return {p, q, r};
}

Int evaluate(const EquationInstance& inst, const Int& x, const Int& y) {
    return pow_ui(x, 4) - pow_ui(inst.q, 4) - inst.p * pow_ui(y, inst.r.get_ui());
}

SolutionRecord verify_solution(const EquationInstance& inst, const Int& x, const Int& y) {
    SolutionRecord rec;
    rec.x = x;
    rec.y = y;
    rec.residual = evaluate(inst, x, y);
    rec.is_solution = rec.residual == 0;
    rec.coprime = gcd(x, y) == 1;
    rec.xy_nonzero = x != 0 && y != 0;
    if (rec.is_solution) rec.p_divides_y = divides(inst.p, y);
    return rec;
}

namespace {

struct SearchSpan {
    long count;  // number of y values
    Int y_low;
};

SearchSpan search_span(const Int& y_bound, const Int& x_bound, const SearchOptions& opts) {
    if (y_bound < 0 || x_bound < 0) raise("DomainError", "bounds must be non-negative");
    Int count = 2 * y_bound + 1;
    if (!count.fits_slong_p() || count.get_si() < 0 ||
        static_cast<uint64_t>(count.get_si()) > opts.y_budget)
        raise("BudgetExceeded", "y range exceeds the search budget");
    return {count.get_si(), Int(-y_bound)};
}

// Records for one y value: x recovered from an exact fourth root of
// q^4 + p*y^r, emitted for -root and +root (once for root 0).
void scan_row(const EquationInstance& inst, const Int& y, const Int& x_bound,
              std::vector<SolutionRecord>& out) {
    Int t = pow_ui(inst.q, 4) + inst.p * pow_ui(y, inst.r.get_ui());
    if (t < 0) return;
    auto [root, exact] = integer_nth_root(4, t);
    if (!exact || root > x_bound) return;
    if (root == 0) {
        out.push_back(verify_solution(inst, 0, y));
        return;
    }
    out.push_back(verify_solution(inst, Int(-root), y));
    out.push_back(verify_solution(inst, root, y));
}

void sort_records(std::vector<SolutionRecord>& recs) {
    std::sort(recs.begin(), recs.end(), [](const SolutionRecord& a, const SolutionRecord& b) {
        if (a.y != b.y) return a.y < b.y;
        return a.x < b.x;
    });
}

} // namespace

std::vector<SolutionRecord> search_solutions_serial(const EquationInstance& inst,
                                                    const Int& y_bound, const Int& x_bound,
                                                    const SearchOptions& opts) {
    SearchSpan span = search_span(y_bound, x_bound, opts);
    std::vector<SolutionRecord> out;
    for (long i = 0; i < span.count; ++i) scan_row(inst, span.y_low + i, x_bound, out);
    sort_records(out);
    return out;
}

std::vector<SolutionRecord> search_solutions(const EquationInstance& inst, const Int& y_bound,
                                             const Int& x_bound, const SearchOptions& opts) {
#ifdef _OPENMP
    SearchSpan span = search_span(y_bound, x_bound, opts);
    std::vector<SolutionRecord> out;
    std::exception_ptr failure;
#pragma omp parallel
    {
        std::vector<SolutionRecord> local;
#pragma omp for schedule(static) nowait
        for (long i = 0; i < span.count; ++i) {
            try {
                scan_row(inst, span.y_low + i, x_bound, local);
            } catch (...) {
#pragma omp critical(x4q4_search_fail)
                if (!failure) failure = std::current_exception();
            }
        }
#pragma omp critical(x4q4_search_merge)
        out.insert(out.end(), std::make_move_iterator(local.begin()),
                   std::make_move_iterator(local.end()));
    }
    if (failure) std::rethrow_exception(failure);
    sort_records(out);
    return out;
#else
    return search_solutions_serial(inst, y_bound, x_bound, opts);
#endif
}

HypothesisReport lemma_hypotheses(const Int& y1, const Int& y2, const Int& p, const Int& r,
                                  LemmaVariant variant) {
    if (!is_prime(p)) raise("DomainError", "p must be prime");
    if (!is_prime(r) || !r.fits_ulong_p()) raise("DomainError", "r must be a (moderate) prime");

    HypothesisReport rep;
    rep.variant = variant;
    rep.gcd_y1_y2_is_1 = gcd(y1, y2) == 1;
    rep.p_divides_y2 = divides(p, y2);
    rep.r_divides_y2_minus_y1 = divides(r, y2 - y1);
    unsigned long rl = r.get_ui();
    Int two_r2 = rl >= 2 ? pow_ui(2, rl - 2) : Int(1);
    rep.r_divides_y2_minus_2r2p_y1 = divides(r, y2 - two_r2 * p * y1);
    return rep;
}

namespace {

struct BranchShape {
    Branch branch;
    Int divisor_low;   // divides x^2 - q^2
    Int divisor_high;  // divides x^2 + q^2
};

std::string branch_failure(const BranchShape& shape, const Int& low, const Int& high,
                           unsigned long r) {
    std::ostringstream os;
    os << to_string(shape.branch) << ": ";
    if (!divides(shape.divisor_low, low))
        os << "x^2-q^2 not divisible by " << shape.divisor_low.get_str();
    else if (!odd_rth_root(low / shape.divisor_low, r).second)
        os << "(x^2-q^2)/" << shape.divisor_low.get_str() << " not an exact r-th power";
    else if (!divides(shape.divisor_high, high))
        os << "x^2+q^2 not divisible by " << shape.divisor_high.get_str();
    else
        os << "(x^2+q^2)/" << shape.divisor_high.get_str() << " not an exact r-th power";
    return os.str();
}

} // namespace

TraceReport decompose_solution(const EquationInstance& inst, const Int& x, const Int& y) {
    SolutionRecord rec = verify_solution(inst, x, y);
    if (!rec.is_solution)
        raise("NotASolution", "(x, y) does not satisfy the equation; residual " +
                                  rec.residual.get_str());
    if (!rec.xy_nonzero) raise("NotASolution", "degenerate solution: x*y = 0");
    if (!rec.coprime) raise("NotASolution", "x and y are not coprime");

    const unsigned long r = inst.r.get_ui();
    TraceReport tr;
    tr.parity_case = mpz_odd_p(x.get_mpz_t()) ? Parity::XOdd : Parity::XEven;

    Int low = x * x - inst.q * inst.q;   // x^2 - q^2
    Int high = x * x + inst.q * inst.q;  // x^2 + q^2
    tr.d = gcd(low, high);

    const Int two_r1 = pow_ui(2, r - 1);
    const BranchShape shapes[] = {
        {Branch::B1a, two_r1 * inst.p, Int(2)},
        {Branch::B1b, two_r1, 2 * inst.p},
        {Branch::B2a, inst.p, Int(1)},
        {Branch::B2b, Int(1), inst.p},
    };

    int matches = 0;
    for (const BranchShape& shape : shapes) {
        if (!divides(shape.divisor_low, low) || !divides(shape.divisor_high, high)) continue;
        auto [y1, ok1] = odd_rth_root(low / shape.divisor_low, r);
        auto [y2, ok2] = odd_rth_root(high / shape.divisor_high, r);
        if (!ok1 || !ok2) continue;
        ++matches;
        tr.branch = shape.branch;
        tr.y1 = y1;
        tr.y2 = y2;
    }
    // exact division plus perfect-power tests cannot agree twice on a
    // coprime solution with xy != 0 (2-adic and p-adic valuations clash)
    assert(matches <= 1);
    if (matches > 1) raise("InternalError", "branch extraction matched more than once");
    if (matches == 0) {
        std::ostringstream os;
        os << "no branch factorization matched:";
        for (const BranchShape& shape : shapes)
            os << " [" << branch_failure(shape, low, high, r) << "]";
        raise("NoBranchMatched", os.str());
    }

    const bool two_power = tr.branch == Branch::B1a || tr.branch == Branch::B1b;
    tr.lemma_hypotheses = lemma_hypotheses(*tr.y1, *tr.y2, inst.p, inst.r,
                                           two_power ? LemmaVariant::TwoPower
                                                     : LemmaVariant::Plain);

    const Int q2 = inst.q * inst.q;
    const Int y1r = pow_ui(*tr.y1, r);
    const Int y2r = pow_ui(*tr.y2, r);
    const Int two_r2 = pow_ui(2, r - 2);
    switch (tr.branch) {
        case Branch::B1a: tr.key_identity_holds = q2 == y2r - two_r2 * inst.p * y1r; break;
        case Branch::B1b: tr.key_identity_holds = q2 == inst.p * y2r - two_r2 * y1r; break;
        case Branch::B2a: tr.key_identity_holds = 2 * q2 == y2r - inst.p * y1r; break;
        case Branch::B2b: tr.key_identity_holds = 2 * q2 == inst.p * y2r - y1r; break;
        case Branch::None: break;
    }

    if (tr.branch == Branch::B1b || tr.branch == Branch::B2b) {
        tr.contradiction_note =
            mod_nonneg(inst.p, 4) == 3
                ? "p | x^2 + q^2 although p = 3 (mod 4): this branch is excluded for "
                  "hypothesis-satisfying instances, so some hypothesis fails here"
                : "p = 1 (mod 4): the sum-of-squares elimination of p | x^2 + q^2 does not apply";
    } else {
        const HypothesisReport& h = tr.lemma_hypotheses;
        bool r_cond = two_power ? h.r_divides_y2_minus_2r2p_y1 : h.r_divides_y2_minus_y1;
        if (!h.gcd_y1_y2_is_1)
            tr.contradiction_note = "descent hypothesis fails: gcd(y1, y2) > 1";
        else if (h.p_divides_y2)
            tr.contradiction_note = "descent hypothesis fails: p | y2";
        else if (r_cond)
            tr.contradiction_note = two_power
                                        ? "descent hypothesis fails: r | y2 - 2^{r-2}*p*y1"
                                        : "descent hypothesis fails: r | y2 - y1";
        else
            tr.contradiction_note = "descent hypotheses hold: the coprime-ideal "
                                    "contradiction applies on this branch";
    }
    return tr;
}

std::string to_string(Parity parity) {
    return parity == Parity::XOdd ? "XOdd" : "XEven";
}

std::string to_string(Branch branch) {
    switch (branch) {
        case Branch::B1a: return "B1a";
        case Branch::B1b: return "B1b";
        case Branch::B2a: return "B2a";
        case Branch::B2b: return "B2b";
        default: return "None";
    }
}

std::string to_string(LemmaVariant variant) {
    return variant == LemmaVariant::Plain ? "Plain" : "TwoPower";
}

} // namespace x4q4::diophantine
