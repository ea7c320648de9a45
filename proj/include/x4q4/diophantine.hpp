#pragma once

#include <optional>
#include <string>
#include <vector>

#include "x4q4/arith.hpp"

namespace x4q4::diophantine {

using arith::Int;

// Parameters of x^4 - q^4 = p*y^r. Only primality and odd r are enforced;
// the eight hypotheses on (p, q, r) are deliberately NOT required, so
// counterexample instances are representable.
struct EquationInstance {
    Int p;
    Int q;
    Int r;

    static EquationInstance make(const Int& p, const Int& q, const Int& r);
};

struct SolutionRecord {
    Int x;
    Int y;
    bool is_solution = false;
    bool coprime = false;      // gcd(x, y) = 1
    bool xy_nonzero = false;
    std::optional<bool> p_divides_y;  // populated only for solutions
    Int residual = 0;          // x^4 - q^4 - p*y^r
};

// x^4 - q^4 - p*y^r, exactly.
Int evaluate(const EquationInstance& inst, const Int& x, const Int& y);

SolutionRecord verify_solution(const EquationInstance& inst, const Int& x, const Int& y);

struct SearchOptions {
    uint64_t y_budget = 10'000'000;  // max number of y values scanned
};

// All solutions with |y| <= y_bound and |x| <= x_bound, sorted by (y, x).
// For each y the candidate x is recovered by an exact integer fourth root
// of q^4 + p*y^r, so the scan is O(y_bound) root extractions. Degenerate
// solutions (xy = 0 or gcd > 1) are included and flagged.
std::vector<SolutionRecord> search_solutions(const EquationInstance& inst, const Int& y_bound,
                                             const Int& x_bound, const SearchOptions& opts = {});
std::vector<SolutionRecord> search_solutions_serial(const EquationInstance& inst,
                                                    const Int& y_bound, const Int& x_bound,
                                                    const SearchOptions& opts = {});

enum class Parity { XOdd, XEven };

// The four factorizations of x^4 - q^4 = (x^2 - q^2)(x^2 + q^2) into
// coprime-up-to-2 parts: B1a/B1b carry the 2-power split of the odd-x case,
// B2a/B2b the plain split of the even-x case; the a/b variants place p on
// the x^2 - q^2 resp. x^2 + q^2 side.
enum class Branch { B1a, B1b, B2a, B2b, None };

enum class LemmaVariant { Plain, TwoPower };

// Divisibility/gcd predicates on (y1, y2, p, r) feeding the coprime-ideal
// lemmas; each is recomputable by direct arithmetic. `variant` marks which
// r-divisibility condition is the operative one.
struct HypothesisReport {
    bool gcd_y1_y2_is_1 = false;
    bool p_divides_y2 = false;
    bool r_divides_y2_minus_y1 = false;
    bool r_divides_y2_minus_2r2p_y1 = false;
    LemmaVariant variant = LemmaVariant::Plain;
};

HypothesisReport lemma_hypotheses(const Int& y1, const Int& y2, const Int& p, const Int& r,
                                  LemmaVariant variant);

// The case decomposition of a verified coprime solution: parity case, the
// gcd d of the two quadratic factors, the unique surviving branch with its
// extracted (y1, y2), the subtraction identity of that branch, and the
// lemma hypothesis flags.
struct TraceReport {
    Parity parity_case = Parity::XOdd;
    Int d = 0;
    Branch branch = Branch::None;
    std::optional<Int> y1;
    std::optional<Int> y2;
    bool key_identity_holds = false;
    HypothesisReport lemma_hypotheses;
    std::string contradiction_note;
};

// Requires verify_solution(inst, x, y) with is_solution, coprime and
// xy_nonzero all true (NotASolution otherwise). Exactly one branch can
// match a coprime solution; NoBranchMatched reports the four failures
// otherwise.
TraceReport decompose_solution(const EquationInstance& inst, const Int& x, const Int& y);

std::string to_string(Parity parity);
std::string to_string(Branch branch);
std::string to_string(LemmaVariant variant);

} // namespace x4q4::diophantine
