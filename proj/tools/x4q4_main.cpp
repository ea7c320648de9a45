// Command-line surface for the x^4 - q^4 = p*y^r toolkit: hypothesis
// checking, triple enumeration, solution search/verification, proof-trace
// decomposition, and the cyclotomic/Kummer splitting calculators.
//
// Exit codes: 0 computed, 1 domain error (one line on stderr), 2 usage error.

#include <chrono>
#include <fstream>
#include <iostream>
#include <regex>
#include <sstream>
#include <string>

#include <CLI11.hpp>

#include "x4q4/serialize.hpp"

using x4q4::json;
using x4q4::arith::Int;
namespace arith = x4q4::arith;
namespace cyclo = x4q4::cyclotomic;
namespace cond = x4q4::conditions;
namespace dioph = x4q4::diophantine;

namespace {

struct GlobalOpts {
    bool json_out = false;
    std::string out_path;
    bool full_order = false;
    uint64_t budget = 0;  // 0 = defaults
};

Int parse_int(const std::string& s) {
    std::string t = s;
    if (!t.empty() && t[0] == '+') t.erase(0, 1);
    return Int(t, 10);
}

unsigned long parse_ulong(const std::string& s, const char* what) {
    Int v = parse_int(s);
    if (v < 0 || !v.fits_ulong_p()) x4q4::raise("DomainError", std::string(what) + " out of range");
    return v.get_ui();
}

const CLI::Validator IntArg{
    [](std::string& s) {
        static const std::regex re("[+-]?[0-9]+");
        return std::regex_match(s, re) ? std::string()
                                       : "'" + s + "' is not an integer";
    },
    "INT"};

std::string yesno(bool b) {
    return b ? "yes" : "no";
}

json envelope(const std::string& command, json inputs, json outputs, long long ms) {
    return json{{"schema_version", "1"},
                {"command", command},
                {"inputs", std::move(inputs)},
                {"outputs", std::move(outputs)},
                {"timing_ms", ms}};
}

void emit(const GlobalOpts& g, const json& env, const std::string& human) {
    std::string text = g.json_out ? env.dump(2) + "\n" : human;
    if (!g.out_path.empty()) {
        std::ofstream f(g.out_path);
        if (!f) x4q4::raise("DomainError", "cannot open output file " + g.out_path);
        f << text;
    } else {
        std::cout << text;
    }
}

std::string describe_generator(const cond::GeneratorCheck& chk) {
    if (!chk.applicable) return "no (not applicable)";
    std::ostringstream os;
    os << yesno(chk.ok) << " (order " << chk.order.get_str() << " of "
       << chk.group_order.get_str() << " at modulus " << chk.modulus.get_str();
    if (chk.lifted) os << ", lifted";
    os << ")";
    return os.str();
}

std::string render_check(const cond::ConditionReport& rep) {
    const Int& p = rep.triple.p;
    const Int& q = rep.triple.q;
    const Int& r = rep.triple.r;
    std::ostringstream os;
    os << "conditions for p=" << p.get_str() << ", q=" << q.get_str() << ", r=" << r.get_str()
       << "\n";
    os << "  p, q, r distinct primes:       " << yesno(rep.distinct) << "\n";
    os << "  q ≠ 2:                         " << yesno(rep.q_not_two) << "\n";
    os << "  p ≡ 3 (mod 4):                 " << yesno(rep.p_mod4.ok) << " (" << p.get_str()
       << " ≡ " << rep.p_mod4.residue.get_str() << ")\n";
    os << "  p ≡ 1 (mod r):                 " << yesno(rep.p_mod_r.ok) << " (" << p.get_str()
       << " ≡ " << rep.p_mod_r.residue.get_str() << " (mod " << r.get_str() << "))\n";
    os << "  r ≡ ±3 (mod 8):                " << yesno(rep.r_mod8.ok) << " (" << r.get_str()
       << " ≡ " << rep.r_mod8.residue.get_str() << ")\n";
    os << "  p generates U(Z_{q^(r-1)}):    " << describe_generator(rep.p_generates) << "\n";
    os << "  q generates U(Z_r):            " << describe_generator(rep.q_generates) << "\n";
    os << "  2 an r-power residue mod q:    " << yesno(rep.two_residue) << "\n";
    if (rep.two_residue_symbol) {
        os << "  character {2/(q)}:             " << cyclo::to_string(rep.two_residue_symbol->tag);
        if (rep.two_residue_symbol->tag != cyclo::SymbolTag::Zero)
            os << " (witness " << rep.two_residue_symbol->witness.get_str() << ")";
        os << "\n";
    }
    os << "all conditions satisfied: " << yesno(rep.all_satisfied) << "\n";
    return os.str();
}

std::string render_record(const dioph::SolutionRecord& rec) {
    std::ostringstream os;
    os << "x=" << rec.x.get_str() << ", y=" << rec.y.get_str() << ": solution "
       << yesno(rec.is_solution) << "; residual " << rec.residual.get_str() << "; coprime "
       << yesno(rec.coprime) << "; xy nonzero " << yesno(rec.xy_nonzero);
    if (rec.p_divides_y) os << "; p | y: " << yesno(*rec.p_divides_y);
    return os.str();
}

std::string branch_equations(dioph::Branch b) {
    switch (b) {
        case dioph::Branch::B1a: return "x^2-q^2 = 2^(r-1) p y1^r, x^2+q^2 = 2 y2^r";
        case dioph::Branch::B1b: return "x^2-q^2 = 2^(r-1) y1^r, x^2+q^2 = 2 p y2^r";
        case dioph::Branch::B2a: return "x^2-q^2 = p y1^r, x^2+q^2 = y2^r";
        case dioph::Branch::B2b: return "x^2-q^2 = y1^r, x^2+q^2 = p y2^r";
        default: return "none";
    }
}

std::string render_trace(const dioph::EquationInstance& inst, const Int& x, const Int& y,
                         const dioph::TraceReport& tr) {
    std::ostringstream os;
    os << "trace for x=" << x.get_str() << ", y=" << y.get_str() << " on p="
       << inst.p.get_str() << ", q=" << inst.q.get_str() << ", r=" << inst.r.get_str() << "\n";
    os << "  parity case:    " << dioph::to_string(tr.parity_case) << "\n";
    os << "  d = gcd(x^2-q^2, x^2+q^2) = " << tr.d.get_str() << "\n";
    os << "  branch:         " << dioph::to_string(tr.branch) << " (" << branch_equations(tr.branch)
       << ")\n";
    if (tr.y1) os << "  y1 = " << tr.y1->get_str() << ", y2 = " << tr.y2->get_str() << "\n";
    os << "  key identity:   " << (tr.key_identity_holds ? "holds" : "fails") << "\n";
    const auto& h = tr.lemma_hypotheses;
    os << "  hypotheses:     gcd(y1,y2)=1 " << yesno(h.gcd_y1_y2_is_1) << "; p|y2 "
       << yesno(h.p_divides_y2) << "; r|y2-y1 " << yesno(h.r_divides_y2_minus_y1)
       << "; r|y2-2^(r-2)p*y1 " << yesno(h.r_divides_y2_minus_2r2p_y1) << " (operative: "
       << dioph::to_string(h.variant) << ")\n";
    os << "  note:           " << tr.contradiction_note << "\n";
    return os.str();
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"exact-arithmetic toolkit for the equation x^4 - q^4 = p*y^r"};
    app.fallthrough();
    app.require_subcommand(1);

    GlobalOpts g;
    app.add_flag("--json", g.json_out, "emit a machine-readable JSON report");
    app.add_option("--out", g.out_path, "write the report to FILE instead of stdout");
    app.add_flag("--full-order", g.full_order,
                 "generator checks run at the full modulus q^(r-1) instead of q^2");
    app.add_option("--budget", g.budget, "work budget for the subcommand (command-specific)");

    std::string a_p, a_q, a_r, a_x, a_y, a_a, a_n, a_l, a_k;
    std::string pmax_s, qmax_s, rmax_s, csv_path, ybound_s, xbound_s;

    CLI::App* c_check = app.add_subcommand("check", "decide the eight hypotheses for (p, q, r)");
    c_check->add_option("p", a_p)->required()->check(IntArg);
    c_check->add_option("q", a_q)->required()->check(IntArg);
    c_check->add_option("r", a_r)->required()->check(IntArg);

    CLI::App* c_scan = app.add_subcommand("scan", "enumerate satisfying triples in a box");
    c_scan->add_option("--p-max", pmax_s)->required()->check(IntArg);
    c_scan->add_option("--q-max", qmax_s)->required()->check(IntArg);
    c_scan->add_option("--r-max", rmax_s)->required()->check(IntArg);
    c_scan->add_option("--csv", csv_path, "also write one p,q,r row per triple to FILE");

    CLI::App* c_verify = app.add_subcommand("verify", "verify a claimed solution (x, y)");
    c_verify->add_option("p", a_p)->required()->check(IntArg);
    c_verify->add_option("q", a_q)->required()->check(IntArg);
    c_verify->add_option("r", a_r)->required()->check(IntArg);
    c_verify->add_option("x", a_x)->required()->check(IntArg);
    c_verify->add_option("y", a_y)->required()->check(IntArg);

    CLI::App* c_search = app.add_subcommand("search", "exhaustive solution search over |y| <= y-bound");
    c_search->add_option("p", a_p)->required()->check(IntArg);
    c_search->add_option("q", a_q)->required()->check(IntArg);
    c_search->add_option("r", a_r)->required()->check(IntArg);
    c_search->add_option("--y-bound", ybound_s)->required()->check(IntArg);
    c_search->add_option("--x-bound", xbound_s)->required()->check(IntArg);

    CLI::App* c_trace = app.add_subcommand("trace", "case decomposition of a coprime solution");
    c_trace->add_option("p", a_p)->required()->check(IntArg);
    c_trace->add_option("q", a_q)->required()->check(IntArg);
    c_trace->add_option("r", a_r)->required()->check(IntArg);
    c_trace->add_option("x", a_x)->required()->check(IntArg);
    c_trace->add_option("y", a_y)->required()->check(IntArg);

    CLI::App* c_split = app.add_subcommand("split", "splitting of prime p in Z[zeta_l]");
    c_split->add_option("p", a_p)->required()->check(IntArg);
    c_split->add_option("l", a_l)->required()->check(IntArg);

    CLI::App* c_symbol = app.add_subcommand("symbol", "rational r-power residue character {a/(q)}");
    c_symbol->add_option("a", a_a)->required()->check(IntArg);
    c_symbol->add_option("r", a_r)->required()->check(IntArg);
    c_symbol->add_option("q", a_q)->required()->check(IntArg);

    CLI::App* c_order = app.add_subcommand("order", "multiplicative order of a modulo n");
    c_order->add_option("a", a_a)->required()->check(IntArg);
    c_order->add_option("n", a_n)->required()->check(IntArg);

    CLI::App* c_gen = app.add_subcommand("generator", "does a generate U(Z_{q^k})?");
    c_gen->add_option("a", a_a)->required()->check(IntArg);
    c_gen->add_option("q", a_q)->required()->check(IntArg);
    c_gen->add_option("k", a_k)->required()->check(IntArg);

    CLI::App* c_residue = app.add_subcommand("residue", "is a an r-power residue mod q?");
    c_residue->add_option("a", a_a)->required()->check(IntArg);
    c_residue->add_option("r", a_r)->required()->check(IntArg);
    c_residue->add_option("q", a_q)->required()->check(IntArg);

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        std::cout << app.help();
        return 0;
    } catch (const CLI::CallForAllHelp& e) {
        std::cout << app.help("", CLI::AppFormatMode::All);
        return 0;
    } catch (const CLI::ParseError& e) {
        std::cerr << "usage error: " << e.what() << "\n";
        return 2;
    }

    try {
        arith::FactorizeOptions fopts;
        if (g.budget > 0) fopts.rho_budget = g.budget;

        const auto t0 = std::chrono::steady_clock::now();
        auto elapsed_ms = [&t0] {
            return std::chrono::duration_cast<std::chrono::milliseconds>(
                       std::chrono::steady_clock::now() - t0)
                .count();
        };

        if (c_check->parsed()) {
            Int p = parse_int(a_p), q = parse_int(a_q), r = parse_int(a_r);
            cond::CheckOptions copts{g.full_order, fopts};
            cond::ConditionReport rep = cond::check_conditions(p, q, r, copts);
            json inputs{{"p", p.get_str()}, {"q", q.get_str()}, {"r", r.get_str()},
                        {"full_order", g.full_order}};
            emit(g, envelope("check", inputs, json(rep), elapsed_ms()), render_check(rep));
        } else if (c_scan->parsed()) {
            Int pmax = parse_int(pmax_s), qmax = parse_int(qmax_s), rmax = parse_int(rmax_s);
            cond::EnumerateOptions eopts;
            eopts.check.full_order = g.full_order;
            if (g.budget > 0) eopts.candidate_budget = g.budget;
            auto reps = cond::enumerate_triples(pmax, qmax, rmax, eopts);
            json triples = json::array();
            std::ostringstream human;
            std::ostringstream csv;
            csv << "p,q,r\n";
            for (const auto& rep : reps) {
                triples.push_back(json{{"p", rep.triple.p.get_str()},
                                       {"q", rep.triple.q.get_str()},
                                       {"r", rep.triple.r.get_str()}});
                human << "p=" << rep.triple.p.get_str() << ", q=" << rep.triple.q.get_str()
                      << ", r=" << rep.triple.r.get_str() << "\n";
                csv << rep.triple.p.get_str() << "," << rep.triple.q.get_str() << ","
                    << rep.triple.r.get_str() << "\n";
            }
            human << reps.size() << " satisfying triple(s)\n";
            if (!csv_path.empty()) {
                std::ofstream f(csv_path);
                if (!f) x4q4::raise("DomainError", "cannot open csv file " + csv_path);
                f << csv.str();
            }
            json inputs{{"p_max", pmax.get_str()}, {"q_max", qmax.get_str()},
                        {"r_max", rmax.get_str()}, {"full_order", g.full_order}};
            json outputs{{"count", reps.size()}, {"triples", triples}};
            emit(g, envelope("scan", inputs, outputs, elapsed_ms()), human.str());
        } else if (c_verify->parsed()) {
            auto inst = dioph::EquationInstance::make(parse_int(a_p), parse_int(a_q),
                                                      parse_int(a_r));
            Int x = parse_int(a_x), y = parse_int(a_y);
            dioph::SolutionRecord rec = dioph::verify_solution(inst, x, y);
            json inputs{{"p", inst.p.get_str()}, {"q", inst.q.get_str()},
                        {"r", inst.r.get_str()}, {"x", x.get_str()}, {"y", y.get_str()}};
            std::string human = "x^4 - q^4 = p y^r at p=" + inst.p.get_str() + ", q=" +
                                inst.q.get_str() + ", r=" + inst.r.get_str() + "\n" +
                                render_record(rec) + "\n";
            emit(g, envelope("verify", inputs, json(rec), elapsed_ms()), human);
        } else if (c_search->parsed()) {
            auto inst = dioph::EquationInstance::make(parse_int(a_p), parse_int(a_q),
                                                      parse_int(a_r));
            Int yb = parse_int(ybound_s), xb = parse_int(xbound_s);
            dioph::SearchOptions sopts;
            if (g.budget > 0) sopts.y_budget = g.budget;
            auto recs = dioph::search_solutions(inst, yb, xb, sopts);
            json arr = json::array();
            std::ostringstream human;
            for (const auto& rec : recs) {
                arr.push_back(json(rec));
                human << render_record(rec) << "\n";
            }
            human << recs.size() << " record(s)\n";
            json inputs{{"p", inst.p.get_str()}, {"q", inst.q.get_str()},
                        {"r", inst.r.get_str()}, {"y_bound", yb.get_str()},
                        {"x_bound", xb.get_str()}};
            json outputs{{"count", recs.size()}, {"records", arr}};
            emit(g, envelope("search", inputs, outputs, elapsed_ms()), human.str());
        } else if (c_trace->parsed()) {
            auto inst = dioph::EquationInstance::make(parse_int(a_p), parse_int(a_q),
                                                      parse_int(a_r));
            Int x = parse_int(a_x), y = parse_int(a_y);
            dioph::TraceReport tr = dioph::decompose_solution(inst, x, y);
            json inputs{{"p", inst.p.get_str()}, {"q", inst.q.get_str()},
                        {"r", inst.r.get_str()}, {"x", x.get_str()}, {"y", y.get_str()}};
            emit(g, envelope("trace", inputs, json(tr), elapsed_ms()),
                 render_trace(inst, x, y, tr));
        } else if (c_split->parsed()) {
            Int p = parse_int(a_p), l = parse_int(a_l);
            cyclo::SplittingReport rep = cyclo::split_prime_in_cyclotomic(p, l);
            json inputs{{"p", p.get_str()}, {"l", l.get_str()}};
            std::ostringstream human;
            human << p.get_str() << " in Z[ζ_" << l.get_str() << "]: e=" << rep.e.get_str()
                  << ", f=" << rep.f.get_str() << ", g=" << rep.g.get_str() << ", norm="
                  << rep.norm.get_str() << "\n";
            emit(g, envelope("split", inputs, json(rep), elapsed_ms()), human.str());
        } else if (c_symbol->parsed()) {
            Int a = parse_int(a_a), r = parse_int(a_r), q = parse_int(a_q);
            cyclo::SymbolValue sym = cyclo::power_residue_symbol_rational(a, r, q);
            cyclo::KummerSplitting split = cyclo::splitting_from_symbol(sym);
            json inputs{{"a", a.get_str()}, {"r", r.get_str()}, {"q", q.get_str()}};
            json outputs{{"symbol", json(sym)}, {"splitting", cyclo::to_string(split)}};
            std::ostringstream human;
            human << "{" << a.get_str() << "/(" << q.get_str() << ")} with r=" << r.get_str()
                  << ": " << cyclo::to_string(sym.tag);
            if (sym.tag != cyclo::SymbolTag::Zero)
                human << " (witness " << sym.witness.get_str() << ", f="
                      << sym.residual_degree.get_str() << ")";
            human << " → " << cyclo::to_string(split) << "\n";
            emit(g, envelope("symbol", inputs, outputs, elapsed_ms()), human.str());
        } else if (c_order->parsed()) {
            Int a = parse_int(a_a), n = parse_int(a_n);
            Int ord = arith::multiplicative_order(a, n, fopts);
            json inputs{{"a", a.get_str()}, {"n", n.get_str()}};
            json outputs{{"order", ord.get_str()}};
            emit(g, envelope("order", inputs, outputs, elapsed_ms()),
                 "ord_" + n.get_str() + "(" + a.get_str() + ") = " + ord.get_str() + "\n");
        } else if (c_gen->parsed()) {
            Int a = parse_int(a_a), q = parse_int(a_q);
            unsigned long k = parse_ulong(a_k, "k");
            bool ok = arith::is_generator_mod_prime_power(a, q, k, fopts);
            Int modulus;
            mpz_pow_ui(modulus.get_mpz_t(), q.get_mpz_t(), k);
            Int order = arith::multiplicative_order(a, modulus, fopts);
            Int group_order = (modulus / q) * (q - 1);
            json inputs{{"a", a.get_str()}, {"q", q.get_str()}, {"k", std::to_string(k)}};
            json outputs{{"is_generator", ok}, {"order", order.get_str()},
                         {"group_order", group_order.get_str()}, {"modulus", modulus.get_str()}};
            std::ostringstream human;
            human << a.get_str() << " generates U(Z_" << q.get_str() << "^" << k
                  << "): " << yesno(ok) << " (order " << order.get_str() << " of "
                  << group_order.get_str() << ")\n";
            emit(g, envelope("generator", inputs, outputs, elapsed_ms()), human.str());
        } else if (c_residue->parsed()) {
            Int a = parse_int(a_a), r = parse_int(a_r), q = parse_int(a_q);
            bool ok = cyclo::rth_power_residue_mod_prime(a, r, q);
            json inputs{{"a", a.get_str()}, {"r", r.get_str()}, {"q", q.get_str()}};
            json outputs{{"ok", ok}};
            std::ostringstream human;
            human << a.get_str() << " is a " << r.get_str() << "-power residue mod "
                  << q.get_str() << ": " << yesno(ok) << "\n";
            emit(g, envelope("residue", inputs, outputs, elapsed_ms()), human.str());
        }
    } catch (const x4q4::Error& e) {
        std::cerr << "error: " << e.code() << ": " << e.what() << "\n";
        return 1;
    } catch (const std::exception& e) {
        std::cerr << "error: InternalError: " << e.what() << "\n";
        return 1;
    }
    return 0;
}
