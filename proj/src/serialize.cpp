#include "x4q4/serialize.hpp"

namespace x4q4 {

json int_to_json(const arith::Int& v) {
    return v.get_str();
}

arith::Int int_from_json(const json& j) {
    if (!j.is_string()) raise("DomainError", "expected a decimal string");
    return arith::Int(j.get<std::string>());
}

} // namespace x4q4

namespace x4q4::cyclotomic {

void to_json(json& j, const SplittingReport& rep) {
    j = json{{"rational_prime", int_to_json(rep.rational_prime)},
             {"conductor", int_to_json(rep.conductor)},
             {"e", int_to_json(rep.e)},
             {"f", int_to_json(rep.f)},
             {"g", int_to_json(rep.g)},
             {"norm", int_to_json(rep.norm)}};
}

void from_json(const json& j, SplittingReport& rep) {
    rep.rational_prime = int_from_json(j.at("rational_prime"));
    rep.conductor = int_from_json(j.at("conductor"));
    rep.e = int_from_json(j.at("e"));
    rep.f = int_from_json(j.at("f"));
    rep.g = int_from_json(j.at("g"));
    rep.norm = int_from_json(j.at("norm"));
}

namespace {

SymbolTag tag_from_string(const std::string& s) {
    if (s == "Zero") return SymbolTag::Zero;
    if (s == "One") return SymbolTag::One;
    if (s == "Nontrivial") return SymbolTag::Nontrivial;
    raise("DomainError", "unknown symbol tag: " + s);
}

} // namespace

void to_json(json& j, const SymbolValue& sym) {
    j = json{{"tag", to_string(sym.tag)},
             {"residual_degree", int_to_json(sym.residual_degree)}};
    j["witness"] = sym.tag == SymbolTag::Zero ? json() : int_to_json(sym.witness);
}

void from_json(const json& j, SymbolValue& sym) {
    sym.tag = tag_from_string(j.at("tag").get<std::string>());
    sym.residual_degree = int_from_json(j.at("residual_degree"));
    sym.witness = sym.tag == SymbolTag::Zero ? arith::Int(0) : int_from_json(j.at("witness"));
}

} // namespace x4q4::cyclotomic

namespace x4q4::conditions {

namespace {

json residue_to_json(const ResidueCheck& chk) {
    return json{{"ok", chk.ok}, {"residue", int_to_json(chk.residue)}};
}

ResidueCheck residue_from_json(const json& j) {
    ResidueCheck chk;
    chk.ok = j.at("ok").get<bool>();
    chk.residue = int_from_json(j.at("residue"));
    return chk;
}

json generator_to_json(const GeneratorCheck& chk) {
    return json{{"ok", chk.ok},
                {"applicable", chk.applicable},
                {"lifted", chk.lifted},
                {"modulus", int_to_json(chk.modulus)},
                {"order", int_to_json(chk.order)},
                {"group_order", int_to_json(chk.group_order)}};
}

GeneratorCheck generator_from_json(const json& j) {
    GeneratorCheck chk;
    chk.ok = j.at("ok").get<bool>();
    chk.applicable = j.at("applicable").get<bool>();
    chk.lifted = j.at("lifted").get<bool>();
    chk.modulus = int_from_json(j.at("modulus"));
    chk.order = int_from_json(j.at("order"));
    chk.group_order = int_from_json(j.at("group_order"));
    return chk;
}

} // namespace

void to_json(json& j, const ConditionReport& rep) {
    j = json{{"p", int_to_json(rep.triple.p)},
             {"q", int_to_json(rep.triple.q)},
             {"r", int_to_json(rep.triple.r)},
             {"distinct", rep.distinct},
             {"q_not_two", rep.q_not_two},
             {"p_mod4", residue_to_json(rep.p_mod4)},
             {"p_mod_r", residue_to_json(rep.p_mod_r)},
             {"r_mod8", residue_to_json(rep.r_mod8)},
             {"p_generates", generator_to_json(rep.p_generates)},
             {"q_generates", generator_to_json(rep.q_generates)},
             {"two_residue", rep.two_residue},
             {"all_satisfied", rep.all_satisfied}};
    j["two_residue_symbol"] =
        rep.two_residue_symbol ? json(*rep.two_residue_symbol) : json();
}

void from_json(const json& j, ConditionReport& rep) {
    rep.triple.p = int_from_json(j.at("p"));
    rep.triple.q = int_from_json(j.at("q"));
    rep.triple.r = int_from_json(j.at("r"));
    rep.distinct = j.at("distinct").get<bool>();
    rep.q_not_two = j.at("q_not_two").get<bool>();
    rep.p_mod4 = residue_from_json(j.at("p_mod4"));
    rep.p_mod_r = residue_from_json(j.at("p_mod_r"));
    rep.r_mod8 = residue_from_json(j.at("r_mod8"));
    rep.p_generates = generator_from_json(j.at("p_generates"));
    rep.q_generates = generator_from_json(j.at("q_generates"));
    rep.two_residue = j.at("two_residue").get<bool>();
    rep.all_satisfied = j.at("all_satisfied").get<bool>();
    const json& sym = j.at("two_residue_symbol");
    if (sym.is_null())
        rep.two_residue_symbol.reset();
    else
        rep.two_residue_symbol = sym.get<cyclotomic::SymbolValue>();
}

} // namespace x4q4::conditions

namespace x4q4::diophantine {

void to_json(json& j, const SolutionRecord& rec) {
    j = json{{"x", int_to_json(rec.x)},
             {"y", int_to_json(rec.y)},
             {"is_solution", rec.is_solution},
             {"coprime", rec.coprime},
             {"xy_nonzero", rec.xy_nonzero},
             {"residual", int_to_json(rec.residual)}};
    j["p_divides_y"] = rec.p_divides_y ? json(*rec.p_divides_y) : json();
}

void from_json(const json& j, SolutionRecord& rec) {
    rec.x = int_from_json(j.at("x"));
    rec.y = int_from_json(j.at("y"));
    rec.is_solution = j.at("is_solution").get<bool>();
    rec.coprime = j.at("coprime").get<bool>();
    rec.xy_nonzero = j.at("xy_nonzero").get<bool>();
    rec.residual = int_from_json(j.at("residual"));
    const json& pd = j.at("p_divides_y");
    if (pd.is_null())
        rec.p_divides_y.reset();
    else
        rec.p_divides_y = pd.get<bool>();
}

namespace {

Parity parity_from_string(const std::string& s) {
    if (s == "XOdd") return Parity::XOdd;
    if (s == "XEven") return Parity::XEven;
    raise("DomainError", "unknown parity case: " + s);
}

Branch branch_from_string(const std::string& s) {
    if (s == "B1a") return Branch::B1a;
    if (s == "B1b") return Branch::B1b;
    if (s == "B2a") return Branch::B2a;
    if (s == "B2b") return Branch::B2b;
    if (s == "None") return Branch::None;
    raise("DomainError", "unknown branch: " + s);
}

LemmaVariant variant_from_string(const std::string& s) {
    if (s == "Plain") return LemmaVariant::Plain;
    if (s == "TwoPower") return LemmaVariant::TwoPower;
    raise("DomainError", "unknown lemma variant: " + s);
}

json hypotheses_to_json(const HypothesisReport& rep) {
    return json{{"gcd_y1_y2_is_1", rep.gcd_y1_y2_is_1},
                {"p_divides_y2", rep.p_divides_y2},
                {"r_divides_y2_minus_y1", rep.r_divides_y2_minus_y1},
                {"r_divides_y2_minus_2r2p_y1", rep.r_divides_y2_minus_2r2p_y1},
                {"variant", to_string(rep.variant)}};
}

HypothesisReport hypotheses_from_json(const json& j) {
    HypothesisReport rep;
    rep.gcd_y1_y2_is_1 = j.at("gcd_y1_y2_is_1").get<bool>();
    rep.p_divides_y2 = j.at("p_divides_y2").get<bool>();
    rep.r_divides_y2_minus_y1 = j.at("r_divides_y2_minus_y1").get<bool>();
    rep.r_divides_y2_minus_2r2p_y1 = j.at("r_divides_y2_minus_2r2p_y1").get<bool>();
    rep.variant = variant_from_string(j.at("variant").get<std::string>());
    return rep;
}

} // namespace

void to_json(json& j, const TraceReport& tr) {
    j = json{{"parity_case", to_string(tr.parity_case)},
             {"d", int_to_json(tr.d)},
             {"branch", to_string(tr.branch)},
             {"key_identity_holds", tr.key_identity_holds},
             {"lemma_hypotheses", hypotheses_to_json(tr.lemma_hypotheses)},
             {"contradiction_note", tr.contradiction_note}};
    j["y1"] = tr.y1 ? int_to_json(*tr.y1) : json();
    j["y2"] = tr.y2 ? int_to_json(*tr.y2) : json();
}

void from_json(const json& j, TraceReport& tr) {
    tr.parity_case = parity_from_string(j.at("parity_case").get<std::string>());
    tr.d = int_from_json(j.at("d"));
    tr.branch = branch_from_string(j.at("branch").get<std::string>());
    tr.key_identity_holds = j.at("key_identity_holds").get<bool>();
    tr.lemma_hypotheses = hypotheses_from_json(j.at("lemma_hypotheses"));
    tr.contradiction_note = j.at("contradiction_note").get<std::string>();
    const json& y1 = j.at("y1");
    tr.y1 = y1.is_null() ? std::optional<arith::Int>() : int_from_json(y1);
    const json& y2 = j.at("y2");
    tr.y2 = y2.is_null() ? std::optional<arith::Int>() : int_from_json(y2);
}

} // namespace x4q4::diophantine
