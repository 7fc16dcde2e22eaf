#include "snf/json_io.hpp"

namespace snf {

namespace {

[[noreturn]] void bad_field(const std::string& what) {
    throw std::invalid_argument("malformed JSON: " + what);
}

Exp3 exp3_from(const Json& j, int arity) {
    if (!j.is_array() || static_cast<int>(j.size()) != arity) bad_field("field 'e' must be an array of " + std::to_string(arity) + " exponents");
    Exp3 e{0, 0, 0};
    for (int i = 0; i < arity; ++i) {
        if (!j[i].is_number_integer()) bad_field("field 'e' must hold integers");
        e[i] = j[i].get<int>();
    }
    return e;
}

}  // namespace

Json to_json(const Rational& r) { return r.str(); }

Rational rational_from_json(const Json& j) {
    if (j.is_number_integer()) return Rational(Integer(j.get<long long>()));
    if (!j.is_string()) bad_field("field 'c' must be a \"p/q\" string");
    try {
        return Rational::parse(j.get<std::string>());
    } catch (const std::invalid_argument& e) {
        bad_field(std::string("field 'c': ") + e.what());
    }
}

Json to_json(const Poly3& p) {
    Json arr = Json::array();
    for (auto& [e, c] : p.terms())
        arr.push_back({{"e", {e[0], e[1], e[2]}}, {"c", c.str()}});
    return arr;
}

Poly3 poly3_from_json(const Json& j) {
    if (!j.is_array()) bad_field("polynomial must be an array of terms");
    Poly3 p;
    for (auto& t : j) {
        if (!t.contains("e") || !t.contains("c")) bad_field("polynomial term needs fields 'e' and 'c'");
        Exp3 e = exp3_from(t["e"], 3);
        if (e[0] < 0 || e[1] < 0 || e[2] < 0) bad_field("field 'e' must be nonnegative");
        p.add_term(e, rational_from_json(t["c"]));
    }
    return p;
}

Json to_json(const RatFunc3& f) {
    RatFunc3 n = f.normalized();
    return {{"num", to_json(n.num())}, {"den", to_json(n.den())}};
}

RatFunc3 ratfunc3_from_json(const Json& j) {
    if (!j.contains("num")) bad_field("rational function needs field 'num'");
    Poly3 num = poly3_from_json(j["num"]);
    Poly3 den = j.contains("den") ? poly3_from_json(j["den"]) : Poly3(Rational(1));
    if (den.is_zero()) bad_field("field 'den' must be nonzero");
    return RatFunc3(num, den);
}

Json to_json(const VField3& v) {
    return {{"x", to_json(v.x)}, {"y", to_json(v.y)}, {"z", to_json(v.z)}};
}

VField3 vfield3_from_json(const Json& j) {
    for (const char* f : {"x", "y", "z"})
        if (!j.contains(f)) bad_field(std::string("vector field needs field '") + f + "'");
    return {ratfunc3_from_json(j["x"]), ratfunc3_from_json(j["y"]), ratfunc3_from_json(j["z"])};
}

Json to_json(const BasisIndex& idx) {
    return {{"fam", family_name(idx.family)}, {"l", idx.l}, {"k", idx.k}};
}

BasisIndex basis_index_from_json(const Json& j) {
    for (const char* f : {"fam", "l", "k"})
        if (!j.contains(f)) bad_field(std::string("basis index needs field '") + f + "'");
    if (!j["fam"].is_string()) bad_field("field 'fam' must be a string");
    if (!j["l"].is_number_integer() || !j["k"].is_number_integer())
        bad_field("fields 'l' and 'k' must be integers");
    Family fam;
    try {
        fam = family_from_name(j["fam"].get<std::string>());
    } catch (const std::invalid_argument& e) {
        bad_field(std::string("field 'fam': ") + e.what());
    }
    return {fam, j["l"].get<int>(), j["k"].get<int>()};
}

Json to_json(const LieElement& e) {
    Json arr = Json::array();
    for (auto& [i, c] : e.terms()) {
        Json t = to_json(i);
        t["c"] = c.str();
        arr.push_back(t);
    }
    return arr;
}

LieElement lie_element_from_json(const Json& j) {
    if (!j.is_array()) bad_field("Lie element must be an array of terms");
    LieElement e;
    for (auto& t : j) {
        BasisIndex idx = basis_index_from_json(t);
        if (!t.contains("c")) bad_field("Lie element term needs field 'c'");
        if (!idx.valid()) bad_field("invalid basis index " + idx.str());
        e.add(idx, rational_from_json(t["c"]));
    }
    return e;
}

Json to_json(const BivarPoly& p) {
    Json arr = Json::array();
    for (auto& [e, c] : p.terms())
        arr.push_back({{"e", {e.first, e.second}}, {"c", c.str()}});
    return arr;
}

Json to_json(const NFInput& in) {
    return {{"series", to_json(in.series)}, {"degree", in.degree}};
}

NFInput nf_input_from_json(const Json& j) {
    if (!j.contains("series")) bad_field("normal-form input needs field 'series'");
    NFInput in;
    in.series = lie_element_from_json(j["series"]);
    if (j.contains("degree")) {
        if (!j["degree"].is_number_integer()) bad_field("field 'degree' must be an integer");
        in.degree = j["degree"].get<int>();
    }
    return in;
}

namespace {
const char* scheme_name(GradingScheme s) {
    return s == GradingScheme::SecondLevel ? "second_level" : "r_adapted";
}
}  // namespace

Json to_json(const NFReport& rep) {
    Json j;
    j["output"] = to_json(rep.output);
    j["r"] = rep.r ? Json(*rep.r) : Json(nullptr);
    j["s"] = rep.s ? Json(*rep.s) : Json(nullptr);
    j["degree"] = rep.degree;
    j["scheme"] = scheme_name(rep.final_scheme);
    j["second_stage_degree"] = rep.second_stage_degree;
    Json gens = Json::array();
    for (auto& st : rep.generators)
        gens.push_back({{"grading", scheme_name(st.scheme)},
                        {"r", st.r},
                        {"grade", st.grade},
                        {"gen", to_json(st.gen)}});
    j["generators"] = gens;
    Json obs = Json::array();
    for (auto& ob : rep.obstructions) {
        Json o = to_json(ob.idx);
        o["c"] = ob.coeff.str();
        o["grade"] = ob.grade;
        o["stage"] = ob.stage;
        o["note"] = ob.note;
        obs.push_back(o);
    }
    j["obstructions"] = obs;
    if (rep.rescale) {
        j["rescale"] = {{"base", rep.rescale->base.str()},
                        {"exp", "1/" + std::to_string(rep.rescale->two_r)},
                        {"sign", rep.rescale->sign},
                        {"exact", rep.rescale->exact},
                        {"root", rep.rescale->exact ? Json(rep.rescale->root.str()) : Json(nullptr)}};
    } else {
        j["rescale"] = nullptr;
    }
    return j;
}

Json to_json(const PotentialSet& ps) {
    Json j;
    switch (ps.kind) {
        case PotentialKind::Hamiltonian: {
            j["kind"] = "hamiltonian";
            j["H"] = to_json(ps.hamiltonian->H);
            j["G"] = to_json(ps.hamiltonian->G);
            break;
        }
        case PotentialKind::Euler: {
            j["kind"] = "euler";
            Json pairs = Json::array();
            for (auto& p : ps.euler_pairs) {
                Json e;
                e["alpha"] = to_json(p.alpha);
                e["beta_gradient"] = to_json(p.beta_grad);
                e["beta"] = p.beta ? to_json(*p.beta) : Json(nullptr);
                pairs.push_back(e);
            }
            j["pairs"] = pairs;
            break;
        }
        case PotentialKind::VectorPotential: {
            j["kind"] = "vector_potential";
            j["variant"] = ps.variant == PotentialVariant::ClosedForm ? "closed_form" : "constructive";
            if (ps.zero_integration_constants) j["integration_constants"] = "0";
            j["A"] = to_json(ps.vector_potential);
            break;
        }
        case PotentialKind::Clebsch: {
            j["kind"] = "clebsch";
            Json triples = Json::array();
            for (auto& t : ps.clebsch_triples)
                triples.push_back({{"f1", to_json(t.f1)}, {"f2", to_json(t.f2)}, {"f3", to_json(t.f3)}});
            j["triples"] = triples;
            break;
        }
    }
    return j;
}

Json to_json(const CubicSystem& sys) {
    auto dump = [](const std::map<Exp3, Rational>& m) {
        Json arr = Json::array();
        for (auto& [e, c] : m)
            if (!c.is_zero()) arr.push_back({{"e", {e[0], e[1], e[2]}}, {"c", c.str()}});
        return arr;
    };
    return {{"a", dump(sys.a)}, {"b", dump(sys.b)}, {"c", dump(sys.c)}};
}

CubicSystem cubic_system_from_json(const Json& j) {
    CubicSystem sys;
    auto load = [&](const char* key, std::map<Exp3, Rational>& m) {
        if (!j.contains(key)) return;
        if (!j[key].is_array()) bad_field(std::string("field '") + key + "' must be an array");
        for (auto& t : j[key]) {
            if (!t.contains("e") || !t.contains("c"))
                bad_field(std::string("term in '") + key + "' needs fields 'e' and 'c'");
            Exp3 e = exp3_from(t["e"], 3);
            if (e[0] + e[1] + e[2] != 3 || e[0] < 0 || e[1] < 0 || e[2] < 0)
                bad_field(std::string("term in '") + key + "': exponents must form a cubic monomial");
            Rational c = rational_from_json(t["c"]);
            if (!c.is_zero()) m[e] = c;
        }
    };
    load("a", sys.a);
    load("b", sys.b);
    load("c", sys.c);
    return sys;
}

Json to_json(const CubicNF& nf) {
    return {{"a0", nf.a0.str()},     {"a1", nf.a1.str()},
            {"b0", nf.b0.str()},     {"b1", nf.b1.str()},
            {"complement", {{"rho3_drho", nf.e1.str()}, {"x2rho_drho", nf.e2.str()}}},
            {"resonant", to_json(nf.resonant)},
            {"generator", to_json(nf.generator)}};
}

Json to_json(const MembershipResult& r) {
    return {{"verdict", r.verdict},
            {"residuals", {r.residual1.str(), r.residual2.str()}}};
}

Json to_json(const ExtractionResult& r) {
    return {{"a0", r.a0.str()}, {"b0", r.b0.str()}, {"a1", r.a1.str()},
            {"b1", r.b1.str()}, {"membership", r.membership}};
}

Json to_json(const ChuaReport& rep) {
    Json j;
    j["mode"] = rep.mode == ChuaMode::Exact ? "exact" : "float";
    j["params"] = {{"alpha", rep.alpha.str()}, {"gamma", rep.gamma.str()}, {"a", rep.a.str()}};
    Json derived;
    derived["c"] = rep.c.str();
    derived["beta"] = rep.beta.str();
    derived["omega0sq"] = rep.omega0sq.str();
    derived["mu1"] = rep.mu.first.str();
    derived["mu2"] = rep.mu.second.str();
    derived["provenance"] = {
        {"c", "-(gamma+1)/alpha"},
        {"beta", "-gamma(alpha+gamma+1)/(gamma+1)"},
        {"omega0sq", "-((gamma+1)^3+alpha(2 gamma+1))/(gamma+1)"},
        {"mu", "membership conditions of the transformed cubic system"}};
    if (rep.mode == ChuaMode::Exact) {
        derived["omega0"] = rep.omega0->str();
        j["derived"] = derived;
        j["cubic_system"] = to_json(*rep.cubic);
        j["membership"] = to_json(*rep.membership);
        j["coefficients"] = to_json(*rep.coeffs);
        j["normal_form"] = to_json(*rep.normal_form);
        j["r"] = rep.r ? Json(*rep.r) : Json(nullptr);
        j["s"] = rep.s ? Json(*rep.s) : Json(nullptr);
        if (rep.groupings)
            j["groupings"] = {{"gH", rep.groupings->first.str()},
                              {"gT", rep.groupings->second.str()},
                              {"note",
                               "a0 = gH*3(gamma+1)/(2 gamma); a1 = gH*2 alpha gamma/((gamma+1)(alpha+"
                               "gamma+1)); b0 = gT*(gamma+1)^2/(4 gamma^2); b1 = gT*alpha/(alpha+"
                               "gamma+1)"}};
    } else {
        derived["omega0"] = rep.omega0_f;
        j["derived"] = derived;
        j["membership"] = {{"verdict", rep.membership_f},
                           {"residuals", {rep.residuals_f[0], rep.residuals_f[1]}},
                           {"tolerance", kChuaFloatTol}};
        j["coefficients"] = {{"a0", rep.coeffs_f[0]},
                             {"a1", rep.coeffs_f[1]},
                             {"b0", rep.coeffs_f[2]},
                             {"b1", rep.coeffs_f[3]}};
    }
    return j;
}

Json with_schema(Json payload) {
    payload["schema"] = kSchemaTag;
    return payload;
}

}  // namespace snf
