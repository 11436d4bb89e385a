#include "cqs/cli.hpp"

#include <functional>
#include <map>
#include <sstream>

#include <json.hpp>

#include "cqs/cfrac.hpp"
#include "cqs/deform.hpp"
#include "cqs/gfan.hpp"
#include "cqs/invariant_ring.hpp"
#include "cqs/mckay.hpp"
#include "cqs/reconstruct.hpp"
#include "cqs/toric.hpp"

namespace cqs::cli {

namespace {

using Json = nlohmann::ordered_json;

struct UsageError : std::invalid_argument {
    using std::invalid_argument::invalid_argument;
};

// A report under construction: the JSON payload plus its text rendering.
struct Report {
    Json json;
    std::ostringstream text;
    std::string dot;
    bool failed_check = false;
    bool unsupported = false;
    std::string note;

    void check(const std::string& name, bool ok) {
        json["checks"][name] = ok;
        text << "check " << name << ' ' << (ok ? "ok" : "FAILED") << '\n';
        if (!ok) failed_check = true;
    }
    void golden(const std::string& name, bool ok) {
        json["golden"][name] = ok;
        text << "golden " << name << ' ' << (ok ? "match" : "MISMATCH") << '\n';
        if (!ok) failed_check = true;
    }
};

Json ray_json(const Ray& r) { return Json::array({r.x, r.y}); }

Json fraction_json(const ContinuedFraction& cf) { return cf.entries; }

std::string relation_text(const VariableTable& vars, const Polynomial& lhs, const Polynomial& rhs) {
    return format(lhs, vars) + " = " + format(rhs, vars);
}

bool is_example(const SingularityInput& s, Int n, Int q) { return s.n == n && s.q == q; }

// s = t = 0 turns each total-space relation into the matching binomial.
bool specializes(const SingularityInput& s, const VersalPresentation& vp) {
    auto eqs = defining_equations(s);
    if (eqs.size() != vp.relations.size()) return false;
    auto e = dual_fraction(s).size() + 2;
    std::vector<std::size_t> params;
    for (auto k = e; k < vp.vars.size(); ++k) params.push_back(k);
    for (std::size_t k = 0; k < eqs.size(); ++k)
        if (set_zero(vp.relations[k].relation(), params) != remap(as_polynomial(eqs[k], e), z_variables(e), vp.vars))
            return false;
    return true;
}

// ---------------------------------------------------------------- payloads

void add_resolve(Report& r, const SingularityInput& s) {
    auto b = fraction(s), a = dual_fraction(s);
    auto id = identities(s);
    auto t = is_T_singularity(s);
    r.json["fraction"] = {{"entries", fraction_json(b)}, {"r", b.size()}, {"e", id.e}};
    r.json["dual_fraction"] = {{"entries", fraction_json(a)}};
    if (t)
        r.json["fraction"]["t_singularity"] = {{"d", t->d}, {"m", t->m}, {"a", t->a}};
    else
        r.json["fraction"]["t_singularity"] = nullptr;
    r.text << "fraction " << b.str() << '\n'
           << "dual " << a.str() << '\n'
           << "e=" << id.e << '\n'
           << "r=" << b.size() << '\n'
           << "t_singularity ";
    if (t)
        r.text << "d=" << t->d << " m=" << t->m << " a=" << t->a << '\n';
    else
        r.text << "no\n";
    r.check("sum_b_equals_sum_a", id.sum_a == id.sum_b);
    r.check("e_equals_dual_length_plus_2", id.e == static_cast<Int>(a.size()) + 2);
    r.check("round_trip", hj_evaluate(b) == Rational(s.n, s.q) && hj_evaluate(a) == Rational(s.n, s.n - s.q));
    if (is_example(s, 11, 7)) r.golden("fractions", b.str() == "[2,3,2,2]" && a.str() == "[3,4]");
}

void add_invariants(Report& r, const SingularityInput& s) {
    auto gens = generators(s);
    auto cycles = mckay_cycles(s);
    Json gj = Json::array();
    for (std::size_t k = 0; k < gens.size(); ++k) {
        auto& g = gens[k];
        gj.push_back({{"symbol", g.symbol()},
                      {"monomial", format_monomial_xy(g.i, g.j)},
                      {"x", g.i},
                      {"y", g.j},
                      {"cycle", {{"vertices", cycles[k].vertices}, {"steps", cycles[k].steps}}}});
        r.text << g.symbol() << " = " << format_monomial_xy(g.i, g.j) << "  cycle " << cycles[k].steps << '\n';
    }
    r.json["generators"] = gj;

    auto vars = z_variables(gens.size());
    Json ej = Json::array();
    for (auto& rel : defining_equations(s)) {
        Monomial lhs(gens.size()), rhs(rel.rhs);
        lhs[rel.left - 1] += 1;
        lhs[rel.right - 1] += 1;
        auto line = format_monomial(lhs, vars) + " = " + format_monomial(rhs, vars);
        ej.push_back({{"i", rel.left}, {"j", rel.right}, {"rhs", rel.rhs}, {"text", line}});
        r.text << line << '\n';
    }
    r.json["equations"] = ej;
    auto e = static_cast<Int>(gens.size());
    r.check("relation_count", static_cast<Int>(ej.size()) == (e - 1) * (e - 2) / 2);
    r.check("substitution", verify_presentation(s));
    if (is_example(s, 11, 7)) {
        bool g = gens.size() == 4 && gj[0]["monomial"] == "x^11" && gj[1]["monomial"] == "x^4*y" &&
                 gj[2]["monomial"] == "x*y^3" && gj[3]["monomial"] == "y^11";
        bool eq = ej.size() == 3 && ej[0]["text"] == "z_1*z_3 = z_2^3" && ej[1]["text"] == "z_2*z_4 = z_3^4";
        r.golden("generators", g);
        r.golden("equations", eq);
    }
}

void add_toric(Report& r, const SingularityInput& s) {
    auto fan = resolution_fan(s);
    auto si = self_intersections(fan);
    Json rays = Json::array();
    for (auto& ray : fan.rays) rays.push_back(ray_json(ray));
    Json hb = Json::array();
    for (auto& [a, b] : hilbert_basis_dual(s)) hb.push_back(Json::array({a, b}));
    r.json["fan"] = {{"denominator", fan.denominator},
                     {"rays", rays},
                     {"self_intersections", fraction_json(si)},
                     {"hilbert_basis_dual", hb}};
    r.text << "denominator " << fan.denominator << '\n' << "rays";
    for (auto& ray : fan.rays) r.text << " (" << ray.x << ',' << ray.y << ')';
    r.text << '\n' << "self_intersections " << si.str() << '\n' << "hilbert_basis_dual";
    for (auto& p : hb) r.text << " (" << p[0] << ',' << p[1] << ')';
    r.text << '\n';
    r.check("unimodular", is_unimodular(fan));
    r.check("self_intersections_match_fraction", si == fraction(s));
    r.check("hilbert_basis_matches_generators", hb.size() == generators(s).size());
    if (is_example(s, 11, 7)) {
        std::vector<Ray> want{{8, 1}, {5, 2}, {2, 3}, {1, 7}};
        r.golden("rays", fan.interior() == want);
    }
}

void add_mckay(Report& r, const SingularityInput& s) {
    auto sp = special_reps(s);
    auto curves = curve_rep_assignment(s);
    auto q = mckay_quiver(s);
    Json cj = Json::array();
    for (auto& c : curves)
        cj.push_back({{"curve", c.curve},
                      {"weight", c.weight},
                      {"x_corner", format_monomial_xy(c.x_corner, 0)},
                      {"y_corner", format_monomial_xy(0, c.y_corner)}});
    r.json["special"] = {{"reps", sp},
                         {"curves", cj},
                         {"g_basis_size", g_basis(s).size()},
                         {"quiver", {{"vertices", q.vertices.size()}, {"arrows", q.arrows.size()}}}};
    r.text << "special";
    for (auto k : sp) r.text << " rho_" << k;
    r.text << '\n';
    for (auto& c : curves) r.text << "curve " << c.curve << " -> rho_" << c.weight << '\n';
    r.check("count_equals_r", sp.size() == fraction(s).size());
    if (is_example(s, 11, 7)) r.golden("special", sp == std::vector<Int>{1, 2, 3, 7});
    r.dot = emit_dot(q, "mckay_" + std::to_string(s.n) + "_" + std::to_string(s.q));
}

void add_hilb(Report& r, const SingularityInput& s) {
    auto cl = g_clusters(s);
    Json cj = Json::array();
    for (auto& c : cl) {
        Json gens = Json::array();
        for (auto& [a, b] : c.generators) gens.push_back(format_monomial_xy(a, b));
        cj.push_back({{"heights", c.heights}, {"generators", gens}, {"ideal", format_ideal(c)}});
        r.text << format_ideal(c) << '\n';
    }
    r.json["clusters"] = cj;
    r.check("count_equals_r_plus_1", cl.size() == fraction(s).size() + 1);
    if (is_example(s, 11, 7)) {
        std::vector<std::string> want{"<x, y^11>", "<x^2, x*y^3, y^8>", "<x^3, x*y^3, y^5>", "<x^7, x^4*y, y^2>",
                                      "<x^11, y>"};
        std::vector<std::string> got;
        for (auto& c : cl) got.push_back(format_ideal(c));
        r.golden("clusters", got == want);
    }
}

void add_gfan(Report& r, const SingularityInput& s) {
    auto gf = groebner_fan(s);
    auto vars = VariableTable{"x", "y"};
    Json rays = Json::array(), cones = Json::array();
    for (auto& ray : gf.fan.rays) rays.push_back(ray_json(ray));
    r.text << "rays";
    for (auto& ray : gf.fan.rays) r.text << " (" << ray.x << ',' << ray.y << ')';
    r.text << '\n';
    for (auto& c : gf.cones) {
        auto order = xy_order(c.weight);
        Json basis = Json::array(), normals = Json::array();
        for (auto& g : c.basis) basis.push_back(format(g, vars, order));
        for (auto& nv : c.normals) normals.push_back(ray_json(nv));
        cones.push_back({{"lower", ray_json(c.lower)},
                         {"upper", ray_json(c.upper)},
                         {"weight", {c.weight[0].get_str(), c.weight[1].get_str()}},
                         {"normals", normals},
                         {"basis", basis}});
        r.text << "cone (" << c.lower.x << ',' << c.lower.y << ")-(" << c.upper.x << ',' << c.upper.y << ") {";
        for (std::size_t k = 0; k < basis.size(); ++k) r.text << (k ? ", " : "") << basis[k].get<std::string>();
        r.text << "}\n";
    }
    r.json["fan"] = {{"rays", rays}, {"cones", cones}};
    r.check("matches_toric_fan", fans_equal(gf.fan, resolution_fan(s)));
    if (is_example(s, 11, 7)) {
        std::set<Ray> want{{1, 7}, {2, 3}, {5, 2}, {8, 1}};
        r.golden("rays", gf.fan.primitive_interior() == want);
    }
}

void add_deform(Report& r, const SingularityInput& s) {
    auto vp = arndt_presentation(s);
    auto dim = dim_t1(s);
    Json rels = Json::array(), base = Json::array();
    std::string a_label = std::to_string(s.n) + "/" + std::to_string(s.n - s.q);
    r.text << "input (" << s.n << ',' << s.q << "), a-expansion " << dual_fraction(s).str() << " = " << a_label
           << '\n'
           << "dim_t1 " << dim << '\n'
           << "parameters";
    for (auto& p : vp.parameters) r.text << ' ' << p;
    r.text << '\n';
    for (auto& rel : vp.relations) {
        auto line = relation_text(vp.vars, rel.lhs, rel.rhs);
        rels.push_back({{"i", rel.i}, {"j", rel.j}, {"text", line}});
        r.text << line << '\n';
    }
    for (auto& g : vp.base_ideal) {
        base.push_back(format(g, vp.vars));
        r.text << "base " << format(g, vp.vars) << '\n';
    }
    r.json["deformation"] = {{"a_expansion", fraction_json(dual_fraction(s))},
                             {"a_expansion_of", a_label},
                             {"dim_t1", dim},
                             {"hypersurface", vp.hypersurface},
                             {"parameters", vp.parameters},
                             {"relations", rels},
                             {"base_ideal", base}};
    r.check("parameter_count_equals_dim_t1", static_cast<Int>(vp.parameters.size()) == dim);

    if (!vp.hypersurface) r.check("specialization_recovers_equations", specializes(s, vp));
    if (is_example(s, 11, 4)) r.golden("base_ideal_size", base.size() == 6 && rels.size() == 10 && dim == 7);
}

Json path_relation_json(const Quiver& q, const PathRelation& rel) {
    Json terms = Json::array();
    for (auto& t : rel.terms) {
        Json arrows = Json::array();
        for (auto a : t.arrows) arrows.push_back(q.arrows[a].label);
        terms.push_back({{"coefficient", t.coefficient.get_str()}, {"path", arrows}});
    }
    return {{"vertex", q.vertices[rel.vertex]}, {"terms", terms}, {"text", format_relation(q, rel)}};
}

Json quiver_json(const Quiver& q) {
    Json arrows = Json::array();
    for (auto& a : q.arrows) arrows.push_back({{"tail", a.tail}, {"head", a.head}, {"label", a.label}});
    return {{"vertices", q.vertices}, {"arrows", arrows}};
}

void add_reconstruct(Report& r, const SingularityInput& s) {
    auto rq = reconstruction_quiver(s);
    Json rels = Json::array();
    for (auto& rel : rq.relations) {
        rels.push_back(path_relation_json(rq.quiver, rel));
        r.text << "at " << rq.quiver.vertices[rel.vertex] << ": " << format_relation(rq.quiver, rel) << " = 0\n";
    }
    r.json["reconstruction"] = {{"fraction", fraction_json(rq.b)},
                                {"quiver", quiver_json(rq.quiver)},
                                {"status", rq.status},
                                {"relations", rels}};
    r.text << "status " << rq.status << '\n';
    r.dot = emit_dot(rq.quiver, "reconstruction_" + std::to_string(s.n) + "_" + std::to_string(s.q));
    if (!rq.relations_available) {
        r.unsupported = true;
        r.note = rq.status;
        return;
    }
    if (is_example(s, 11, 7)) r.golden("relation_count", rels.size() == 7 && rq.quiver.arrows.size() == 11);
}

void add_artin(Report& r, const SingularityInput& s) {
    auto qd = quasidet_presentation(s);
    Json qj = {{"rows", qd.rows}, {"cols", qd.cols}, {"supported", qd.supported}, {"status", qd.status}};
    qj["grid"] = qd.grid;
    Json qrels = Json::array();
    for (auto& p : qd.relations) qrels.push_back(format(p, qd.vars));
    qj["relations"] = qrels;
    r.text << "quasidet " << qd.rows << 'x' << qd.cols << ' ' << qd.status << '\n';
    for (auto& row : qd.grid) {
        r.text << " ";
        for (auto& sym : row) r.text << ' ' << sym;
        r.text << '\n';
    }
    for (auto& p : qrels) r.text << "quasiminor " << p.get<std::string>() << '\n';

    Json dj = {{"supported", false}};
    try {
        auto d = deformed_relations(s);
        Json rels = Json::array();
        for (auto& rel : d.relations) {
            auto j = path_relation_json(d.quiver.quiver, rel.relation);
            j["parameter"] = rel.parameter();
            rels.push_back(j);
            r.text << format_relation(d.quiver.quiver, rel.relation) << " = " << rel.parameter() << '\n';
        }
        dj = {{"supported", true},
              {"group_sizes", d.group_sizes},
              {"base_dimension", d.base_dimension()},
              {"relations", rels}};
        r.text << "groups";
        for (auto g : d.group_sizes) r.text << ' ' << g;
        r.text << "\nbase_dimension " << d.base_dimension() << '\n';

        bool sums = true;
        for (std::size_t g = 1; g <= d.group_sizes.size(); ++g) {
            Polynomial total(d.quiver.quiver.arrows.size());
            for (auto& rel : d.relations)
                if (rel.group == static_cast<int>(g)) total += commutative_image(d.quiver.quiver, rel.relation);
            sums = sums && total.is_zero();
        }
        r.check("group_parameters_sum_to_zero", sums);
        if (identities(s).e >= 4) r.check("base_dimension_equals_dim_t1", d.base_dimension() == dim_t1(s));
        if (is_example(s, 11, 7))
            r.golden("base", d.base_dimension() == 5 && d.group_sizes == std::vector<Int>{3, 4} && qrels.size() == 3);
    } catch (const UnsupportedError& e) {
        dj["status"] = e.what();
        r.text << "deformed relations unavailable: " << e.what() << '\n';
        r.unsupported = true;
        r.note = e.what();
    }
    r.json["reconstruction"] = {{"quasidet", qj}, {"deformed", dj}};
}

// Every cross-module consistency check for one input.
void add_verify(Report& r, const SingularityInput& s) {
    auto b = fraction(s), a = dual_fraction(s);
    auto id = identities(s);
    r.json["fraction"] = {{"entries", fraction_json(b)}, {"r", b.size()}, {"e", id.e}};
    r.json["dual_fraction"] = {{"entries", fraction_json(a)}};
    r.check("identities", id.sum_a == id.sum_b && id.e == static_cast<Int>(a.size()) + 2);
    r.check("duality_reversal", hj_expand(s.n, inverse_mod(s.q, s.n)) == b.reversed());
    r.check("presentation", verify_presentation(s));
    auto fan = resolution_fan(s);
    r.check("fan_unimodular", is_unimodular(fan));
    r.check("fan_round_trip", self_intersections(fan) == b);
    r.check("special_count", special_reps(s).size() == b.size());
    r.check("cluster_count", g_clusters(s).size() == b.size() + 1);
    r.check("curve_assignment", curve_rep_assignment(s).size() == b.size());
    r.check("gfan_equals_toric", fans_equal(groebner_fan(s).fan, fan));
    if (id.e >= 4) r.check("deformation_specializes", specializes(s, arndt_presentation(s)));
    if (b.size() >= 2 && reconstruction_quiver(s).relations_available) {
        auto d = deformed_relations(s);
        if (id.e >= 4) r.check("artin_base_equals_dim_t1", d.base_dimension() == dim_t1(s));
    }
}

// ---------------------------------------------------------------- dispatch

using Builder = std::function<void(Report&, const SingularityInput&)>;

const std::map<std::string, Builder>& builders() {
    static const std::map<std::string, Builder> table{
        {"resolve", add_resolve},   {"invariants", add_invariants}, {"toric", add_toric},
        {"mckay", add_mckay},       {"hilb", add_hilb},             {"gfan", add_gfan},
        {"deform", add_deform},     {"artin", add_artin},           {"reconstruct", add_reconstruct},
        {"verify", add_verify}};
    return table;
}

std::string render(Report& r, const std::string& format) {
    if (format == "json") return r.json.dump(2) + "\n";
    if (format == "text") return r.text.str();
    if (r.dot.empty()) throw UsageError("dot output is only available for mckay and reconstruct");
    return r.dot;
}

Report single(const RunRequest& req) {
    auto s = SingularityInput::make(req.n, req.q);
    Report r;
    r.json["input"] = {{"subcommand", req.subcommand}, {"n", s.n}, {"q", s.q}};
    r.text << req.subcommand << ' ' << s.n << ' ' << s.q << '\n';
    builders().at(req.subcommand)(r, s);
    return r;
}

Report batch(const RunRequest& req) {
    if (req.max_n < req.min_n || req.min_n < 2) throw ValidationError("batch needs 2 <= min_n <= max_n");
    Report r;
    r.json["input"] = {{"subcommand", "batch"}, {"min_n", req.min_n}, {"max_n", req.max_n}};
    r.text << "batch " << req.min_n << ".." << req.max_n << '\n';
    Json violations = Json::array();
    Int pairs = 0;
    for (Int n = req.min_n; n <= req.max_n; ++n)
        for (Int q = 1; q < n; ++q) {
            if (std::gcd(n, q) != 1) continue;
            ++pairs;
            Report one;
            std::string failure;
            try {
                add_verify(one, SingularityInput{n, q});
                for (auto& [name, ok] : one.json["checks"].items())
                    if (!ok.get<bool>()) failure += (failure.empty() ? "" : ",") + name;
            } catch (const std::exception& e) {
                failure = e.what();
            }
            if (!failure.empty()) {
                violations.push_back({{"n", n}, {"q", q}, {"failed", failure}});
                r.text << "violation " << n << ' ' << q << ' ' << failure << '\n';
            }
        }
    r.json["pairs"] = pairs;
    r.json["violations"] = violations;
    r.text << "pairs " << pairs << '\n' << "violations " << violations.size() << '\n';
    r.failed_check = !violations.empty();
    return r;
}

} // namespace

const std::vector<std::string>& subcommands() {
    static const std::vector<std::string> names{"resolve", "invariants", "toric",       "mckay", "hilb",  "gfan",
                                                "deform",  "artin",      "reconstruct", "batch", "verify"};
    return names;
}

RunResult run(const RunRequest& req) {
    RunResult res;
    try {
        if (req.format != "json" && req.format != "text" && req.format != "dot")
            throw UsageError("unknown format: " + req.format);
        if (req.subcommand != "batch" && !builders().count(req.subcommand))
            throw UsageError("unknown subcommand: " + req.subcommand);
        Report r = req.subcommand == "batch" ? batch(req) : single(req);
        res.output = render(r, req.format);
        if (r.failed_check) {
            res.exit_code = inconsistent;
            res.error = "consistency check failed";
        } else if (r.unsupported) {
            res.exit_code = unsupported;
            res.error = r.note;
        }
    } catch (const UsageError& e) {
        res = {invalid_input, "", e.what()};
    } catch (const ValidationError& e) {
        res = {invalid_input, "", e.what()};
    } catch (const UnsupportedError& e) {
        res = {unsupported, "", e.what()};
    } catch (const std::exception& e) {
        res = {inconsistent, "", e.what()};
    }
    return res;
}

} // namespace cqs::cli
