#include <CLI11.hpp>

#include <cstdlib>
#include <iostream>
#include <numbers>

#include "maxlor/christoffel.hpp"
#include "maxlor/io.hpp"
#include "maxlor/weierstrass.hpp"

using namespace maxlor;

namespace {

Document doc(std::string kind, json payload, json metadata = json::object()) {
    return {kSchemaVersion, std::move(kind), std::move(payload), std::move(metadata)};
}

void require_kind(const Document& d, std::initializer_list<const char*> kinds) {
    for (const char* k : kinds)
        if (d.kind == k) return;
    throw FormatError("SchemaError", "unexpected document kind " + d.kind);
}

// Validation failure: machine-readable report on stdout, exit 1.
struct Failure {
    json report;
};

[[noreturn]] void fail(const std::string& code, const std::string& message, json extra = json::object()) {
    extra["error"] = code;
    extra["message"] = message;
    extra["pass"] = false;
    throw Failure{extra};
}

std::optional<double> env_tol() {
    const char* s = std::getenv("MAXLOR_TOL");
    if (!s || !*s) return std::nullopt;
    char* end = nullptr;
    double v = std::strtod(s, &end);
    if (*end || !(v > 0)) throw FormatError("SchemaError", std::string("MAXLOR_TOL is not a positive number: ") + s);
    return v;
}

json with_source(json payload, const Document& from) {
    if (from.kind == "pattern")
        payload["source"] = from.payload;
    else if (from.payload.contains("source"))
        payload["source"] = from.payload.at("source");
    return payload;
}

json congruences_json(const std::array<Congruence, 2>& c) { return json::array({to_json(c[0]), to_json(c[1])}); }

std::array<Congruence, 2> congruences_of(const json& payload) {
    if (!payload.contains("congruences") || !payload.at("congruences").is_array() ||
        payload.at("congruences").size() != 2)
        throw FormatError("SchemaError", "expected two congruences");
    return {congruence_from_json(payload.at("congruences")[0]), congruence_from_json(payload.at("congruences")[1])};
}

const json& member(const Document& d, int k) {
    if (!d.payload.contains("members") || !d.payload.at("members").is_array() || k < 0 ||
        k >= static_cast<int>(d.payload.at("members").size()))
        throw FormatError("SchemaError", "associated document has no member " + std::to_string(k));
    return d.payload.at("members")[k];
}

// The congruence selected by --which from a congruence, net or associated document.
Congruence pick_congruence(const Document& d, int which, int mem) {
    if (d.kind == "congruence") return congruence_from_json(d.payload);
    if (d.kind == "sisothermic") return congruences_of(d.payload)[which - 1];
    if (d.kind == "associated") return congruences_of(member(d, mem))[which - 1];
    throw FormatError("SchemaError", "document of kind " + d.kind + " carries no congruence");
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Discrete maximal surfaces in R^{2,1} from orthogonal circle patterns"};
    app.require_subcommand(1);

    std::string out = "-";
    auto output = [&](CLI::App* c) { c->add_option("-o,--output", out, "output file ('-' for stdout)"); };

    // gen-pattern
    int rows = 0, cols = 0;
    double spacing = 0;
    std::vector<double> pos;
    std::vector<double> mobius;
    auto* gen = app.add_subcommand("gen-pattern", "regular orthogonal pattern, optionally Moebius-deformed");
    gen->add_option("shape", pos, "M N s (alternative to the flags)")->expected(0, 3);
    gen->add_option("--rows", rows);
    gen->add_option("--cols", cols);
    gen->add_option("--spacing", spacing);
    gen->add_option("--mobius", mobius, "aRe,aIm,alpha")->delimiter(',')->expected(3);
    output(gen);

    std::string in = "-";
    auto input = [&](CLI::App* c, const char* what) { c->add_option("input", in, what); };

    auto* lift = app.add_subcommand("lift", "Koebe net and both null congruences");
    input(lift, "pattern document");
    output(lift);

    auto* dual = app.add_subcommand("dualize", "Christoffel dual of a Koebe net");
    input(dual, "Koebe net document");
    output(dual);

    auto* weier = app.add_subcommand("weierstrass", "maximal net directly from the pattern");
    input(weier, "pattern document");
    output(weier);

    double phi = 0;
    int grid = 0;
    auto* assoc = app.add_subcommand("associate", "associated family member(s)");
    input(assoc, "Koebe net document");
    auto* phi_opt = assoc->add_option("--phi", phi, "angle in radians");
    auto* grid_opt = assoc->add_option("--phi-grid", grid, "N equispaced angles in [0, 2pi)")->check(CLI::PositiveNumber);
    phi_opt->excludes(grid_opt);
    output(assoc);

    int which = 1, mem = 0;
    auto* proj = app.add_subcommand("project", "orthogonal projection to an incircular net");
    input(proj, "congruence, net or associated document");
    proj->add_option("--which", which)->check(CLI::IsMember({1, 2}));
    proj->add_option("--member", mem, "associated family member");
    output(proj);

    auto* xv = app.add_subcommand("xvars", "X-variables at white vertices");
    input(xv, "incircular, congruence, net or associated document");
    xv->add_option("--which", which)->check(CLI::IsMember({1, 2}));
    xv->add_option("--member", mem);
    output(xv);

    std::string suite = "all";
    std::optional<double> tol;
    int vgrid = 16;
    auto* ver = app.add_subcommand("verify", "residual suites; exit 0 iff all pass");
    input(ver, "pattern or derived document");
    std::vector<std::string> suites = suite_names();
    suites.push_back("all");
    ver->add_option("--suite", suite)->check(CLI::IsMember(suites));
    ver->add_option("--tol", tol)->check(CLI::PositiveNumber);
    ver->add_option("--phi-grid", vgrid)->check(CLI::PositiveNumber);
    output(ver);

    std::string overlay;
    auto* svg = app.add_subcommand("export-svg", "SVG drawing of an incircular net");
    input(svg, "incircular document");
    svg->add_option("--overlay", overlay, "second incircular net");
    output(svg);

    auto* obj = app.add_subcommand("export-obj", "OBJ quad mesh of white centres");
    input(obj, "net or associated document");
    obj->add_option("--member", mem);
    output(obj);

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        int code = app.exit(e);
        return code == 0 ? 0 : 2;
    }

    try {
        if (gen->parsed()) {
            if (!pos.empty()) {
                if (pos.size() != 3) throw FormatError("SchemaError", "gen-pattern expects M N s");
                rows = static_cast<int>(pos[0]), cols = static_cast<int>(pos[1]), spacing = pos[2];
            }
            if (rows < 1 || cols < 1) throw FormatError("SchemaError", "rows and cols must be positive");
            json meta{{"rows", rows}, {"cols", cols}, {"spacing", spacing}};
            DiskCirclePattern p;
            try {
                p = gen_regular_pattern(rows, cols, spacing);
                if (!mobius.empty()) {
                    p = apply_disk_automorphism(p, {mobius[0], mobius[1]}, mobius[2]);
                    meta["mobius"] = mobius;
                }
                require_valid(p);
            } catch (const GeometryError& e) {
                fail(e.code(), e.what());
            }
            write_text(out, emit(doc("pattern", to_json(p), {{"generator", meta}})));
        } else if (lift->parsed()) {
            Document d = read_document(in);
            require_kind(d, {"pattern"});
            auto p = pattern_from_json(d.payload);
            try {
                require_valid(p);
                auto net = build_koebe_net(p);
                auto cong = koebe_congruences(net);
                auto rep = check_lift(p, net, cong);
                json payload = to_json(net);
                payload["congruences"] = congruences_json(cong);
                write_text(out, emit(doc("sisothermic", with_source(payload, d),
                                         {{"stage", "koebe"}, {"hyperboloid_residual", rep.hyperboloid}})));
            } catch (const GeometryError& e) {
                fail(e.code(), e.what());
            }
        } else if (dual->parsed()) {
            Document d = read_document(in);
            require_kind(d, {"sisothermic"});
            auto net = sisothermic_from_json(d.payload);
            auto cong = congruences_of(d.payload);
            double base = env_tol().value_or(1e-11);
            try {
                // closedness first, so a corrupted net reports its residual
                auto X = integrate_form(dual_form_isothermic(net), {0, 1}, {}, -1);
                double d0 = diameter(X.vertex);
                if (!(X.residual <= base * d0))
                    fail("NotClosed", "dual form is not closed",
                         {{"residual", X.residual}, {"threshold", base * d0}, {"diameter", d0}});
                auto r = dualize(net, cong);
                double diam = diameter(r.net.points());
                double worst = std::max({r.residual, r.cong_residual[0], r.cong_residual[1]});
                if (!(worst <= base * diam))
                    fail("NotClosed", "dual form is not closed",
                         {{"residual", worst}, {"threshold", base * diam}, {"diameter", diam}});
                json payload = to_json(r.net);
                payload["congruences"] = congruences_json(r.cong);
                write_text(out, emit(doc("sisothermic", with_source(payload, d),
                                         {{"stage", "maximal"}, {"method", "christoffel"}, {"residual", r.residual}})));
            } catch (const GeometryError& e) {
                fail(e.code(), e.what());
            }
        } else if (weier->parsed()) {
            Document d = read_document(in);
            require_kind(d, {"pattern"});
            auto p = pattern_from_json(d.payload);
            try {
                require_valid(p);
                auto w = assemble_weierstrass(p);
                json payload = to_json(w.net);
                payload["congruences"] = congruences_json(w.cong);
                write_text(out, emit(doc("sisothermic", with_source(payload, d),
                                         {{"stage", "maximal"}, {"method", "weierstrass"}, {"residual", w.residual}})));
            } catch (const GeometryError& e) {
                fail(e.code(), e.what());
            }
        } else if (assoc->parsed()) {
            Document d = read_document(in);
            require_kind(d, {"sisothermic"});
            auto net = sisothermic_from_json(d.payload);
            std::vector<double> phis = grid > 0 ? phi_grid(grid) : std::vector<double>{phi};
            json members = json::array();
            try {
                for (double a : phis) {
                    auto s = associate(net, a, env_tol().value_or(1e-11));
                    auto cp = contact_congruences(s);
                    json m = to_json(s);
                    m["contact_congruences"] = congruences_json(cp.cong);
                    m["contact_radii"] = {cp.radius[0], cp.radius[1]};
                    m["congruences"] = congruences_json(
                        {null_congruence(cp.cong[0], cp.radius[0]), null_congruence(cp.cong[1], cp.radius[1])});
                    members.push_back(m);
                }
            } catch (const GeometryError& e) {
                fail(e.code(), e.what());
            }
            json payload{{"rows", net.patch.M}, {"cols", net.patch.N}, {"members", members}};
            json meta{{"phi", phis}};
            write_text(out, emit(doc("associated", with_source(payload, d), meta)));
        } else if (proj->parsed()) {
            Document d = read_document(in);
            auto c = pick_congruence(d, which, mem);
            json payload = with_source(to_json(project(c)), d);
            write_text(out, emit(doc("incircular", payload, {{"which", which}})));
        } else if (xv->parsed()) {
            Document d = read_document(in);
            try {
                if (d.kind == "incircular") {
                    auto n = incircular_from_json(d.payload);
                    write_text(out, emit(doc("xfield", with_source(xfield_to_json(n.patch, x_field(n)), d),
                                             {{"formula", "planar"}})));
                } else {
                    auto c = pick_congruence(d, which, mem);
                    write_text(out, emit(doc("xfield", with_source(xfield_to_json(c.patch, x_field(c)), d),
                                             {{"formula", "lorentz"}})));
                }
            } catch (const GeometryError& e) {
                fail(e.code(), e.what());
            }
        } else if (ver->parsed()) {
            Document d = read_document(in);
            auto p = source_pattern(d);
            VerifyOptions opt;
            opt.tol = tol ? tol : env_tol();
            opt.phi_grid = vgrid;
            std::vector<SuiteReport> reps;
            try {
                reps = verify(p, suite, opt);
            } catch (const GeometryError& e) {
                fail(e.code(), e.what());
            }
            json body = to_json(reps);
            json meta{{"suite", suite}, {"phi_grid", vgrid}};
            if (opt.tol) meta["tol"] = *opt.tol;
            write_text(out, emit(doc("report", body, meta)));
            return body.at("pass").get<bool>() ? 0 : 1;
        } else if (svg->parsed()) {
            Document d = read_document(in);
            require_kind(d, {"incircular"});
            auto n = incircular_from_json(d.payload);
            std::optional<IncircularNet> second;
            if (!overlay.empty()) {
                Document o = read_document(overlay);
                require_kind(o, {"incircular"});
                second = incircular_from_json(o.payload);
            }
            write_text(out, export_svg(n, second ? &*second : nullptr));
        } else if (obj->parsed()) {
            Document d = read_document(in);
            require_kind(d, {"sisothermic", "associated"});
            const json& body = d.kind == "associated" ? member(d, mem) : d.payload;
            auto c = congruence_from_json(json{{"rows", body.at("rows")},
                                               {"cols", body.at("cols")},
                                               {"white", body.at("white")},
                                               {"black", json::array()},
                                               {"lines", json::array()}});
            std::vector<LVec3> centers(c.patch.num_vertices());
            for (auto w : c.patch.whites()) centers[c.patch.vid(w)] = c.white[c.patch.vid(w)].center;
            write_text(out, export_obj(c.patch, centers));
        }
    } catch (const Failure& f) {
        std::cout << emit(doc("report", f.report));
        return 1;
    } catch (const FormatError& e) {
        std::cerr << "maxlor: " << e.what() << '\n';
        return 2;
    } catch (const json::exception& e) {
        std::cerr << "maxlor: SchemaError: " << e.what() << '\n';
        return 2;
    } catch (const GeometryError& e) {
        // geometry failure outside a guarded step
        std::cout << emit(doc("report", {{"error", e.code()}, {"message", e.what()}, {"pass", false}}));
        return 1;
    }
    return 0;
}
