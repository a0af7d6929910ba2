#include "maxlor/io.hpp"

#include <algorithm>
#include <cstdio>
#include <fstream>
#include <iostream>
#include <iterator>
#include <sstream>

namespace maxlor {

namespace {

void emit_number(std::string& out, double v) {
    if (!std::isfinite(v)) throw FormatError("SchemaError", "non-finite number cannot be written");
    char buf[40];
    std::snprintf(buf, sizeof buf, "%.17g", v);
    out += buf;
    if (std::string_view(buf).find_first_of(".eE") == std::string_view::npos) out += ".0";
}

bool is_flat(const json& j) {
    return j.is_array() && std::all_of(j.begin(), j.end(), [](const json& e) { return e.is_primitive(); });
}

void emit_rec(std::string& out, const json& j, int indent) {
    auto pad = [&](int n) { out.append(static_cast<size_t>(n), ' '); };
    switch (j.type()) {
        case json::value_t::number_float:
            emit_number(out, j.get<double>());
            return;
        case json::value_t::array:
            if (j.empty()) {
                out += "[]";
            } else if (is_flat(j)) {
                out += '[';
                for (size_t k = 0; k < j.size(); ++k) {
                    if (k) out += ", ";
                    emit_rec(out, j[k], indent);
                }
                out += ']';
            } else {
                out += "[\n";
                for (size_t k = 0; k < j.size(); ++k) {
                    pad(indent + 2);
                    emit_rec(out, j[k], indent + 2);
                    out += k + 1 < j.size() ? ",\n" : "\n";
                }
                pad(indent);
                out += ']';
            }
            return;
        case json::value_t::object: {
            if (j.empty()) {
                out += "{}";
                return;
            }
            out += "{\n";
            size_t k = 0;
            for (auto it = j.begin(); it != j.end(); ++it, ++k) {
                pad(indent + 2);
                out += json(it.key()).dump();
                out += ": ";
                emit_rec(out, it.value(), indent + 2);
                out += k + 1 < j.size() ? ",\n" : "\n";
            }
            pad(indent);
            out += '}';
            return;
        }
        default:
            out += j.dump();
    }
}

[[noreturn]] void schema(const std::string& what) { throw FormatError("SchemaError", what); }

const json& need(const json& j, const char* key) {
    if (!j.is_object() || !j.contains(key)) schema(std::string("missing field '") + key + "'");
    return j.at(key);
}

double num(const json& j) {
    if (!j.is_number()) schema("expected a number");
    return j.get<double>();
}

json vec(const LVec3& v) { return json::array({v.x1, v.x2, v.x3}); }
json vec(cplx z) { return json::array({z.real(), z.imag()}); }

LVec3 lvec(const json& j) {
    if (!j.is_array() || j.size() != 3) schema("expected a 3-vector");
    return {num(j[0]), num(j[1]), num(j[2])};
}
cplx cvec(const json& j) {
    if (!j.is_array() || j.size() != 2) schema("expected a 2-vector");
    return {num(j[0]), num(j[1])};
}

Patch patch_of(const json& j) {
    const json &m = need(j, "rows"), &n = need(j, "cols");
    if (!m.is_number_integer() || !n.is_number_integer()) schema("rows/cols must be integers");
    int M = m.get<int>(), N = n.get<int>();
    if (M < 1 || N < 1 || M > 4096 || N > 4096) schema("rows/cols out of range");
    return Patch(M, N);
}

void put_patch(json& j, const Patch& p) {
    j["rows"] = p.M;
    j["cols"] = p.N;
}

json at(VertexIdx v) { return json{{"i", v.i}, {"j", v.j}}; }
json at(FaceIdx f) { return json{{"i", f.i}, {"j", f.j}}; }

VertexIdx vertex_of(const Patch& p, const json& r, bool white) {
    const json &i = need(r, "i"), &jj = need(r, "j");
    if (!i.is_number_integer() || !jj.is_number_integer()) schema("vertex index must be integer");
    VertexIdx v{i.get<int>(), jj.get<int>()};
    if (!p.has(v)) schema("vertex index outside the patch");
    if (Patch::is_white(v) != white) schema(std::string("expected a ") + (white ? "white" : "black") + " vertex");
    return v;
}
FaceIdx face_of(const Patch& p, const json& r) {
    const json &i = need(r, "i"), &jj = need(r, "j");
    if (!i.is_number_integer() || !jj.is_number_integer()) schema("face index must be integer");
    FaceIdx f{i.get<int>(), jj.get<int>()};
    if (!p.has(f)) schema("face index outside the patch");
    return f;
}

const json& records(const json& j, const char* key) {
    const json& a = need(j, key);
    if (!a.is_array()) schema(std::string("field '") + key + "' must be an array");
    return a;
}

json sphere_rec(VertexIdx v, const OrientedSphere& s) {
    json r = at(v);
    r["center"] = vec(s.center);
    r["radius"] = s.radius;
    return r;
}

json circle_rec(VertexIdx v, const SpacelikeCircle& c) {
    json r = at(v);
    r["center"] = vec(c.center);
    r["axis"] = vec(c.axis);
    r["radius"] = c.radius;
    return r;
}

SpacelikeCircle circle_of(const json& r) {
    return {lvec(need(r, "center")), lvec(need(r, "axis")), num(need(r, "radius"))};
}

template <class F>
auto guarded(F f) {
    try {
        return f();
    } catch (const json::exception& e) {
        throw FormatError("SchemaError", e.what());
    }
}

// Every white (or black) vertex must be listed exactly once.
void require_all(const Patch& p, const std::vector<char>& seen, bool white, const char* what) {
    for (auto v : white ? p.whites() : p.blacks())
        if (!seen[p.vid(v)]) schema(std::string(what) + " missing at a vertex");
}

}  // namespace

std::string emit_json(const json& j) {
    std::string out;
    emit_rec(out, j, 0);
    out += '\n';
    return out;
}

std::string emit(const Document& d) {
    return emit_json(json{{"schema_version", d.schema_version}, {"kind", d.kind}, {"payload", d.payload},
                          {"metadata", d.metadata}});
}

Document parse_document(const std::string& text) {
    json j = json::parse(text, nullptr, false);
    if (j.is_discarded()) schema("not valid JSON");
    return guarded([&] {
        Document d;
        const json& v = need(j, "schema_version");
        if (!v.is_string()) schema("schema_version must be a string");
        d.schema_version = v.get<std::string>();
        if (d.schema_version.substr(0, 2) != "1.") schema("unsupported schema_version " + d.schema_version);
        static const std::vector<std::string> kinds{"pattern", "sisothermic", "congruence", "associated",
                                                    "incircular", "xfield", "report"};
        d.kind = need(j, "kind").get<std::string>();
        if (std::find(kinds.begin(), kinds.end(), d.kind) == kinds.end()) schema("unknown kind " + d.kind);
        d.payload = need(j, "payload");
        if (!d.payload.is_object()) schema("payload must be an object");
        d.metadata = j.value("metadata", json::object());
        return d;
    });
}

std::string read_text(const std::string& path) {
    if (path == "-") return {std::istreambuf_iterator<char>(std::cin), {}};
    std::ifstream in(path, std::ios::binary);
    if (!in) throw FormatError("IOError", "cannot open " + path);
    std::ostringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

void write_text(const std::string& path, const std::string& text) {
    if (path == "-") {
        std::cout << text;
        std::cout.flush();
        return;
    }
    std::ofstream out(path, std::ios::binary);
    if (!out) throw FormatError("IOError", "cannot write " + path);
    out << text;
    if (!out) throw FormatError("IOError", "write failed for " + path);
}

Document read_document(const std::string& path) { return parse_document(read_text(path)); }

json to_json(const DiskCirclePattern& p) {
    json j;
    put_patch(j, p.patch);
    json vs = json::array(), fs = json::array();
    for (auto v : p.patch.vertices()) {
        json r = at(v);
        r["center"] = vec(p.center[p.patch.vid(v)]);
        r["radius"] = p.radius[p.patch.vid(v)];
        vs.push_back(r);
    }
    for (auto f : p.patch.faces()) {
        json r = at(f);
        r["point"] = vec(p.face_point[p.patch.fid(f)]);
        fs.push_back(r);
    }
    j["vertices"] = vs;
    j["faces"] = fs;
    return j;
}

DiskCirclePattern pattern_from_json(const json& j) {
    return guarded([&] {
        Patch P = patch_of(j);
        DiskCirclePattern p{P, std::vector<cplx>(P.num_vertices()), std::vector<double>(P.num_vertices()),
                            std::vector<cplx>(P.num_faces())};
        std::vector<char> seen(P.num_vertices()), fseen(P.num_faces());
        for (const auto& r : records(j, "vertices")) {
            const json &i = need(r, "i"), &jj = need(r, "j");
            VertexIdx v{i.get<int>(), jj.get<int>()};
            if (!P.has(v)) schema("vertex index outside the patch");
            p.center[P.vid(v)] = cvec(need(r, "center"));
            p.radius[P.vid(v)] = num(need(r, "radius"));
            seen[P.vid(v)] = 1;
        }
        for (const auto& r : records(j, "faces")) {
            FaceIdx f = face_of(P, r);
            p.face_point[P.fid(f)] = cvec(need(r, "point"));
            fseen[P.fid(f)] = 1;
        }
        if (std::count(seen.begin(), seen.end(), 0) || std::count(fseen.begin(), fseen.end(), 0))
            schema("pattern does not cover every vertex and face");
        return p;
    });
}

json to_json(const SIsothermicNet& n) {
    const Patch& P = n.patch;
    json j;
    put_patch(j, P);
    json ws = json::array(), bs = json::array(), cs = json::array();
    for (auto w : P.whites()) ws.push_back(sphere_rec(w, n.white[P.vid(w)]));
    for (auto b : P.blacks()) bs.push_back(circle_rec(b, n.black[P.vid(b)]));
    for (auto f : P.faces()) {
        json r = at(f);
        r["point"] = vec(n.contact[P.fid(f)]);
        cs.push_back(r);
    }
    j["white"] = ws;
    j["black"] = bs;
    j["contact"] = cs;
    return j;
}

SIsothermicNet sisothermic_from_json(const json& j) {
    return guarded([&] {
        Patch P = patch_of(j);
        SIsothermicNet n{P, std::vector<OrientedSphere>(P.num_vertices()),
                         std::vector<SpacelikeCircle>(P.num_vertices()), std::vector<LVec3>(P.num_faces())};
        std::vector<char> seen(P.num_vertices()), fseen(P.num_faces());
        for (const auto& r : records(j, "white")) {
            auto w = vertex_of(P, r, true);
            n.white[P.vid(w)] = {lvec(need(r, "center")), num(need(r, "radius"))};
            seen[P.vid(w)] = 1;
        }
        for (const auto& r : records(j, "black")) {
            auto b = vertex_of(P, r, false);
            n.black[P.vid(b)] = circle_of(r);
            seen[P.vid(b)] = 1;
        }
        for (const auto& r : records(j, "contact")) {
            auto f = face_of(P, r);
            n.contact[P.fid(f)] = lvec(need(r, "point"));
            fseen[P.fid(f)] = 1;
        }
        if (std::count(seen.begin(), seen.end(), 0) || std::count(fseen.begin(), fseen.end(), 0))
            schema("net does not cover every vertex and face");
        return n;
    });
}

json to_json(const Congruence& c) {
    const Patch& P = c.patch;
    json j;
    put_patch(j, P);
    json ws = json::array(), bs = json::array(), ls = json::array();
    for (auto w : P.whites()) ws.push_back(sphere_rec(w, c.white[P.vid(w)]));
    for (auto b : P.blacks())
        if (c.black[P.vid(b)]) bs.push_back(sphere_rec(b, *c.black[P.vid(b)]));
    for (auto f : P.faces())
        if (const auto& l = c.lines[P.fid(f)]) {
            json r = at(f);
            r["point"] = vec(l->point);
            r["dir"] = vec(l->dir);
            r["orientation"] = l->orientation;
            ls.push_back(r);
        }
    j["white"] = ws;
    j["black"] = bs;
    j["lines"] = ls;
    return j;
}

Congruence congruence_from_json(const json& j) {
    return guarded([&] {
        Patch P = patch_of(j);
        Congruence c(P);
        std::vector<char> seen(P.num_vertices());
        for (const auto& r : records(j, "white")) {
            auto w = vertex_of(P, r, true);
            c.white[P.vid(w)] = {lvec(need(r, "center")), num(need(r, "radius"))};
            seen[P.vid(w)] = 1;
        }
        require_all(P, seen, true, "white sphere");
        for (const auto& r : records(j, "black")) {
            auto b = vertex_of(P, r, false);
            c.black[P.vid(b)] = OrientedSphere{lvec(need(r, "center")), num(need(r, "radius"))};
        }
        for (const auto& r : records(j, "lines")) {
            auto f = face_of(P, r);
            int o = need(r, "orientation").get<int>();
            if (o != 1 && o != -1) schema("line orientation must be +1 or -1");
            c.lines[P.fid(f)] = IsotropicLine{lvec(need(r, "point")), lvec(need(r, "dir")), o};
        }
        return c;
    });
}

json to_json(const IncircularNet& n) {
    const Patch& P = n.patch;
    json j;
    put_patch(j, P);
    json ws = json::array(), bs = json::array(), ls = json::array();
    for (auto w : P.whites()) {
        json r = at(w);
        r["center"] = vec(n.white[P.vid(w)].center);
        r["radius"] = n.white[P.vid(w)].radius;
        ws.push_back(r);
    }
    for (auto b : P.blacks())
        if (n.black[P.vid(b)]) {
            json r = at(b);
            r["point"] = vec(*n.black[P.vid(b)]);
            bs.push_back(r);
        }
    for (auto f : P.faces())
        if (const auto& l = n.lines[P.fid(f)]) {
            json r = at(f);
            r["point"] = vec(l->point);
            r["dir"] = vec(l->dir);
            ls.push_back(r);
        }
    j["white"] = ws;
    j["black"] = bs;
    j["lines"] = ls;
    return j;
}

IncircularNet incircular_from_json(const json& j) {
    return guarded([&] {
        Patch P = patch_of(j);
        IncircularNet n(P);
        std::vector<char> seen(P.num_vertices());
        for (const auto& r : records(j, "white")) {
            auto w = vertex_of(P, r, true);
            n.white[P.vid(w)] = {cvec(need(r, "center")), num(need(r, "radius"))};
            seen[P.vid(w)] = 1;
        }
        require_all(P, seen, true, "incircle");
        for (const auto& r : records(j, "black")) n.black[P.vid(vertex_of(P, r, false))] = cvec(need(r, "point"));
        for (const auto& r : records(j, "lines")) {
            auto f = face_of(P, r);
            cplx d = cvec(need(r, "dir"));
            if (std::abs(std::abs(d) - 1) > 1e-9) schema("line direction must be a unit vector");
            n.lines[P.fid(f)] = Line2{cvec(need(r, "point")), d};
        }
        return n;
    });
}

json to_json(const AssociatedSurface& s) {
    const Patch& P = s.patch;
    json j;
    put_patch(j, P);
    j["phi"] = s.phi;
    json ws = json::array(), cs = json::array(), fc = json::array();
    for (auto w : P.whites()) ws.push_back(sphere_rec(w, s.sphere(w)));
    for (auto f : P.faces()) {
        json r = at(f);
        r["point"] = vec(s.contact[P.fid(f)]);
        cs.push_back(r);
    }
    for (auto b : P.blacks())
        if (s.face_circle[P.vid(b)]) fc.push_back(circle_rec(b, *s.face_circle[P.vid(b)]));
    j["white"] = ws;
    j["contact"] = cs;
    j["face_circles"] = fc;
    j["closedness"] = s.closedness;
    j["circle_residual"] = s.circle_residual;
    return j;
}

json xfield_to_json(const Patch& p, const std::map<int, double>& x) {
    json j;
    put_patch(j, p);
    json vs = json::array();
    for (const auto& [id, v] : x) {
        json r = at(p.vertex(id));
        r["x"] = v;
        vs.push_back(r);
    }
    j["values"] = vs;
    return j;
}

json to_json(const std::vector<SuiteReport>& reports) {
    json suites = json::array();
    bool all = true;
    for (const auto& r : reports) {
        json checks = json::array();
        for (const auto& c : r.checks)
            checks.push_back({{"name", c.name},
                              {"value", c.value},
                              {"threshold", c.threshold},
                              {"bound", c.lower_bound ? "lower" : "upper"},
                              {"pass", c.pass}});
        json s{{"suite", r.suite}, {"pass", r.pass()}, {"checks", checks}};
        if (!r.error.empty()) s["error"] = r.error;
        suites.push_back(s);
        all = all && r.pass();
    }
    return json{{"pass", all}, {"suites", suites}};
}

DiskCirclePattern source_pattern(const Document& d) {
    if (d.kind == "pattern") return pattern_from_json(d.payload);
    if (d.payload.contains("source")) return pattern_from_json(d.payload.at("source"));
    schema("document of kind " + d.kind + " does not embed a source pattern");
}

namespace {

std::string fmt(double v) {
    char buf[32];
    if (std::abs(v) < 5e-7) v = 0;
    std::snprintf(buf, sizeof buf, "%.6f", v);
    return buf;
}

struct Box {
    double x0 = 1e300, y0 = 1e300, x1 = -1e300, y1 = -1e300;
    void add(cplx z, double r = 0) {
        x0 = std::min(x0, z.real() - r), x1 = std::max(x1, z.real() + r);
        y0 = std::min(y0, z.imag() - r), y1 = std::max(y1, z.imag() + r);
    }
};

void add_box(Box& b, const IncircularNet& n) {
    const Patch& P = n.patch;
    for (auto w : P.whites()) b.add(n.white[P.vid(w)].center, std::abs(n.white[P.vid(w)].radius));
    for (auto v : P.blacks())
        if (n.black[P.vid(v)]) b.add(*n.black[P.vid(v)]);
}

// Segment of the infinite line inside the box (Liang-Barsky with unbounded parameter).
bool clip(const Line2& l, const Box& b, cplx& a, cplx& c) {
    double t0 = -1e300, t1 = 1e300;
    auto side = [&](double p, double q) {
        if (std::abs(p) < 1e-15) return q >= 0;
        double t = q / p;
        if (p < 0) t0 = std::max(t0, t);
        else t1 = std::min(t1, t);
        return true;
    };
    double px = l.point.real(), py = l.point.imag(), dx = l.dir.real(), dy = l.dir.imag();
    if (!side(-dx, px - b.x0) || !side(dx, b.x1 - px) || !side(-dy, py - b.y0) || !side(dy, b.y1 - py)) return false;
    if (t0 > t1) return false;
    a = l.point + t0 * l.dir;
    c = l.point + t1 * l.dir;
    return true;
}

}  // namespace

std::string export_svg(const IncircularNet& net, const IncircularNet* second) {
    Box box;
    add_box(box, net);
    if (second) add_box(box, *second);
    double m = 0.05 * std::max(box.x1 - box.x0, box.y1 - box.y0);
    if (!(m > 0)) m = 1;
    box.x0 -= m, box.y0 -= m, box.x1 += m, box.y1 += m;
    const double width = 800;
    double k = width / (box.x1 - box.x0), height = k * (box.y1 - box.y0);
    auto X = [&](cplx z) { return fmt((z.real() - box.x0) * k); };
    auto Y = [&](cplx z) { return fmt((box.y1 - z.imag()) * k); };

    std::ostringstream s;
    s << "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"" << fmt(width) << "\" height=\"" << fmt(height)
      << "\" viewBox=\"0 0 " << fmt(width) << ' ' << fmt(height) << "\">\n"
      << "<style>\n"
      << "  .incircle { fill: none; stroke-width: 1; }\n"
      << "  .line { stroke-width: 0.7; }\n"
      << "  .black { stroke: none; }\n"
      << "  .net1 { stroke: #1f4e99; fill: #1f4e99; }\n"
      << "  .net1.incircle { fill: none; }\n"
      << "  .net2 { stroke: #b3261e; fill: #b3261e; stroke-dasharray: 4 2; }\n"
      << "  .net2.incircle { fill: none; }\n"
      << "</style>\n";
    auto draw = [&](const IncircularNet& n, const char* cls) {
        const Patch& P = n.patch;
        s << "<g class=\"" << cls << "\">\n";
        for (auto f : P.faces()) {
            const auto& l = n.lines[P.fid(f)];
            cplx a, c;
            if (l && clip(*l, box, a, c))
                s << "<line class=\"line " << cls << "\" x1=\"" << X(a) << "\" y1=\"" << Y(a) << "\" x2=\"" << X(c)
                  << "\" y2=\"" << Y(c) << "\"/>\n";
        }
        for (auto w : P.whites()) {
            const auto& c = n.white[P.vid(w)];
            s << "<circle class=\"incircle " << cls << "\" cx=\"" << X(c.center) << "\" cy=\"" << Y(c.center)
              << "\" r=\"" << fmt(std::abs(c.radius) * k) << "\"/>\n";
        }
        for (auto b : P.blacks())
            if (const auto& p = n.black[P.vid(b)])
                s << "<circle class=\"black " << cls << "\" cx=\"" << X(*p) << "\" cy=\"" << Y(*p) << "\" r=\"2\"/>\n";
        s << "</g>\n";
    };
    draw(net, "net1");
    if (second) draw(*second, "net2");
    s << "</svg>\n";
    return s.str();
}

std::string export_obj(const Patch& P, const std::vector<LVec3>& centers) {
    std::ostringstream s;
    std::vector<int> index(P.num_vertices(), 0);
    int next = 1;
    char buf[128];
    for (auto w : P.whites()) {
        const LVec3& c = centers[P.vid(w)];
        std::snprintf(buf, sizeof buf, "v %.17g %.17g %.17g\n", c.x1, c.x2, c.x3);
        s << buf;
        index[P.vid(w)] = next++;
    }
    for (auto b : P.interior_blacks()) {
        s << 'f';
        for (auto w : Patch::star(b)) s << ' ' << index[P.vid(w)];
        s << '\n';
    }
    return s.str();
}

}  // namespace maxlor
