#include "maxlor/quad.hpp"

#include <algorithm>
#include <deque>

namespace maxlor {

Patch::Patch(int m, int n) : M(m), N(n) {
    if (m < 1 || n < 1) throw GeometryError("InvalidPatch", "patch needs at least one face");
}

std::vector<VertexIdx> Patch::vertices() const {
    std::vector<VertexIdx> out;
    for (int i = 0; i <= M; ++i)
        for (int j = 0; j <= N; ++j) out.push_back({i, j});
    return out;
}

std::vector<VertexIdx> Patch::whites() const {
    auto v = vertices();
    std::erase_if(v, [](VertexIdx x) { return !is_white(x); });
    return v;
}

std::vector<VertexIdx> Patch::blacks() const {
    auto v = vertices();
    std::erase_if(v, [](VertexIdx x) { return is_white(x); });
    return v;
}

std::vector<FaceIdx> Patch::faces() const {
    std::vector<FaceIdx> out;
    for (int i = 0; i < M; ++i)
        for (int j = 0; j < N; ++j) out.push_back({i, j});
    return out;
}

std::array<VertexIdx, 4> Patch::corners(FaceIdx f) {
    return {VertexIdx{f.i, f.j}, {f.i + 1, f.j}, {f.i + 1, f.j + 1}, {f.i, f.j + 1}};
}

std::array<VertexIdx, 2> Patch::face_whites(FaceIdx f) {
    auto c = corners(f);
    return is_white(c[0]) ? std::array{c[0], c[2]} : std::array{c[1], c[3]};
}

std::array<VertexIdx, 2> Patch::face_blacks(FaceIdx f) {
    auto c = corners(f);
    return is_white(c[0]) ? std::array{c[1], c[3]} : std::array{c[0], c[2]};
}

std::array<FaceIdx, 4> Patch::vertex_faces(VertexIdx v) {
    return {FaceIdx{v.i, v.j}, {v.i - 1, v.j}, {v.i - 1, v.j - 1}, {v.i, v.j - 1}};
}

std::array<VertexIdx, 4> Patch::star(VertexIdx v) {
    return {VertexIdx{v.i + 1, v.j}, {v.i, v.j + 1}, {v.i - 1, v.j}, {v.i, v.j - 1}};
}

std::array<VertexIdx, 4> Patch::white_star(VertexIdx w) const {
    if (!is_white(w) || !interior(w)) throw GeometryError("BoundaryVertex", "white star needs an interior white vertex");
    return star(w);
}

std::vector<VertexIdx> Patch::deep_whites() const {
    std::vector<VertexIdx> out;
    for (auto w : whites())
        if (w.i >= 2 && w.j >= 2 && w.i <= M - 2 && w.j <= N - 2) out.push_back(w);
    return out;
}

std::vector<VertexIdx> Patch::interior_blacks() const {
    std::vector<VertexIdx> out;
    for (auto b : blacks())
        if (interior(b)) out.push_back(b);
    return out;
}

int edge_sign(VertexIdx v, FaceIdx f) {
    int d1 = 2 * f.i + 1 - 2 * v.i, d2 = 2 * f.j + 1 - 2 * v.j;
    if (std::abs(d1) != 1 || std::abs(d2) != 1) throw GeometryError("InvalidEdge", "vertex is not a corner of the face");
    return d1 * d2 > 0 ? 1 : -1;
}

int edge_sign(VertexIdx w, VertexIdx w2) {
    int d1 = w2.i - w.i, d2 = w2.j - w.j;
    if (std::abs(d1) != 1 || std::abs(d2) != 1) throw GeometryError("InvalidEdge", "not a diagonal edge");
    return d1 * d2 > 0 ? 1 : -1;
}

std::vector<CombinedEdge> combined_edges(const Patch& p) {
    std::vector<CombinedEdge> out;
    for (auto f : p.faces())
        for (auto v : Patch::corners(f)) out.push_back({v, f});
    return out;
}

CombinedIntegral integrate_form(const CombinedForm& form, VertexIdx base, const LVec3& base_value, double tol) {
    const Patch& p = form.patch;
    const int nv = p.num_vertices();
    // node ids: vertices first, then faces
    std::vector<std::vector<std::pair<int, LVec3>>> adj(nv + p.num_faces());
    for (auto f : p.faces()) {
        auto c = Patch::corners(f);
        for (int k = 0; k < 4; ++k) {
            const LVec3& val = form.at(f, k);
            adj[p.vid(c[k])].push_back({nv + p.fid(f), val});
            adj[nv + p.fid(f)].push_back({p.vid(c[k]), -val});
        }
    }
    std::vector<LVec3> X(adj.size());
    std::vector<char> seen(adj.size(), 0);
    std::deque<int> q{p.vid(base)};
    X[p.vid(base)] = base_value;
    seen[p.vid(base)] = 1;
    while (!q.empty()) {
        int a = q.front();
        q.pop_front();
        for (auto& [b, v] : adj[a])
            if (!seen[b]) {
                seen[b] = 1;
                X[b] = X[a] + v;
                q.push_back(b);
            }
    }
    CombinedIntegral out;
    out.vertex.assign(X.begin(), X.begin() + nv);
    out.face.assign(X.begin() + nv, X.end());
    // Elementary cycles v -> f1 -> v' -> f2 -> v around interior Z^2 edges.
    auto slot = [](FaceIdx f, VertexIdx v) {
        auto c = Patch::corners(f);
        return static_cast<int>(std::find(c.begin(), c.end(), v) - c.begin());
    };
    for (int i = 0; i <= p.M; ++i)
        for (int j = 0; j <= p.N; ++j) {
            VertexIdx v{i, j};
            if (i < p.M && j > 0 && j < p.N) {  // edge (i,j)-(i+1,j) between faces (i,j-1) and (i,j)
                VertexIdx v2{i + 1, j};
                FaceIdx f1{i, j - 1}, f2{i, j};
                LVec3 s = form.at(f1, slot(f1, v)) - form.at(f1, slot(f1, v2)) + form.at(f2, slot(f2, v2)) -
                          form.at(f2, slot(f2, v));
                out.residual = std::max(out.residual, maxabs(s));
            }
            if (j < p.N && i > 0 && i < p.M) {  // edge (i,j)-(i,j+1) between faces (i-1,j) and (i,j)
                VertexIdx v2{i, j + 1};
                FaceIdx f1{i - 1, j}, f2{i, j};
                LVec3 s = form.at(f1, slot(f1, v)) - form.at(f1, slot(f1, v2)) + form.at(f2, slot(f2, v2)) -
                          form.at(f2, slot(f2, v));
                out.residual = std::max(out.residual, maxabs(s));
            }
        }
    if (tol >= 0 && out.residual > tol)
        throw GeometryError("NotClosed", "cycle residual " + std::to_string(out.residual));
    return out;
}

WhiteIntegral integrate_white_form(const WhiteForm& form, VertexIdx base, const LVec3& base_value, double tol) {
    const Patch& p = form.patch;
    std::vector<std::vector<std::pair<int, LVec3>>> adj(p.num_vertices());
    for (auto f : p.faces()) {
        auto w = Patch::face_whites(f);
        adj[p.vid(w[0])].push_back({p.vid(w[1]), form.value[p.fid(f)]});
        adj[p.vid(w[1])].push_back({p.vid(w[0]), -form.value[p.fid(f)]});
    }
    WhiteIntegral out;
    out.vertex.assign(p.num_vertices(), LVec3{});
    std::vector<char> seen(p.num_vertices(), 0);
    std::deque<int> q{p.vid(base)};
    out.vertex[p.vid(base)] = base_value;
    seen[p.vid(base)] = 1;
    while (!q.empty()) {
        int a = q.front();
        q.pop_front();
        for (auto& [b, v] : adj[a])
            if (!seen[b]) {
                seen[b] = 1;
                out.vertex[b] = out.vertex[a] + v;
                q.push_back(b);
            }
    }
    for (auto b : p.interior_blacks()) {
        LVec3 s;
        auto ws = Patch::star(b);
        for (int k = 0; k < 4; ++k) {
            VertexIdx a = ws[k], c = ws[(k + 1) % 4];
            FaceIdx f{std::min(a.i, c.i), std::min(a.j, c.j)};
            auto fw = Patch::face_whites(f);
            s += fw[0] == a ? form.value[p.fid(f)] : -form.value[p.fid(f)];
        }
        out.residual = std::max(out.residual, maxabs(s));
    }
    if (tol >= 0 && out.residual > tol)
        throw GeometryError("NotClosed", "cycle residual " + std::to_string(out.residual));
    return out;
}

double diameter(const std::vector<LVec3>& pts) {
    double d = 0;
    for (size_t a = 0; a < pts.size(); ++a)
        for (size_t b = a + 1; b < pts.size(); ++b) d = std::max(d, enorm(pts[a] - pts[b]));
    return d;
}

}  // namespace maxlor
