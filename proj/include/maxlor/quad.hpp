#pragma once

#include <array>
#include <optional>
#include <vector>

#include "maxlor/lorentz.hpp"

namespace maxlor {

struct VertexIdx {
    int i = 0, j = 0;
    bool operator==(const VertexIdx&) const = default;
};
struct FaceIdx {
    int i = 0, j = 0;
    bool operator==(const FaceIdx&) const = default;
};

// Vertices {0..M}x{0..N}; faces indexed by lower-left corner.
struct Patch {
    int M = 0, N = 0;

    Patch() = default;
    Patch(int m, int n);

    static bool is_white(VertexIdx v) { return ((v.i + v.j) & 1) == 1; }
    static bool is_black(VertexIdx v) { return !is_white(v); }
    bool has(VertexIdx v) const { return v.i >= 0 && v.j >= 0 && v.i <= M && v.j <= N; }
    bool has(FaceIdx f) const { return f.i >= 0 && f.j >= 0 && f.i < M && f.j < N; }
    bool interior(VertexIdx v) const { return v.i > 0 && v.j > 0 && v.i < M && v.j < N; }
    int vid(VertexIdx v) const { return v.i * (N + 1) + v.j; }
    int fid(FaceIdx f) const { return f.i * N + f.j; }
    int num_vertices() const { return (M + 1) * (N + 1); }
    int num_faces() const { return M * N; }
    VertexIdx vertex(int id) const { return {id / (N + 1), id % (N + 1)}; }
    FaceIdx face(int id) const { return {id / N, id % N}; }

    std::vector<VertexIdx> vertices() const;
    std::vector<VertexIdx> whites() const;
    std::vector<VertexIdx> blacks() const;
    std::vector<FaceIdx> faces() const;
    // (i,j), (i+1,j), (i+1,j+1), (i,j+1)
    static std::array<VertexIdx, 4> corners(FaceIdx f);
    static std::array<VertexIdx, 2> face_whites(FaceIdx f);
    static std::array<VertexIdx, 2> face_blacks(FaceIdx f);
    // Faces around a vertex: (i,j), (i-1,j), (i-1,j-1), (i,j-1).
    static std::array<FaceIdx, 4> vertex_faces(VertexIdx v);
    // w+(1,0), w+(0,1), w-(1,0), w-(0,1)
    static std::array<VertexIdx, 4> star(VertexIdx v);
    // Throws BoundaryVertex unless all four star members exist.
    std::array<VertexIdx, 4> white_star(VertexIdx w) const;
    // Interior whites whose four black neighbours are interior vertices.
    std::vector<VertexIdx> deep_whites() const;
    std::vector<VertexIdx> interior_blacks() const;
};

// A combined-lattice edge joins a vertex to an incident face.
struct CombinedEdge {
    VertexIdx v;
    FaceIdx f;
};

// +1 (horizontal) iff d1*d2 > 0 for d = face position - vertex position.
int edge_sign(VertexIdx v, FaceIdx f);
// Same rule for white-sublattice (diagonal) edges.
int edge_sign(VertexIdx w, VertexIdx w2);

std::vector<CombinedEdge> combined_edges(const Patch& p);

// Values on combined edges, stored as X(face) - X(vertex), indexed by fid*4 + corner slot.
struct CombinedForm {
    Patch patch;
    std::vector<LVec3> value;

    explicit CombinedForm(const Patch& p) : patch(p), value(4 * static_cast<size_t>(p.num_faces())) {}
    LVec3& at(FaceIdx f, int corner) { return value[4 * patch.fid(f) + corner]; }
    const LVec3& at(FaceIdx f, int corner) const { return value[4 * patch.fid(f) + corner]; }
};

struct CombinedIntegral {
    std::vector<LVec3> vertex;  // by vid
    std::vector<LVec3> face;    // by fid
    double residual = 0;        // max elementary cycle sum
};

// Spanning-tree integration from a base vertex. Throws NotClosed when tol >= 0 and the cycle
// residual exceeds tol.
CombinedIntegral integrate_form(const CombinedForm& form, VertexIdx base, const LVec3& base_value,
                                double tol = -1);

// White-sublattice form: one edge per face, joining its two whites; value = X(w2) - X(w1) with
// (w1, w2) = Patch::face_whites(f).
struct WhiteForm {
    Patch patch;
    std::vector<LVec3> value;  // by fid

    explicit WhiteForm(const Patch& p) : patch(p), value(p.num_faces()) {}
};

struct WhiteIntegral {
    std::vector<LVec3> vertex;  // by vid, whites only
    double residual = 0;        // max cycle sum around interior black vertices
};

WhiteIntegral integrate_white_form(const WhiteForm& form, VertexIdx base, const LVec3& base_value,
                                   double tol = -1);

double diameter(const std::vector<LVec3>& pts);

}  // namespace maxlor
