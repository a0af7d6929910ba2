#pragma once

#include <map>

#include "maxlor/koebe.hpp"

namespace maxlor {

struct Circle2 {
    cplx center;
    double radius = 0;  // signed
};

// Oriented line; it touches the oriented circle (c, r) iff cross(dir, c - point) = r.
struct Line2 {
    cplx point;
    cplx dir;  // unit
};

struct IncircularNet {
    Patch patch;
    std::vector<Circle2> white;               // by vid
    std::vector<std::optional<cplx>> black;   // by vid
    std::vector<std::optional<Line2>> lines;  // by fid

    explicit IncircularNet(const Patch& p = Patch{})
        : patch(p), white(p.num_vertices()), black(p.num_vertices()), lines(p.num_faces()) {}
    // Max tangency / incidence defect over present lines.
    double residual() const;
};

double cross2(cplx a, cplx b);
double signed_distance(const Line2& l, cplx x);

IncircularNet project(const Congruence& c);
cplx x_planar_complex(const IncircularNet& net, VertexIdx w);
// Real part after checking |Im| <= tol * |X|; throws NonRealX.
double x_planar(const IncircularNet& net, VertexIdx w, double tol = 1e-8);
double x_lorentz(const Congruence& c, VertexIdx w);
// X at every white vertex whose four black neighbours are present.
std::map<int, double> x_field(const Congruence& c);
std::map<int, double> x_field(const IncircularNet& net);

// Both common oriented tangents of two oriented circles (equal for internally tangent circles).
std::array<Line2, 2> common_tangents(const Circle2& a, const Circle2& b);
// Each line mirrored in its incircles' line of centres; black points from consecutive intersections.
IncircularNet other_tangents(const IncircularNet& net);
double line_distance(const Line2& a, const Line2& b);

struct ConcurrencyReport {
    cplx point;
    double max_distance = 0;
    int lines = 0;
};
ConcurrencyReport koebe_concurrency_test(const IncircularNet& p1, const IncircularNet& p2);
// Lines through the midpoints of paired black points, along their difference; product of the four
// intersection ratios (-1 for parallel neighbours). Throws DegenerateStar when a pair coincides.
cplx menelaus_maximal_test(const IncircularNet& p1, const IncircularNet& p2, VertexIdx w);

struct TangentCircleReport {
    double max_deviation = 0;  // | signed distance - oriented radius |
    double min_distance = 0, max_distance = 0;
    int samples = 0;
};
// Other tangents of p1 around each black vertex versus the black point of p2. With p1 the
// projection of the congruence with black radius sin(phi), the oriented radius is -2 sin(phi);
// with the roles swapped it is +2 sin(phi).
TangentCircleReport assoc_tangent_circle_test(const IncircularNet& p1, const IncircularNet& p2, double radius);

}  // namespace maxlor
