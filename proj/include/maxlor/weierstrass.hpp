#pragma once

#include "maxlor/incircular.hpp"

namespace maxlor {

struct WFrame {
    LVec3 N;        // edge normal at the face (hyperboloid point)
    LVec3 T_white;  // unit tangent, direction from conj(c(w1) - c(w2))
    LVec3 T_black;  // unit tangent, direction from conj(c(b1) - c(b2))
};

double w_radius_white(cplx c, double rho);
double w_radius_black(cplx c, double rho);
// Unit tangent of the hyperboloid at sigma(z) in the direction conj(c1 - c2).
LVec3 w_tangent(cplx z, cplx c1, cplx c2);
WFrame w_frame(const DiskCirclePattern& p, FaceIdx f);
// Centre difference of the two dual white spheres: h*(w) - h*(w2).
LVec3 w_edge_white(const DiskCirclePattern& p, VertexIdx w, VertexIdx w2, FaceIdx f);
// (h*(w) - h*(f), c*(b) - h*(f)) for the given congruence (0 or 1).
std::pair<LVec3, LVec3> w_contact_increments(const DiskCirclePattern& p, VertexIdx b, VertexIdx w, FaceIdx f,
                                             int congruence);

struct WeierstrassResult {
    SIsothermicNet net;
    std::array<Congruence, 2> cong;
    std::array<IncircularNet, 2> planar;
    double residual = 0;  // max cycle residual of the three integrated forms
    double frame = 0;     // max frame orthonormality defect
    double isotropy = 0;  // max |<dc, dc>| over black contact increments
};

WeierstrassResult assemble_weierstrass(const DiskCirclePattern& p);

}  // namespace maxlor
