#pragma once

#include <optional>
#include <vector>

#include "maxlor/pattern.hpp"

namespace maxlor {

// Spheres at white vertices, circles at black vertices, contact points at faces.
struct SIsothermicNet {
    Patch patch;
    std::vector<OrientedSphere> white;   // by vid (white entries)
    std::vector<SpacelikeCircle> black;  // by vid (black entries)
    std::vector<LVec3> contact;          // by fid

    // White centres, black circle centres and contact points.
    std::vector<LVec3> points() const;
};

// Null congruence (black radius 0) or contact congruence (black radius rho).
// Black spheres and lines may be missing near the boundary.
struct Congruence {
    Patch patch;
    std::vector<OrientedSphere> white;                // by vid
    std::vector<std::optional<OrientedSphere>> black; // by vid
    std::vector<std::optional<IsotropicLine>> lines;  // by fid

    explicit Congruence(const Patch& p = Patch{})
        : patch(p), white(p.num_vertices()), black(p.num_vertices()), lines(p.num_faces()) {}
    // Max sphere/line oriented-contact residual over all present incidences.
    double contact_residual() const;
};

LVec3 sigma(cplx z);
OrientedSphere polar_sphere(cplx c, double rho);
SIsothermicNet build_koebe_net(const DiskCirclePattern& p);
// Apices of the null-spheres through a Koebe black circle: m/(1+R) and m/(1-R).
std::array<LVec3, 2> koebe_apices(const SpacelikeCircle& c);
// Apex index per black vertex (by vid) for the first congruence, from line-incidence propagation.
std::vector<int> koebe_apex_choice(const SIsothermicNet& net);
std::array<Congruence, 2> koebe_congruences(const SIsothermicNet& net);
// Line through the apex of a black sphere among the common generators of the two face whites.
IsotropicLine face_line(const OrientedSphere& w1, const OrientedSphere& w2, const LVec3& apex, double* miss = nullptr);

struct LiftReport {
    double hyperboloid = 0;  // |<x,x>+1| over sampled black circle points and contact points
    double polar = 0;        // |<m,m> - R^2 + 1| over all polar spheres
    double touching = 0;     // adjacent white spheres, difference convention
    double orthogonal = 0;   // black circle tangent at a contact point vs sphere normal
    double congruence = 0;   // sphere/line contact in both Koebe congruences
    double diameter = 0;
};
LiftReport check_lift(const DiskCirclePattern& p, const SIsothermicNet& net, const std::array<Congruence, 2>& cong);

}  // namespace maxlor
