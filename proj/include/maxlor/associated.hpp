#pragma once

#include "maxlor/incircular.hpp"

namespace maxlor {

struct AssociatedSurface {
    Patch patch;
    double phi = 0;
    std::vector<LVec3> center;   // by vid (whites)
    std::vector<double> radius;  // R* = 1/R, signed, by vid
    std::vector<LVec3> contact;  // by fid: contact point of the face's white edge
    std::vector<std::optional<SpacelikeCircle>> face_circle;  // by vid, interior blacks
    double closedness = 0;
    double circle_residual = 0;  // four contact points versus their circle

    OrientedSphere sphere(VertexIdx w) const { return {center[patch.vid(w)], radius[patch.vid(w)]}; }
};

WhiteForm associated_form(const SIsothermicNet& koebe, double phi);
AssociatedSurface integrate_associated(const WhiteForm& form, const SIsothermicNet& koebe, double phi, double tol = -1);
AssociatedSurface associate(const SIsothermicNet& koebe, double phi, double tol = -1);

struct SimilarityReport {
    double max_deviation = 0;  // | distance ratio - mu |
    double incircle = 0;       // projected quad incircle radius versus mu * r*
};
// Projected associated quads around interior blacks versus the dual quads.
SimilarityReport face_similarity_check(const AssociatedSurface& surf, const SIsothermicNet& dual,
                                       const SIsothermicNet& koebe);

struct ContactPair {
    std::array<Congruence, 2> cong;     // black radii +sin(phi), -sin(phi)
    std::array<double, 2> radius{};     // signed black radius of each congruence
    double radius_deviation = 0;        // contact with white spheres versus the signed radius
    double contact = 0;                 // sphere/line residual
};
ContactPair contact_congruences(const AssociatedSurface& surf);
// Laguerre shift by the congruence's black radius: white radii R - rho, black radius 0.
Congruence null_congruence(const Congruence& contact, double rho);

struct VertexStarReport {
    std::array<double, 4> distance{};   // |Z_i - P0*|
    std::array<double, 4> predicted{};  // R*_0 / cos(alpha_i / 2)
    double gap = 0;                     // skewness of intersected generators
};
VertexStarReport vertex_star_analysis(const AssociatedSurface& surf, const Congruence& contact,
                                      const SIsothermicNet& koebe, VertexIdx w);

}  // namespace maxlor
