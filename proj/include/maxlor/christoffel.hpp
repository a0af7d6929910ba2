#pragma once

#include "maxlor/koebe.hpp"

namespace maxlor {

// Positions per combined node: white centres, black circle centres, contact points.
CombinedForm dual_form_isothermic(const SIsothermicNet& net);
// Congruence dual of `cong[k]`: white half-edges divided by R^2, black half-edges by r^2; black
// half-edges with edge sign -1 use the apex of the partner congruence.
CombinedForm dual_form_congruence(const SIsothermicNet& net, const std::array<Congruence, 2>& cong, int k);

struct DualResult {
    SIsothermicNet net;
    std::array<Congruence, 2> cong;
    double residual = 0;                      // isothermic form
    std::array<double, 2> cong_residual{};    // congruence forms
    std::array<double, 2> white_agreement{};  // congruence white part vs isothermic dual
};

// Integrates from white (0,1) at the origin. tol < 0 disables the NotClosed check.
DualResult dualize(const SIsothermicNet& koebe, const std::array<Congruence, 2>& cong, double tol = -1);
SIsothermicNet dualize_net(const SIsothermicNet& net, double tol = -1);

// Best fit X ~ s*Y + t; returns max residual.
double similarity_residual(const std::vector<LVec3>& X, const std::vector<LVec3>& Y);
double translation_residual(const std::vector<LVec3>& X, const std::vector<LVec3>& Y);

struct MaximalReport {
    double coplanarity = 0;  // max |det| of the four black centres around interior whites
};
MaximalReport check_maximal(const SIsothermicNet& net);

struct SteinerFace {
    VertexIdx black;
    double A0 = 0, H = 0, K = 0;
    double refit = 0;  // coefficient change when a fourth sample is added
};
// Offset quads around interior blacks: centres + t * normals (per white vid).
std::vector<SteinerFace> steiner_coefficients(const SIsothermicNet& net, const std::vector<LVec3>& normals, double h);

}  // namespace maxlor
